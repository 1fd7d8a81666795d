import json
import os

import pytest

from teleportsim import main
from teleportsim.harness import report, sweep
from teleportsim.tests.conftest import SAMPLES_PATH


def sample(name):
    return os.path.join(SAMPLES_PATH, name)


@pytest.fixture(autouse=True)
def restore_environment(monkeypatch):
    monkeypatch.setenv('TELEPORTSIM_TOLERANCE', '1e-9')
    monkeypatch.setenv('TELEPORTSIM_LOG_LEVEL', 'WARNING')


def run(capsys, *argv):
    exit_code = main.main(list(argv))
    return exit_code, json.loads(capsys.readouterr().out)


def test_table1(capsys):
    exit_code, data = run(capsys, 'table1')
    assert exit_code == 0
    assert data['mode'] == 'table1'
    assert len(data['table_rows']) == 16


def test_teleport_bell_bell(capsys):
    exit_code, data = run(capsys, 'teleport', sample('bell_bell.json'))
    assert exit_code == 0
    assert data['status'] == 'faithful'
    assert data['outcomes'][0]['rho'] == pytest.approx(0.5, abs=1e-12)


def test_exit_codes(capsys):
    assert run(capsys, 'teleport', sample('partially_entangled.json'))[0] == 2
    assert run(capsys, 'teleport', sample('rank_deficient.json'))[0] == 3
    assert run(capsys, 'analyze', sample('rank_deficient.json'))[0] == 3


def test_tolerance_flag_overrides_scenario(capsys):
    exit_code, data = run(capsys, '--tolerance', '0.9', 'analyze', sample('partially_entangled.json'))
    assert exit_code == 0
    assert data['tolerance'] == 0.9
    assert os.environ['TELEPORTSIM_TOLERANCE'] == '0.9'


def test_raw_teleport_is_rejected(capsys):
    exit_code, data = run(capsys, '--raw', 'teleport', sample('bell_bell.json'))
    assert exit_code == 64
    assert data['status'] == 'error'
    assert 'normalized' in data['diagnostic']


def test_raw_analyze(capsys):
    exit_code, data = run(capsys, '--raw', 'analyze', sample('bell_bell.json'))
    assert exit_code == 0
    assert data['normalized'] is False
    assert data['outcomes'][0]['rho'] == pytest.approx(1.0, abs=1e-12)
    assert data['outcome_probabilities'] == [None]


def test_malformed_scenario(capsys):
    exit_code, data = run(capsys, 'analyze', sample('malformed.json'))
    assert exit_code == 64
    assert 'line 4' in data['diagnostic']


def test_missing_field(capsys):
    exit_code, data = run(capsys, 'analyze', sample('missing_channel.json'))
    assert exit_code == 64
    assert data['diagnostic'].startswith('channel:')


def test_missing_file(capsys, tmp_path):
    exit_code, data = run(capsys, 'analyze', str(tmp_path / 'nothing.json'))
    assert exit_code == 64
    assert data['mode'] == 'analyze'


def test_output_file(capsys, tmp_path):
    output = tmp_path / 'report.json'
    assert main.main(['-o', str(output), 'table1']) == 0
    assert capsys.readouterr().out == ''
    assert json.loads(output.read_text())['exit_code'] == 0


@pytest.mark.parametrize('argv', [
    [],
    ['frobnicate'],
    ['analyze'],
    ['--tolerance', '-1', 'table1'],
    ['sweep', '--trials', '0'],
    ['sweep', '--dims', '2,x'],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as e:
        main.main(argv)
    assert e.value.code == 64


def test_sweep_arguments(capsys, mocker):
    run_sweep = mocker.patch.object(
        sweep, 'run_sweep',
        return_value=report.Report.from_status('sweep', report.COMPLETED),
    )
    exit_code, data = run(capsys, 'sweep', '--seed', '5', '--trials', '3', '--dims', '3,2', '--workers', '2')
    assert exit_code == 0
    run_sweep.assert_called_once_with(5, 3, [3, 2], 1e-9, 2)
    assert data['status'] == 'completed'


def test_verbose_sets_log_level(capsys, mocker):
    set_level = mocker.patch('teleportsim.utils.logger.set_level')
    run(capsys, '-v', 'table1')
    set_level.assert_called_once_with('DEBUG')


def test_unwritable_output(tmp_path, caplog):
    output = tmp_path / 'missing' / 'report.json'
    assert main.main(['-o', str(output), 'table1']) == 64
    assert not output.exists()
    assert 'cannot write the report' in caplog.text
