import os

import numpy as np
import pytest

from teleportsim.harness import scenario
from teleportsim.tests.conftest import SAMPLES_PATH
from teleportsim.utils.errors import ScenarioParseError, ScenarioValidationError
from teleportsim.utils.keyword import BELL, WEYL, Keyword


def load(name):
    with open(os.path.join(SAMPLES_PATH, name), 'rb') as f:
        return scenario.parse_scenario(f.read())


def test_parse_bell_bell():
    s = load('bell_bell.json')
    assert s.dim == 2
    assert s.normalize
    assert s.tolerance == 1e-9
    assert np.array_equal(s.channel, np.eye(2))
    assert len(s.measurement) == 1
    assert np.array_equal(s.measurement[0], np.eye(2))
    assert np.allclose(s.channel_matrix().matrix, np.eye(2) / np.sqrt(2), atol=1e-15)
    assert s.alpha().dim == 2


def test_parse_keyword_family():
    s = load('bell_family.json')
    assert s.measurement == BELL
    assert len(s.measurement_operators()) == 4
    assert np.allclose(s.alpha().amplitudes, [0.6, 0.8j], atol=1e-15)


def test_parse_weyl():
    s = scenario.parse_scenario('{"dim": 3, "channel": [[[1, 0], [0, 0], [0, 0]], [[0, 0], [1, 0], [0, 0]], [[0, 0], [0, 0], [1, 0]]], "measurement": " Weyl "}')
    assert s.measurement == WEYL
    assert len(s.measurement_operators()) == 9
    assert s.state is None


def test_parse_family_object():
    s = scenario.parse_scenario(
        '{"dim": 2, "channel": [[1, 0], [0, 0], [0, 0], [1, 0]],'
        ' "measurement": {"family": [[[1, 0], [0, 0], [0, 0], [1, 0]], [[0, 0], [1, 0], [1, 0], [0, 0]]]}}'
    )
    operators = s.measurement_operators()
    assert len(operators) == 2
    assert np.allclose(operators[1].matrix, np.array([[0, 1], [1, 0]]) / np.sqrt(2), atol=1e-15)


def test_parse_raw_option():
    s = scenario.parse_scenario(
        '{"dim": 1, "channel": [[2, 0]], "measurement": [[3, 0]], "options": {"normalize": false, "tolerance": 0.5}}'
    )
    assert not s.normalize
    assert s.tolerance == 0.5
    assert s.channel_matrix().matrix[0, 0] == 2
    assert not s.measurement_operators()[0].normalized


def test_parse_default_tolerance_from_environment(monkeypatch):
    monkeypatch.setenv('TELEPORTSIM_TOLERANCE', '1e-6')
    s = scenario.parse_scenario('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]]}')
    assert s.tolerance == 1e-6


def test_parse_unknown_field_warns(caplog):
    scenario.parse_scenario('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]], "comment": "x"}')
    assert 'unknown scenario field "comment" ignored' in caplog.text


def test_parse_malformed():
    with pytest.raises(ScenarioParseError) as e:
        load('malformed.json')
    assert e.value.line == 4
    assert 'line 4' in str(e.value)


def test_parse_not_utf8():
    with pytest.raises(ScenarioParseError):
        scenario.parse_scenario(b'\xff\xfe{}')


def test_parse_missing_channel():
    with pytest.raises(ScenarioValidationError) as e:
        load('missing_channel.json')
    assert e.value.path == 'channel'
    assert str(e.value) == 'channel: missing required field'


@pytest.mark.parametrize('text,path', [
    ('[]', '$'),
    ('{"dim": 0, "channel": [], "measurement": "bell"}', 'dim'),
    ('{"dim": true, "channel": [], "measurement": "bell"}', 'dim'),
    ('{"dim": 2, "channel": [[1, 0]], "measurement": "bell"}', 'channel'),
    ('{"dim": 1, "channel": [[1, "0"]], "measurement": [[1, 0]]}', 'channel[0]'),
    ('{"dim": 2, "channel": [[[1, 0], [0, 0]], [[0, 0], [1]]], "measurement": "bell"}', 'channel[1][1]'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": "ghz"}', 'measurement'),
    ('{"dim": 3, "channel": [[1, 0], [0, 0], [0, 0], [0, 0], [1, 0], [0, 0], [0, 0], [0, 0], [1, 0]], "measurement": "bell"}', 'measurement'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": {"family": []}}', 'measurement'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": {"family": [[[1, 0]], [[1]]]}}', 'measurement.family[1][0][0]'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]], "state": [[1, 0], [0, 0]]}', 'state'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]], "options": []}', 'options'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]], "options": {"normalize": 1}}', 'options.normalize'),
    ('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]], "options": {"tolerance": -1}}', 'options.tolerance'),
])
def test_parse_validation_paths(text, path):
    with pytest.raises(ScenarioValidationError) as e:
        scenario.parse_scenario(text)
    assert e.value.path == path


def test_alpha_without_state():
    s = scenario.parse_scenario('{"dim": 1, "channel": [[1, 0]], "measurement": [[1, 0]]}')
    with pytest.raises(ScenarioValidationError) as e:
        s.alpha()
    assert e.value.path == 'state'


def test_alpha_raw_must_be_unit_norm():
    s = scenario.parse_scenario(
        '{"dim": 2, "state": [[1, 0], [1, 0]], "channel": [[1, 0], [0, 0], [0, 0], [1, 0]],'
        ' "measurement": "bell", "options": {"normalize": false}}'
    )
    with pytest.raises(ScenarioValidationError):
        s.alpha()


def test_keyword_from_string():
    assert Keyword.from_string('BELL') == BELL
    assert BELL != WEYL
    assert BELL != 'bell'
    with pytest.raises(ValueError):
        Keyword.from_string('ghz')
