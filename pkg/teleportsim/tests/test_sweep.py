import json

import pytest

from teleportsim.harness import randomness, report, sweep


def test_even_trial_is_faithful(rng):
    result = sweep.run_trial(0, rng, [3], 1e-9)
    assert result.dim == 3
    assert result.oracle_checked
    assert result.classification == {report.FAITHFUL: 9, report.PROBABILISTIC: 0, report.UNRECOVERABLE: 0}
    assert result.min_faithful_fidelity >= 1 - 1e-9
    assert result.completeness_residual <= 1e-12


def test_odd_trial_is_generic(rng):
    result = sweep.run_trial(1, rng, [2], 1e-9)
    assert result.classification[report.PROBABILISTIC] == 4
    assert result.oracle_residual <= 1e-12
    assert result.roundtrip_residual <= 1e-10
    assert result.errors == 0


def test_trial_generators_are_independent_of_order():
    first = randomness.trial_generators(7, 3)
    second = randomness.trial_generators(7, 3)
    assert [g.integers(1 << 30) for g in reversed(first)] == [g.integers(1 << 30) for g in reversed(second)]
    assert first[0].integers(1 << 30) != first[1].integers(1 << 30)


def test_merge_keeps_extremes():
    summary = report.SweepSummary(seed=0, trials=2, dims=[2])
    sweep.merge(summary, sweep.TrialResult(index=0, dim=2, oracle_checked=True, oracle_residual=1e-14))
    sweep.merge(summary, sweep.TrialResult(index=1, dim=2, oracle_residual=1e-15, min_faithful_fidelity=0.5, errors=1))
    assert summary.oracle_checked_trials == 1
    assert summary.max_oracle_residual == 1e-14
    assert summary.min_faithful_fidelity == 0.5
    assert summary.errors == 1


def test_run_sweep_bounds():
    rep = sweep.run_sweep(42, 100, [2, 3, 4], 1e-9)
    assert rep.mode == 'sweep'
    assert rep.status == report.COMPLETED
    assert rep.exit_code == 0
    summary = rep.sweep
    assert summary.trials == 100
    assert summary.oracle_checked_trials == 100
    assert summary.max_faithful_oracle_residual <= 1e-12
    assert summary.max_oracle_residual <= 1e-12
    assert summary.max_completeness_residual <= 1e-12
    assert summary.max_roundtrip_residual <= 1e-10
    assert summary.min_faithful_fidelity >= 1 - 1e-9
    assert summary.classification[report.FAITHFUL] >= 50 * 4
    assert summary.classification[report.PROBABILISTIC] >= 50 * 4
    assert summary.errors == 0


def test_run_sweep_is_deterministic():
    first = sweep.run_sweep(42, 100, [2, 3, 4], 1e-9).to_json()
    second = sweep.run_sweep(42, 100, [4, 3, 2], 1e-9).to_json()
    assert first == second
    assert json.loads(first)['sweep']['seed'] == 42


def test_run_sweep_workers_do_not_change_the_report():
    serial = sweep.run_sweep(3, 20, [2, 3], 1e-9).to_json()
    threaded = sweep.run_sweep(3, 20, [2, 3], 1e-9, workers=4).to_json()
    assert serial == threaded


@pytest.mark.slow
def test_run_sweep_large_dims():
    rep = sweep.run_sweep(1, 10, [8], 1e-9)
    assert rep.sweep.max_oracle_residual <= 1e-11
    assert rep.sweep.errors == 0
