"""
Seeded randomized checks of the closed form against the oracle.

Even trials use a maximally entangled channel with a rotated generalized Bell family, so
every outcome is faithful; odd trials use a generic channel with a random orthonormal
family. Trial results are merged in trial-index order.
"""
import concurrent.futures
import dataclasses
import typing

import numpy as np

from teleportsim.harness import randomness, report
from teleportsim.harness.report import Report, SweepSummary
from teleportsim.protocol import extensions, kernel, linalg, oracle
from teleportsim.utils.errors import TeleportSimError, UnrecoverableOutcomeError
from teleportsim.utils.logger import logger


@dataclasses.dataclass
class TrialResult:
    index: int
    dim: int
    oracle_checked: bool = False
    oracle_residual: float = 0.0
    faithful_oracle_residual: float = 0.0
    completeness_residual: float = 0.0
    roundtrip_residual: float = 0.0
    min_faithful_fidelity: float = 1.0
    classification: typing.Dict[str, int] = dataclasses.field(
        default_factory=lambda: {report.FAITHFUL: 0, report.PROBABILISTIC: 0, report.UNRECOVERABLE: 0}
    )
    errors: int = 0


def _trial_inputs(index, rng, dims):
    n = int(dims[rng.integers(len(dims))])
    alpha = randomness.random_state(rng, n)
    if index % 2 == 0:
        a = randomness.maximally_entangled_channel(rng, n)
        family = randomness.rotated_clock_shift_family(rng, extensions.clock_shift_family(n))
    else:
        a = randomness.random_channel(rng, n)
        family = randomness.random_orthonormal_family(rng, n)
    return n, alpha, a, family


def _check_outcome(result, alpha, a, b, psi, tol):
    m = kernel.compose(b, a)
    v = kernel.project_coefficients(m, alpha)
    faithful = kernel.is_faithful(m, tol)
    if psi is not None:
        residual = float(np.max(np.abs(v - oracle.project(psi, oracle.build_measurement_state(b)))))
        result.oracle_residual = max(result.oracle_residual, residual)
        if faithful:
            result.faithful_oracle_residual = max(result.faithful_oracle_residual, residual)

    try:
        u = kernel.correction_operator(m)
    except UnrecoverableOutcomeError:
        result.classification[report.UNRECOVERABLE] += 1
        return kernel.outcome_probability(m, alpha)

    rho = kernel.decompose(m).rho
    roundtrip = float(np.max(np.abs(kernel.apply_correction(u, v) - rho * alpha.amplitudes)))
    result.roundtrip_residual = max(result.roundtrip_residual, roundtrip)
    if faithful:
        result.classification[report.FAITHFUL] += 1
        unitary_state = linalg.matmul(linalg.closest_unitary(u), v)
        overlap = np.vdot(alpha.amplitudes, unitary_state / linalg.frobenius_norm(unitary_state))
        result.min_faithful_fidelity = min(result.min_faithful_fidelity, float(abs(overlap) ** 2))
    else:
        result.classification[report.PROBABILISTIC] += 1
    return kernel.outcome_probability(m, alpha)


def run_trial(index, rng, dims, tol):
    n, alpha, a, family = _trial_inputs(index, rng, dims)
    result = TrialResult(index=index, dim=n)
    psi = oracle.build_joint(alpha, a) if n <= oracle.MAX_ORACLE_DIM else None
    result.oracle_checked = psi is not None

    total_probability = 0.0
    for b in family:
        try:
            total_probability += _check_outcome(result, alpha, a, b, psi, tol)
        except TeleportSimError as e:
            logger.warning(f'trial {index}: {e}')
            result.errors += 1
    result.completeness_residual = abs(total_probability - 1.0)
    return result


def merge(summary, result):
    summary.oracle_checked_trials += int(result.oracle_checked)
    summary.max_oracle_residual = max(summary.max_oracle_residual, result.oracle_residual)
    summary.max_faithful_oracle_residual = max(summary.max_faithful_oracle_residual, result.faithful_oracle_residual)
    summary.max_completeness_residual = max(summary.max_completeness_residual, result.completeness_residual)
    summary.max_roundtrip_residual = max(summary.max_roundtrip_residual, result.roundtrip_residual)
    summary.min_faithful_fidelity = min(summary.min_faithful_fidelity, result.min_faithful_fidelity)
    for status, count in result.classification.items():
        summary.classification[status] += count
    summary.errors += result.errors


def run_sweep(seed, trials, dims, tol, workers=1):
    assert trials > 0, 'a sweep needs at least one trial'
    dims = sorted(set(dims))
    generators = randomness.trial_generators(seed, trials)
    run = lambda index: run_trial(index, generators[index], dims, tol)

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run, range(trials)))
    else:
        results = [run(index) for index in range(trials)]

    summary = SweepSummary(seed=seed, trials=trials, dims=dims)
    for result in sorted(results, key=lambda r: r.index):
        merge(summary, result)
    logger.info(
        f'sweep: {trials} trials, max oracle residual {summary.max_oracle_residual:.3e}, '
        f'classification {summary.classification}'
    )
    return Report.from_status('sweep', report.COMPLETED, tolerance=tol, normalized=True, sweep=summary)
