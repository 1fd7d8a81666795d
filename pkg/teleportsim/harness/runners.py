import numpy as np

from teleportsim.harness import report
from teleportsim.harness.report import OutcomeReport, Report, TableRowReport
from teleportsim.protocol import extensions, kernel, linalg, oracle
from teleportsim.utils.errors import UnrecoverableOutcomeError
from teleportsim.utils.logger import logger


def _scenario_fields(scenario):
    return dict(dim=scenario.dim, tolerance=scenario.tolerance, normalized=scenario.normalize)


def _log_outcome(outcome):
    if outcome.status == report.UNRECOVERABLE:
        logger.error(f'outcome {outcome.index}: {outcome.diagnostic}')
    elif outcome.status == report.PROBABILISTIC:
        logger.warning(f'outcome {outcome.index}: X is not unitary, teleportation is probabilistic')


def analyze_outcome(index, a, b, tol):
    m = kernel.compose(b, a)
    values = [float(s) for s in linalg.singular_values(m.matrix)]
    try:
        decomposition = kernel.decompose(m)
        u = kernel.correction_operator(m)
    except UnrecoverableOutcomeError as e:
        return OutcomeReport(index, report.UNRECOVERABLE, singular_values=values, faithful=False, diagnostic=str(e))

    faithful = kernel.is_faithful(m, tol)
    outcome = OutcomeReport(
        index,
        report.FAITHFUL if faithful else report.PROBABILISTIC,
        rho=decomposition.rho,
        x=decomposition.x,
        faithful=faithful,
        correction=u,
        singular_values=values,
    )
    if m.normalized:
        # without a state only a faithful outcome has a definite probability, rho^2
        outcome.outcome_probability = decomposition.rho ** 2 if faithful else None
        outcome.success_probability = kernel.filtered_success_probability(m)
    return outcome


def run_analyze(scenario):
    a = scenario.channel_matrix()
    outcomes = [
        analyze_outcome(index, a, b, scenario.tolerance)
        for index, b in enumerate(scenario.measurement_operators())
    ]
    for outcome in outcomes:
        _log_outcome(outcome)
    return Report.from_outcomes('analyze', outcomes, **_scenario_fields(scenario))


def _oracle_residual(alpha, a, b, outcome):
    m = kernel.compose(b, a)
    closed_form = kernel.project_coefficients(m, alpha)
    brute_force = oracle.project(oracle.build_joint(alpha, a), oracle.build_measurement_state(b))
    residual = float(np.max(np.abs(closed_form - brute_force)))
    final_state, probability = oracle.oracle_teleport(alpha, a, b, outcome.correction)
    residual = max(residual, abs(probability - outcome.outcome_probability))
    return max(residual, linalg.global_phase_distance(final_state.amplitudes, outcome.corrected_state.amplitudes))


def teleport_outcome(index, alpha, a, b, tol):
    try:
        outcome = kernel.teleport(alpha, a, b, tol)
    except UnrecoverableOutcomeError as e:
        m = kernel.compose(b, a)
        return OutcomeReport(
            index,
            report.UNRECOVERABLE,
            faithful=False,
            singular_values=[float(s) for s in linalg.singular_values(m.matrix)],
            outcome_probability=kernel.outcome_probability(m, alpha),
            success_probability=0.0,
            diagnostic=str(e),
        )
    residual = _oracle_residual(alpha, a, b, outcome) if alpha.dim <= oracle.MAX_ORACLE_DIM else None
    return OutcomeReport(
        index,
        report.FAITHFUL if outcome.faithful else report.PROBABILISTIC,
        rho=outcome.rho,
        x=kernel.decompose(kernel.compose(b, a)).x,
        faithful=outcome.faithful,
        correction=outcome.correction,
        singular_values=list(outcome.singular_values),
        outcome_probability=outcome.outcome_probability,
        success_probability=outcome.success_probability,
        fidelity=outcome.fidelity,
        unitary_fidelity=outcome.unitary_fidelity,
        oracle_residual=residual,
    )


def run_teleport(scenario):
    alpha = scenario.alpha()
    a = scenario.channel_matrix()
    outcomes = [
        teleport_outcome(index, alpha, a, b, scenario.tolerance)
        for index, b in enumerate(scenario.measurement_operators())
    ]
    for outcome in outcomes:
        _log_outcome(outcome)
    return Report.from_outcomes('teleport', outcomes, **_scenario_fields(scenario))


def run_table1():
    rows = []
    for index, row in enumerate(extensions.generate_table1()):
        if row.printed_factor == 1:
            annotation = 'exact'
        elif row.printed_factor == -1:
            annotation = 'printed with an overall factor -1'
        else:
            annotation = 'differs from the printed entry'
        rows.append(TableRowReport(
            index=index,
            a=row.a,
            b=row.b,
            ba=row.ba,
            ba_t=row.ba_t,
            u=row.u,
            sign_matches_printed=row.sign_matches_printed,
            printed_factor=row.printed_factor,
            annotation=annotation,
        ))
    logger.info(f'table: {sum(not r.sign_matches_printed for r in rows)} of {len(rows)} rows differ in sign')
    return Report.from_status('table1', report.FAITHFUL, dim=2, normalized=False, faithful=True, table_rows=rows)
