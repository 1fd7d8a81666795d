import dataclasses
import typing

import numpy as np

from teleportsim.utils import json_encoding


EXIT_FAITHFUL = 0
EXIT_PROBABILISTIC = 2
EXIT_UNRECOVERABLE = 3
EXIT_USAGE = 64

FAITHFUL = 'faithful'
PROBABILISTIC = 'probabilistic'
UNRECOVERABLE = 'unrecoverable'
COMPLETED = 'completed'
ERROR = 'error'

STATUS_EXIT_CODES = {
    FAITHFUL: EXIT_FAITHFUL,
    PROBABILISTIC: EXIT_PROBABILISTIC,
    UNRECOVERABLE: EXIT_UNRECOVERABLE,
    COMPLETED: EXIT_FAITHFUL,
    ERROR: EXIT_USAGE,
}
STATUS_SEVERITY = (FAITHFUL, PROBABILISTIC, UNRECOVERABLE)


def worst_status(statuses):
    return max(statuses, key=STATUS_SEVERITY.index, default=FAITHFUL)


@dataclasses.dataclass
class OutcomeReport:
    index: int
    status: str
    rho: typing.Optional[float] = None
    x: typing.Optional[np.ndarray] = None
    faithful: typing.Optional[bool] = None
    correction: typing.Optional[np.ndarray] = None
    singular_values: typing.Optional[typing.List[float]] = None
    outcome_probability: typing.Optional[float] = None
    success_probability: typing.Optional[float] = None
    fidelity: typing.Optional[float] = None
    unitary_fidelity: typing.Optional[float] = None
    oracle_residual: typing.Optional[float] = None
    diagnostic: typing.Optional[str] = None


@dataclasses.dataclass
class TableRowReport:
    index: int
    a: np.ndarray
    b: np.ndarray
    ba: np.ndarray
    ba_t: np.ndarray
    u: np.ndarray
    sign_matches_printed: bool
    printed_factor: typing.Optional[int]
    annotation: str


@dataclasses.dataclass
class SweepSummary:
    seed: int
    trials: int
    dims: typing.List[int]
    oracle_checked_trials: int = 0
    max_oracle_residual: float = 0.0
    max_faithful_oracle_residual: float = 0.0
    max_completeness_residual: float = 0.0
    max_roundtrip_residual: float = 0.0
    min_faithful_fidelity: float = 1.0
    classification: typing.Dict[str, int] = dataclasses.field(
        default_factory=lambda: {FAITHFUL: 0, PROBABILISTIC: 0, UNRECOVERABLE: 0}
    )
    errors: int = 0


@dataclasses.dataclass
class Report:
    """
    Every field is serialized on every exit path; fields a command does not produce are null.
    """
    mode: str
    status: str
    exit_code: int
    dim: typing.Optional[int] = None
    tolerance: typing.Optional[float] = None
    normalized: typing.Optional[bool] = None
    faithful: typing.Optional[bool] = None
    outcomes: typing.Optional[typing.List[OutcomeReport]] = None
    outcome_probabilities: typing.Optional[typing.List[typing.Optional[float]]] = None
    success_probabilities: typing.Optional[typing.List[typing.Optional[float]]] = None
    fidelities: typing.Optional[typing.List[typing.Optional[float]]] = None
    oracle_residual: typing.Optional[float] = None
    table_rows: typing.Optional[typing.List[TableRowReport]] = None
    sweep: typing.Optional[SweepSummary] = None
    diagnostic: typing.Optional[str] = None

    @classmethod
    def from_status(cls, mode, status, **kwargs):
        return cls(mode=mode, status=status, exit_code=STATUS_EXIT_CODES[status], **kwargs)

    @classmethod
    def from_outcomes(cls, mode, outcomes, **kwargs):
        """Aggregates per-outcome entries; the report status is the worst outcome status."""
        recorded = [o.oracle_residual for o in outcomes if o.oracle_residual is not None]
        return cls.from_status(
            mode,
            worst_status(o.status for o in outcomes),
            faithful=all(o.faithful for o in outcomes),
            outcomes=outcomes,
            outcome_probabilities=[o.outcome_probability for o in outcomes],
            success_probabilities=[o.success_probability for o in outcomes],
            fidelities=[o.fidelity for o in outcomes],
            oracle_residual=max(recorded) if recorded else None,
            **kwargs,
        )

    def to_json(self):
        return json_encoding.dumps(self)
