"""
Closed-form teleportation: compose the measurement with the channel, split off the common
factor rho, and build Bob's correction U = (X^t)^-1.
"""
import numpy as np

from teleportsim.protocol import linalg
from teleportsim.protocol.types import (
    ChannelDecomposition,
    ComposedMap,
    QuditState,
    TeleportOutcome,
    require_same_dim,
)
from teleportsim.utils import environment
from teleportsim.utils.errors import (
    ContractError,
    DegenerateChannelError,
    ShapeError,
    SingularMatrixError,
    UnrecoverableOutcomeError,
)
from teleportsim.utils.logger import logger


ZERO_TOLERANCE = 1e-12


def _tolerance(tol):
    return environment.get_default_tolerance() if tol is None else tol


def compose(b, a):
    """
    M = conj(B) A.

    The conjugate comes from the bra <phi'|_12; for the real measurement matrices of the
    Bell table it is the plain product BA.
    """
    require_same_dim(b, a)
    matrix = linalg.matmul(linalg.conjugate(b.matrix), a.matrix)
    return ComposedMap(matrix, normalized=a.normalized and b.normalized)


def project_coefficients(m, alpha):
    require_same_dim(m, alpha)
    return linalg.matmul(linalg.transpose(m.matrix), alpha.amplitudes)


def decompose(m, values=None):
    if np.max(np.abs(m.matrix)) <= ZERO_TOLERANCE:
        raise DegenerateChannelError('composed map is zero: the outcome never occurs')
    if values is None:
        values = linalg.singular_values(m.matrix)
    rho = float(values[0])
    x = linalg.as_matrix(m.matrix / rho)
    return ChannelDecomposition(rho=rho, x=x)


def _spread(values):
    if values[0] == 0.0:
        return np.inf
    return float((values[0] - values[-1]) / values[0])


def singular_value_spread(m):
    return _spread(linalg.singular_values(m.matrix))


def is_faithful(m, tol=None):
    """X is unitary, i.e. every singular value of M is the same nonzero number."""
    return singular_value_spread(m) <= _tolerance(tol)


def correction_operator(m, rho=None):
    if rho is None:
        rho = decompose(m).rho
    try:
        inverse_transpose = linalg.inverse(linalg.transpose(m.matrix))
    except SingularMatrixError as e:
        raise UnrecoverableOutcomeError(f'composed map is singular, Bob cannot recover the state: {e}') from e
    return linalg.as_matrix(rho * inverse_transpose)


def apply_correction(u, v):
    u, v = np.asarray(u), np.asarray(v)
    if u.shape[1] != v.shape[0]:
        raise ShapeError(f'correction of shape {u.shape} cannot act on a vector of length {v.shape[0]}')
    return linalg.matmul(u, v)


def fidelity(p, q):
    if p.dim != q.dim:
        raise ShapeError(f'cannot compare states of dimension {p.dim} and {q.dim}')
    overlap = np.vdot(p.amplitudes, q.amplitudes)
    return float(min(1.0, abs(overlap) ** 2))


def outcome_probability(m, alpha):
    if not m.normalized:
        raise ContractError('outcome probabilities need a normalized channel and measurement')
    v = project_coefficients(m, alpha)
    return float(np.vdot(v, v).real)


def filtered_success_probability(m):
    """Probability of the outcome AND a successful filter: sigma_min(M)^2, for any input."""
    return float(linalg.singular_values(m.matrix)[-1] ** 2)


def teleport(alpha, a, b, tol=None):
    tol = _tolerance(tol)
    if not (a.normalized and b.normalized):
        raise ContractError('teleport needs a normalized channel and measurement')
    require_same_dim(alpha, a, b)

    m = compose(b, a)
    values = linalg.singular_values(m.matrix)
    decomposition = decompose(m, values)
    u = correction_operator(m, decomposition.rho)
    v = project_coefficients(m, alpha)
    corrected_state = QuditState.from_amplitudes(apply_correction(u, v), normalize=True)

    probability = outcome_probability(m, alpha)
    faithful = _spread(values) <= tol
    if faithful:
        success_probability = probability
    else:
        success_probability = float(values[-1] ** 2)
        logger.debug(f'outcome is probabilistic, filter succeeds with joint probability {success_probability:.6g}')

    unitary_state = QuditState.from_amplitudes(
        apply_correction(linalg.closest_unitary(u), v),
        normalize=True,
    )

    logger.debug(f'teleport: rho={decomposition.rho:.6g} faithful={faithful} p={probability:.6g}')
    return TeleportOutcome(
        corrected_state=corrected_state,
        outcome_probability=probability,
        success_probability=success_probability,
        fidelity=fidelity(corrected_state, alpha),
        faithful=faithful,
        unitary_fidelity=fidelity(unitary_state, alpha),
        rho=decomposition.rho,
        correction=u,
        singular_values=tuple(float(s) for s in values),
    )
