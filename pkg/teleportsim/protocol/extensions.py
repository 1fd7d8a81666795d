"""
Extensions of the closed-form protocol: the Bell table, real 2x2 unitaries, GHZ channels,
probabilistic filtering for non-unitary X and teleporting into a larger channel.
"""
import dataclasses
import enum
import math
import typing

import numpy as np

from teleportsim.protocol import kernel, linalg, printed_table
from teleportsim.protocol.types import ChannelMatrix, ComposedMap, MeasurementOperator, QuditState
from teleportsim.utils import environment
from teleportsim.utils.errors import ContractError, DomainError, SingularMatrixError, UnrecoverableOutcomeError
from teleportsim.utils.logger import logger


REALNESS_TOLERANCE = 1e-12


###############
# Bell family
###############
@dataclasses.dataclass(frozen=True, eq=False)
class BellFamily:
    operators: typing.Tuple[MeasurementOperator, ...]

    def __iter__(self):
        return iter(self.operators)

    def __len__(self):
        return len(self.operators)

    def __getitem__(self, index):
        return self.operators[index]


BELL_MATRICES = (printed_table.I, printed_table.Z, printed_table.X, printed_table.Y)


def bell_family(normalized=True):
    """sigma_0, sigma_3, sigma_1 and the real form [[0, -1], [1, 0]] of sigma_2."""
    scale = 1 / math.sqrt(2) if normalized else 1.0
    return BellFamily(tuple(
        MeasurementOperator(scale * np.array(m, dtype=np.complex128), normalized=normalized)
        for m in BELL_MATRICES
    ))


def clock_shift_family(n, normalized=True):
    """The n^2 generalized Bell operators X^a Z^b / sqrt(n), Hilbert-Schmidt orthonormal."""
    shift = np.roll(np.eye(n, dtype=np.complex128), 1, axis=0)
    clock = np.diag(np.exp(2j * np.pi * np.arange(n) / n))
    operators = []
    for a in range(n):
        for b in range(n):
            m = np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
            operators.append(MeasurementOperator.from_matrix(m, normalize=normalized))
    return BellFamily(tuple(operators))


################
# Printed table
################
@dataclasses.dataclass(frozen=True, eq=False)
class Table1Row:
    a: np.ndarray
    b: np.ndarray
    ba: np.ndarray
    ba_t: np.ndarray
    u: np.ndarray
    sign_matches_printed: bool
    printed_factor: typing.Optional[int]
    printed_ba: np.ndarray
    printed_u: np.ndarray


def _printed_factor(computed, printed):
    for factor in (1, -1):
        if all(np.array_equal(c, factor * np.asarray(p)) for c, p in zip(computed, printed)):
            return factor
    return None


def generate_table1():
    rows = []
    for a, b, ba, ba_t, u in printed_table.iter_printed_rows():
        m = kernel.compose(
            MeasurementOperator.from_matrix(b, normalize=False),
            ChannelMatrix.from_matrix(a, normalize=False),
        )
        computed_ba_t = linalg.transpose(m.matrix)
        computed_u = linalg.inverse(computed_ba_t)
        factor = _printed_factor((m.matrix, computed_ba_t, computed_u), (ba, ba_t, u))
        if factor != 1:
            logger.debug(f'table row A={a} B={b}: printed entries differ by factor {factor}')
        rows.append(Table1Row(
            a=linalg.as_matrix(a),
            b=linalg.as_matrix(b),
            ba=m.matrix,
            ba_t=computed_ba_t,
            u=computed_u,
            sign_matches_printed=factor == 1,
            printed_factor=factor,
            printed_ba=linalg.as_matrix(ba),
            printed_u=linalg.as_matrix(u),
        ))
    return rows


#########################
# Real 2x2 unitaries
#########################
class RotationKind(enum.Enum):
    REFLECTION = 'reflection'  # [[cos, sin], [sin, -cos]], det -1
    ROTATION = 'rotation'  # [[cos, -sin], [sin, cos]], det +1


@dataclasses.dataclass(frozen=True)
class RotationForm:
    theta: float
    form: RotationKind

    def reconstruct(self):
        c, s = math.cos(self.theta), math.sin(self.theta)
        if self.form == RotationKind.REFLECTION:
            return linalg.as_matrix([[c, s], [s, -c]])
        return linalg.as_matrix([[c, -s], [s, c]])


def characterize_real_unitary(x, tol=None):
    tol = environment.get_default_tolerance() if tol is None else tol
    x = linalg.as_matrix(x)
    if x.shape != (2, 2):
        raise DomainError(f'expected a 2x2 matrix, got shape {x.shape}')
    if np.max(np.abs(x.imag)) > REALNESS_TOLERANCE:
        raise DomainError('matrix is not real')
    if not linalg.is_unitary(x, tol):
        raise DomainError('matrix is not unitary')
    r = x.real
    theta = math.atan2(r[1, 0], r[0, 0])
    if theta <= -math.pi:
        theta = math.pi
    determinant = r[0, 0] * r[1, 1] - r[0, 1] * r[1, 0]
    form = RotationKind.ROTATION if determinant > 0 else RotationKind.REFLECTION
    return RotationForm(theta=theta, form=form)


#################
# GHZ channels
#################
def ghz_channel(coeffs):
    """
    sum_i a_i |i...i>_23 collapses to the diagonal channel diag(a) in the basis
    (|1...1>, ..., |N...N>).
    """
    coeffs = linalg.as_vector(coeffs)
    norm_squared = float(np.vdot(coeffs, coeffs).real)
    if abs(norm_squared - 1.0) > 1e-12:
        raise ContractError(f'GHZ coefficients are not normalized (sum |a_i|^2 = {norm_squared!r})')
    return ChannelMatrix(np.diag(coeffs), normalized=True)


def teleport_multiqubit(alpha, coeffs, b, tol=None):
    return kernel.teleport(alpha, ghz_channel(coeffs), b, tol)


def expand_collapsed(amplitudes, copies):
    """Place sum_i c_i |i...i> (copies factors) into the full N**copies dimensional space."""
    amplitudes = linalg.as_vector(amplitudes)
    dim = amplitudes.shape[0]
    full = np.zeros(dim ** copies, dtype=np.complex128)
    stride = sum(dim ** p for p in range(copies))
    full[np.arange(dim) * stride] = amplitudes
    return linalg.as_vector(full)


#########################
# Probabilistic filtering
#########################
@dataclasses.dataclass(frozen=True, eq=False)
class ProbabilisticFilter:
    """
    K = sigma_min(M) (M^t)^-1, the largest multiple of the inverse with operator norm <= 1.
    """
    filter: np.ndarray
    joint_success_probability: float
    composed: ComposedMap

    def conditional_success(self, alpha):
        v = kernel.project_coefficients(self.composed, alpha)
        v_hat = v / linalg.frobenius_norm(v)
        filtered = linalg.matmul(self.filter, v_hat)
        return float(np.vdot(filtered, filtered).real)


def probabilistic_filter(m):
    sigma_min = float(linalg.singular_values(m.matrix)[-1])
    try:
        inverse_transpose = linalg.inverse(linalg.transpose(m.matrix))
    except SingularMatrixError as e:
        raise UnrecoverableOutcomeError(f'no filter exists for a singular composed map: {e}') from e
    return ProbabilisticFilter(
        filter=linalg.as_matrix(sigma_min * inverse_transpose),
        joint_success_probability=sigma_min ** 2,
        composed=m,
    )


def total_success_probability(a, family):
    total = 0.0
    for b in family:
        try:
            total += probabilistic_filter(kernel.compose(b, a)).joint_success_probability
        except UnrecoverableOutcomeError:
            logger.debug('singular outcome contributes nothing to the success probability')
    return total


###################
# Dimension mismatch
###################
@dataclasses.dataclass(frozen=True, eq=False)
class EmbeddingReport:
    """
    Correction for an n-level state sent through an m-level channel.

    `u` is U' (+) 0. Bob cannot apply the zero block physically, `physical_correction`
    leaves the leaked subspace untouched instead.
    """
    n: int
    m: int
    u: np.ndarray
    leakage: float
    faithful: bool
    rho: float
    leaked_block: np.ndarray

    def physical_correction(self):
        correction = np.array(self.u)
        correction[self.n:, self.n:] = np.eye(self.m - self.n)
        return linalg.as_matrix(correction)

    def predicted_fidelity(self, alpha):
        amplitudes = alpha.amplitudes[:self.n]
        kept = self.rho ** 2 * float(np.vdot(amplitudes, amplitudes).real)
        leaked = linalg.matmul(self.leaked_block, amplitudes) if self.m > self.n else np.zeros(0)
        lost = float(np.vdot(leaked, leaked).real)
        return kept / (kept + lost)


def embed_state(alpha, m):
    if alpha.dim > m:
        raise DomainError(f'cannot embed a {alpha.dim}-level state into {m} levels')
    amplitudes = np.zeros(m, dtype=np.complex128)
    amplitudes[:alpha.dim] = alpha.amplitudes
    return QuditState(amplitudes)


def truncate_correction(m, n, tol=None):
    tol = environment.get_default_tolerance() if tol is None else tol
    size = m.dim
    if not 1 <= n <= size:
        raise DomainError(f'source dimension {n} must lie in 1..{size}')

    rho = kernel.decompose(m).rho
    m_t = linalg.transpose(m.matrix)
    block = linalg.as_matrix(m_t[:n, :n] / rho)
    try:
        block_correction = linalg.inverse(block)
    except SingularMatrixError as e:
        raise UnrecoverableOutcomeError(f'leading {n}x{n} block is singular: {e}') from e

    u = np.zeros((size, size), dtype=np.complex128)
    u[:n, :n] = block_correction
    leaked_block = linalg.as_matrix(m_t[n:, :n]) if n < size else np.zeros((0, n), dtype=np.complex128)
    leakage = linalg.frobenius_norm(leaked_block)
    block_values = linalg.singular_values(block)
    block_faithful = (block_values[0] - block_values[-1]) / block_values[0] <= tol
    if leakage > tol:
        logger.debug(f'embedding {n} into {size} levels leaks amplitude {leakage:.6g}')
    return EmbeddingReport(
        n=n,
        m=size,
        u=linalg.as_matrix(u),
        leakage=leakage,
        faithful=bool(leakage <= tol and block_faithful),
        rho=rho,
        leaked_block=leaked_block,
    )
