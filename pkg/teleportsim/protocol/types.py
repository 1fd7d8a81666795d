"""
Value types of the teleportation protocol.

All of them are frozen; the ndarray fields are frozen by linalg on construction.
"""
import dataclasses
import typing

import numpy as np

from teleportsim.protocol import linalg
from teleportsim.utils.errors import ContractError, DegenerateChannelError, ShapeError


NORM_TOLERANCE = 1e-12


def hilbert_schmidt_norm(m):
    return linalg.frobenius_norm(m)


@dataclasses.dataclass(frozen=True, eq=False)
class QuditState:
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = linalg.as_vector(self.amplitudes)
        object.__setattr__(self, 'amplitudes', amplitudes)
        norm_squared = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm_squared - 1.0) > NORM_TOLERANCE:
            raise ContractError(f'state is not unit norm (|alpha|^2 = {norm_squared!r})')

    @classmethod
    def from_amplitudes(cls, values, normalize=False):
        amplitudes = linalg.as_vector(values)
        if normalize:
            norm = linalg.frobenius_norm(amplitudes)
            if norm == 0.0:
                raise ContractError('cannot normalize the zero vector')
            amplitudes = amplitudes / norm
        return cls(amplitudes)

    @classmethod
    def basis(cls, dim, index):
        amplitudes = np.zeros(dim, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(amplitudes)

    @property
    def dim(self):
        return self.amplitudes.shape[0]

    def __repr__(self):
        return f'QuditState({np.array2string(self.amplitudes, precision=6)})'


@dataclasses.dataclass(frozen=True, eq=False)
class _CoefficientMatrix:
    """
    Coefficient matrix of a two-party pure state sum_ij c_ij |i>|j>.

    `normalized` records that the Hilbert-Schmidt norm Tr(C†C) is one.
    """
    matrix: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        matrix = linalg.as_matrix(self.matrix)
        linalg.require_square(matrix, type(self).__name__)
        object.__setattr__(self, 'matrix', matrix)
        if self.normalized:
            norm = hilbert_schmidt_norm(matrix)
            if abs(norm ** 2 - 1.0) > NORM_TOLERANCE:
                raise ContractError(f'{type(self).__name__} flagged normalized but Tr(C†C) = {norm ** 2!r}')

    @classmethod
    def from_matrix(cls, values, normalize=True):
        matrix = linalg.as_matrix(values)
        if normalize:
            norm = hilbert_schmidt_norm(matrix)
            if norm == 0.0:
                raise DegenerateChannelError(f'cannot normalize a zero {cls.__name__}')
            matrix = matrix / norm
        return cls(matrix, normalized=normalize)

    @property
    def dim(self):
        return self.matrix.shape[0]


class ChannelMatrix(_CoefficientMatrix):
    """Shared entangled state |phi>_23 = e2 A e3^t."""


class MeasurementOperator(_CoefficientMatrix):
    """Alice's projected state |phi'>_12 = e1 B e2^t."""


@dataclasses.dataclass(frozen=True, eq=False)
class ComposedMap:
    """
    M = conj(B) A. Bob's unnormalized amplitudes after the measurement are M^t alpha.
    """
    matrix: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        matrix = linalg.as_matrix(self.matrix)
        linalg.require_square(matrix, 'ComposedMap')
        object.__setattr__(self, 'matrix', matrix)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def scaled(self, c):
        return ComposedMap(c * self.matrix, normalized=False)


@dataclasses.dataclass(frozen=True, eq=False)
class ChannelDecomposition:
    rho: float
    x: np.ndarray


@dataclasses.dataclass(frozen=True, eq=False)
class TeleportOutcome:
    corrected_state: QuditState
    outcome_probability: float
    success_probability: float
    fidelity: float
    faithful: bool
    unitary_fidelity: float
    rho: float
    correction: np.ndarray
    singular_values: typing.Tuple[float, ...] = ()


def require_same_dim(*items):
    dims = {item.dim for item in items}
    if len(dims) != 1:
        raise ShapeError(f'dimension mismatch: {sorted(dims)}')
    return dims.pop()
