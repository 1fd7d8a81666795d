"""
Brute-force ground truth for the closed form in `kernel`.

The joint state of particles (1, 2, 3) is stored party-major with party 3 fastest:
amplitude (i, j, k) lives at index (i * N + j) * N + k (0-based).
"""
import dataclasses

import numpy as np

from teleportsim.protocol import linalg
from teleportsim.protocol.types import QuditState, require_same_dim
from teleportsim.utils.errors import ContractError, DomainError, ShapeError, UnrecoverableOutcomeError


MAX_ORACLE_DIM = 8
VANISHING_NORM = 1e-12


@dataclasses.dataclass(frozen=True, eq=False)
class JointState:
    dim_per_party: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (self.dim_per_party ** 3,):
            raise ShapeError(f'joint state of {self.dim_per_party}-level parties needs {self.dim_per_party ** 3} amplitudes')

    @property
    def dim(self):
        return self.dim_per_party


@dataclasses.dataclass(frozen=True, eq=False)
class MeasurementState:
    dim_per_party: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (self.dim_per_party ** 2,):
            raise ShapeError(f'measurement state of {self.dim_per_party}-level parties needs {self.dim_per_party ** 2} amplitudes')

    @property
    def dim(self):
        return self.dim_per_party


def _require_oracle_size(dim):
    if dim > MAX_ORACLE_DIM:
        raise DomainError(f'oracle is limited to N <= {MAX_ORACLE_DIM}, got N = {dim}')


def build_joint(alpha, a):
    """|Psi>_123 = |phi>_1 (x) |phi>_23, amplitude alpha_i * a_jk at (i, j, k)."""
    dim = require_same_dim(alpha, a)
    _require_oracle_size(dim)
    return JointState(dim, linalg.kron(alpha.amplitudes, a.matrix.reshape(-1)))


def build_measurement_state(b):
    _require_oracle_size(b.dim)
    return MeasurementState(b.dim, linalg.as_vector(b.matrix.reshape(-1)))


def project(psi, phi):
    """
    <phi'|_12 |Psi>_123: component k is sum_ij conj(phi(i, j)) Psi(i, j, k).

    Party 3 is fastest, so Psi(., ., k) is the stride-N slice starting at k.
    """
    dim = require_same_dim(psi, phi)
    return linalg.as_vector([
        np.vdot(phi.amplitudes, psi.amplitudes[k::dim])
        for k in range(dim)
    ])


def oracle_teleport(alpha, a, b, u):
    if not (a.normalized and b.normalized):
        raise ContractError('oracle probabilities need a normalized channel and measurement')
    v = project(build_joint(alpha, a), build_measurement_state(b))
    probability = float(np.vdot(v, v).real)
    w = linalg.matmul(u, v)
    norm = linalg.frobenius_norm(w)
    if norm < VANISHING_NORM:
        raise UnrecoverableOutcomeError('corrected state vanishes')
    return QuditState.from_amplitudes(w / norm), probability
