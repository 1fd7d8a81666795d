"""
Dense complex matrices for the tiny systems a teleportation simulation needs (N <= 16).

Every matrix and vector is a frozen complex128 ndarray. Products and tensor products come
from numpy; the inverse is Gauss-Jordan elimination with partial pivoting and singular
values come from cyclic Jacobi on the Hermitian form M†M.
"""
import math

import numpy as np

from teleportsim.utils.errors import DomainError, NumericalError, ShapeError, SingularMatrixError


DEFAULT_TOLERANCE = 1e-9
IDENTITY_TOLERANCE = 1e-12
SINGULARITY_TOLERANCE = 1e-12
JACOBI_TOLERANCE = 1e-14
JACOBI_SKIP = 1e-18
MAX_JACOBI_SWEEPS = 60


def _freeze(array):
    array.setflags(write=False)
    return array


def as_matrix(values):
    matrix = np.array(values, dtype=np.complex128)
    if matrix.ndim != 2 or 0 in matrix.shape:
        raise ShapeError(f'expected a non-empty matrix, got shape {matrix.shape}')
    if not np.all(np.isfinite(matrix)):
        raise DomainError('matrix entries must be finite')
    return _freeze(matrix)


def as_vector(values):
    vector = np.array(values, dtype=np.complex128)
    if vector.ndim != 1 or vector.size == 0:
        raise ShapeError(f'expected a non-empty vector, got shape {vector.shape}')
    if not np.all(np.isfinite(vector)):
        raise DomainError('vector entries must be finite')
    return _freeze(vector)


def identity(n):
    return _freeze(np.eye(n, dtype=np.complex128))


def require_square(m, operation):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f'{operation} needs a square matrix, got shape {m.shape}')


def require_same_shape(lhs, rhs, operation):
    if lhs.shape != rhs.shape:
        raise ShapeError(f'{operation}: shapes {lhs.shape} and {rhs.shape} differ')


###########
# Algebra
###########
def matmul(lhs, rhs):
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    if lhs.shape[-1] != rhs.shape[0]:
        raise ShapeError(f'cannot multiply shapes {lhs.shape} and {rhs.shape}')
    return _freeze(np.matmul(lhs, rhs).astype(np.complex128))


def transpose(m):
    return _freeze(np.array(np.transpose(m), dtype=np.complex128))


def conjugate(m):
    return _freeze(np.conjugate(np.asarray(m, dtype=np.complex128)))


def adjoint(m):
    return conjugate(transpose(m))


def kron(a, b):
    return _freeze(np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128)))


def inverse(m):
    """
    Gauss-Jordan elimination with partial pivoting on [M | I].

    A pivot no larger than SINGULARITY_TOLERANCE times the largest entry magnitude
    raises SingularMatrixError carrying the smallest pivot seen.
    """
    m = as_matrix(m)
    require_square(m, 'inverse')
    n = m.shape[0]
    threshold = SINGULARITY_TOLERANCE * np.max(np.abs(m))

    work = np.hstack([m, np.eye(n, dtype=np.complex128)])
    smallest_pivot = math.inf
    for k in range(n):
        p = k + int(np.argmax(np.abs(work[k:, k])))
        pivot = abs(work[p, k])
        smallest_pivot = min(smallest_pivot, pivot)
        if pivot <= threshold:
            raise SingularMatrixError(f'{n}x{n} matrix is singular', smallest_pivot)
        if p != k:
            work[[k, p]] = work[[p, k]]
        work[k] = work[k] / work[k, k]
        others = np.arange(n) != k
        work[others] -= np.outer(work[others, k], work[k])
    return _freeze(work[:, n:].copy())


##############
# Spectra
##############
def _jacobi_eigenvalues(h, max_sweeps):
    a = np.array(h, dtype=np.complex128)
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(n)

    for _ in range(max_sweeps):
        off_diagonal = np.linalg.norm(a - np.diag(np.diag(a)))
        if off_diagonal <= JACOBI_TOLERANCE * norm:
            return np.diag(a).real.copy()
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                magnitude = abs(a[p, q])
                if magnitude <= JACOBI_SKIP * norm:
                    continue
                # conjugate by diag(..., conj(phase)_q, ...) so that a[p, q] becomes real
                phase = a[p, q] / magnitude
                a[:, q] *= np.conj(phase)
                a[q, :] *= phase
                theta = 0.5 * math.atan2(2 * magnitude, a[q, q].real - a[p, p].real)
                c, s = math.cos(theta), math.sin(theta)
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                rotated = True
        if not rotated:
            return np.diag(a).real.copy()
    raise NumericalError(f'Jacobi iteration did not converge in {max_sweeps} sweeps')


def hermitian_eigenvalues(h, max_sweeps=MAX_JACOBI_SWEEPS):
    """
    Eigenvalues of a Hermitian matrix, sorted descending, by cyclic Jacobi.

    Each step first rotates the phase of a[p, q] away with a diagonal unitary, then
    applies the real plane rotation that zeroes it.
    """
    h = as_matrix(h)
    require_square(h, 'hermitian_eigenvalues')
    if frobenius_norm(h - adjoint(h)) > DEFAULT_TOLERANCE * max(1.0, frobenius_norm(h)):
        raise DomainError('hermitian_eigenvalues needs a Hermitian matrix')
    hermitian = (h + adjoint(h)) / 2
    eigenvalues = _jacobi_eigenvalues(hermitian, max_sweeps)
    return _freeze(np.sort(eigenvalues)[::-1].copy())


def singular_values(m):
    m = as_matrix(m)
    require_square(m, 'singular_values')
    gram = matmul(adjoint(m), m)
    eigenvalues = np.clip(hermitian_eigenvalues(gram), 0.0, None)
    return _freeze(np.sqrt(eigenvalues))


def closest_unitary(m):
    """Unitary polar factor of m."""
    left, _, right = np.linalg.svd(as_matrix(m))
    return _freeze(left @ right)


############
# Predicates
############
def frobenius_norm(m):
    return float(np.linalg.norm(np.asarray(m)))


def is_close(lhs, rhs, tol=DEFAULT_TOLERANCE):
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    require_same_shape(lhs, rhs, 'is_close')
    return frobenius_norm(lhs - rhs) <= tol


def is_unitary(m, tol=DEFAULT_TOLERANCE):
    m = as_matrix(m)
    require_square(m, 'is_unitary')
    return is_close(matmul(adjoint(m), m), identity(m.shape[0]), tol)


def best_phase(reference, candidate):
    """Unit complex c minimizing ||c * reference - candidate||."""
    overlap = np.vdot(np.asarray(reference), np.asarray(candidate))
    if abs(overlap) == 0.0:
        return 1.0 + 0.0j
    return complex(overlap / abs(overlap))


def global_phase_distance(reference, candidate):
    reference, candidate = np.asarray(reference), np.asarray(candidate)
    require_same_shape(reference, candidate, 'global_phase_distance')
    return frobenius_norm(best_phase(reference, candidate) * reference - candidate)
