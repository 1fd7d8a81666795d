"""
Seeded random inputs.

Every stream is a numpy Generator over PCG64. Trials get independent child streams
spawned from one SeedSequence, so a trial's inputs do not depend on execution order.
"""
import numpy as np

from teleportsim.protocol import linalg
from teleportsim.protocol.types import ChannelMatrix, MeasurementOperator, QuditState


def generator(seed):
    return np.random.Generator(np.random.PCG64(seed))


def trial_generators(seed, trials):
    return [
        np.random.Generator(np.random.PCG64(child))
        for child in np.random.SeedSequence(seed).spawn(trials)
    ]


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_state(rng, n):
    return QuditState.from_amplitudes(random_complex(rng, n), normalize=True)


def random_unitary(rng, n):
    """Orthonormalizes a Gaussian matrix; the phase fix makes the result Haar distributed."""
    q, r = np.linalg.qr(random_complex(rng, (n, n)))
    phases = np.diag(r) / np.abs(np.diag(r))
    return linalg.as_matrix(q * phases)


def random_channel(rng, n):
    return ChannelMatrix.from_matrix(random_complex(rng, (n, n)), normalize=True)


def maximally_entangled_channel(rng, n):
    return ChannelMatrix.from_matrix(random_unitary(rng, n), normalize=True)


def random_measurement(rng, n):
    return MeasurementOperator.from_matrix(random_complex(rng, (n, n)), normalize=True)


def random_orthonormal_family(rng, n):
    """Rows of a random n^2 x n^2 unitary read as n x n coefficient matrices."""
    rows = random_unitary(rng, n * n)
    return tuple(
        MeasurementOperator(rows[k].reshape(n, n), normalized=True)
        for k in range(n * n)
    )


def rotated_clock_shift_family(rng, family):
    """Right-multiplies every member by one random unitary; each member stays proportional to a unitary."""
    v = random_unitary(rng, family[0].dim)
    return tuple(
        MeasurementOperator(linalg.matmul(b.matrix, v), normalized=True)
        for b in family
    )
