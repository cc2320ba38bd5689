"""Hadamard-based training design for the vectored lines.

The training matrix V = W A pairs the first p columns of a Sylvester
Hadamard matrix (W) with a random 4-QAM diagonal (A). The remaining
Hadamard columns (U) span the orthogonal complement of the training
subspace, which is what lets legacy couplings be estimated first.
"""

from dataclasses import dataclass

import numpy as np

# The four 4-QAM constellation points, each of energy 2.
QAM4 = np.array([1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j])


@dataclass(frozen=True)
class TrainingSet:
    m: int          # training length (power of 2)
    p: int          # vectored interferer count
    W: np.ndarray   # m x p, entries +-1
    U: np.ndarray   # m x (m-p), entries +-1
    A: np.ndarray   # p x p diagonal, 4-QAM entries
    V: np.ndarray   # m x p, V = W A


def is_power_of_two(m):
    return m >= 1 and (m & (m - 1)) == 0


def sylvester_hadamard(m):
    """m x m Hadamard matrix by the Sylvester doubling recursion."""
    if not is_power_of_two(m):
        raise ValueError(f"Hadamard order must be a power of 2, got {m}")
    H = np.array([[1]], dtype=np.int64)
    while H.shape[0] < m:
        H = np.block([[H, H], [H, -H]])
    return H


def random_qam(rng, size=None):
    """Uniform i.i.d. 4-QAM symbols."""
    return QAM4[rng.integers(0, 4, size=size)]


def build_training(m, p, rng):
    """Construct the training set for m symbols and p vectored interferers.

    W takes the first p Hadamard columns (all-ones column included), U the
    remaining m-p, and A draws its p diagonal entries uniformly from the
    4-QAM constellation.
    """
    if not is_power_of_two(m):
        raise ValueError(f"training length must be a power of 2, got {m}")
    if not 0 <= p <= m:
        raise ValueError(f"need 0 <= p <= m, got p={p}, m={m}")
    H = sylvester_hadamard(m)
    W = H[:, :p]
    U = H[:, p:]
    A = np.diag(random_qam(rng, p))
    V = W.astype(complex) @ A
    return TrainingSet(m=m, p=p, W=W, U=U, A=A, V=V)


def projection_q(ts):
    """Projector onto the orthogonal complement of range(V).

    Q = I - V V^H / (2m), which for this training design also equals
    U U^H / m; Q V = 0.
    """
    return np.eye(ts.m) - (ts.V @ ts.V.conj().T) / (2 * ts.m)
