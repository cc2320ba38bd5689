"""Complex dense-matrix helpers: Hermitian transpose, minimum-norm least
squares with rank reporting, and Schur-complement 2x2 block inversion."""

import numpy as np

# Singular values below RANK_TOL * s_max count as zero.
RANK_TOL = 1e-10

# Blocks with condition estimates beyond this are treated as singular.
COND_LIMIT = 1e12


def hermitian(M):
    """Conjugate transpose."""
    return np.asarray(M).conj().T


def solve_least_squares(A, b, rank_tol=RANK_TOL):
    """Minimum-norm least-squares solution of A x = b.

    Returns (x, rank) where rank is the numerical rank of A at the
    relative threshold rank_tol. Rank-deficient systems yield the
    minimum-norm minimizer rather than an error.
    """
    A = np.asarray(A, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if A.ndim != 2 or b.ndim != 1:
        raise ValueError("expected a matrix and a vector")
    if A.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: A is {A.shape}, b has length {b.shape[0]}")
    if rank_tol < 0:
        raise ValueError("rank_tol must be nonnegative")
    if A.shape[1] == 0:
        return np.zeros(0, dtype=complex), 0
    if A.shape[0] == 0:
        # No constraints: minimum-norm solution is zero.
        return np.zeros(A.shape[1], dtype=complex), 0
    x, _, rank, _ = np.linalg.lstsq(A, b, rcond=rank_tol)
    return x, int(rank)


def block_inverse_2x2(A, B, C, D, cond_limit=COND_LIMIT):
    """Inverse of [[A, B], [C, D]] via the Schur complement of A.

    Requires A invertible. With S = (D - C A^{-1} B)^{-1}, the result is

        [[A^{-1} + A^{-1} B S C A^{-1},  -A^{-1} B S],
         [-S C A^{-1},                    S          ]]
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    C = np.asarray(C, dtype=complex)
    D = np.asarray(D, dtype=complex)
    p = A.shape[0]
    n = D.shape[0]
    if A.shape != (p, p) or D.shape != (n, n) or B.shape != (p, n) or C.shape != (n, p):
        raise ValueError("inconsistent block dimensions")
    if p == 0:
        return _checked_inverse(D, cond_limit, "D block")
    Ainv = _checked_inverse(A, cond_limit, "A block")
    if n == 0:
        return Ainv
    S = _checked_inverse(D - C @ Ainv @ B, cond_limit, "Schur complement")
    AinvB = Ainv @ B
    CAinv = C @ Ainv
    return np.block([
        [Ainv + AinvB @ S @ CAinv, -AinvB @ S],
        [-S @ CAinv, S],
    ])


def _checked_inverse(M, cond_limit, what):
    if M.size == 0:
        return M.copy()
    if not np.all(np.isfinite(M)) or np.linalg.cond(M) > cond_limit:
        raise np.linalg.LinAlgError(f"{what} is singular or ill-conditioned")
    return np.linalg.inv(M)
