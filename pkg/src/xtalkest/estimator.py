"""Crosstalk coupling estimators.

The sequential method projects the error vector onto the complement of
the training subspace (U^H), solves for the legacy couplings by least
squares, cancels them, and reads the vectored couplings off the
orthogonal training columns. The joint estimator solves the stacked
system [V L] x = e0 in one shot; for full-rank instances the two agree,
and a third path evaluates the explicit 2x2 block-inverse formula with
the Schur complement rewritten through U for cross-checking.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import COND_LIMIT, solve_least_squares

# Entrywise tolerance for exact-recovery and equivalence checks.
RECOVERY_TOL = 1e-9


@dataclass(frozen=True)
class EstimateSet:
    h0v_hat: np.ndarray
    h0l_hat: np.ndarray
    legacy_rank: int        # numerical rank of U^H L
    rank_deficient: bool    # legacy_rank < n


def estimate_legacy(ts, L, e0):
    """Legacy couplings from the projected system U^H L h = U^H e0.

    Returns (h0l_hat, rank). Minimum-norm least squares, so rank-deficient
    instances (m - p < n, or m == p where U is empty) degrade gracefully
    instead of failing.
    """
    e0 = _error_entries(ts, L, e0)
    n = L.shape[1]
    if n == 0:
        return np.zeros(0, dtype=complex), 0
    Uh = ts.U.conj().T
    return solve_least_squares(Uh @ L, Uh @ e0)


def estimate_vectored(ts, L, e0, h0l_hat):
    """Vectored couplings after cancelling the legacy estimate:
    (1 / 2m) V^H (e0 - L h0l_hat)."""
    e0 = _error_entries(ts, L, e0)
    if h0l_hat.shape[0] != L.shape[1]:
        raise ValueError("legacy estimate length does not match L")
    return ts.V.conj().T @ (e0 - L @ h0l_hat) / (2 * ts.m)


def estimate_sequential(ts, L, e0):
    """Legacy-then-vectored sequential estimation."""
    h0l_hat, rank = estimate_legacy(ts, L, e0)
    h0v_hat = estimate_vectored(ts, L, e0, h0l_hat)
    return EstimateSet(h0v_hat=h0v_hat, h0l_hat=h0l_hat,
                       legacy_rank=rank, rank_deficient=rank < L.shape[1])


def estimate_joint_ml(ts, L, e0):
    """Joint estimate from the stacked system [V L] [h0v; h0l] = e0.

    Minimum-norm least squares; the rank of the stacked matrix exceeds
    the rank of U^H L by exactly p (V contributes p independent columns),
    which yields the same rank diagnostics as the sequential path.
    """
    e0 = _error_entries(ts, L, e0)
    n = L.shape[1]
    x, rank = solve_least_squares(np.hstack([ts.V, L]), e0)
    legacy_rank = max(rank - ts.p, 0)
    return EstimateSet(h0v_hat=x[:ts.p], h0l_hat=x[ts.p:],
                       legacy_rank=legacy_rank, rank_deficient=legacy_rank < n)


def estimate_joint_ml_block(ts, L, e0):
    """Joint estimate via the explicit block-inverse formula.

    Evaluates the 2x2 block inverse of the Gram matrix of [V L] with the
    Schur complement written as S = m (L^H U U^H L)^{-1}, then applies
    [V^H; L^H] e0. Requires [V L] to have full column rank.
    """
    e0 = _error_entries(ts, L, e0)
    m, p, n = ts.m, ts.p, L.shape[1]
    Vh = ts.V.conj().T
    Lh = L.conj().T
    t1 = Vh @ e0
    t2 = Lh @ e0
    if n == 0:
        return EstimateSet(h0v_hat=t1 / (2 * m), h0l_hat=np.zeros(0, dtype=complex),
                           legacy_rank=0, rank_deficient=False)
    UhL = ts.U.conj().T @ L
    G = UhL.conj().T @ UhL  # L^H U U^H L
    if np.linalg.cond(G) > COND_LIMIT:
        raise np.linalg.LinAlgError("rank-deficient instance: L^H U U^H L is singular")
    S = m * np.linalg.inv(G)
    VhL = Vh @ L
    h0l_hat = -(S @ VhL.conj().T @ t1) / (2 * m) + S @ t2
    h0v_hat = (t1 / (2 * m)
               + VhL @ S @ VhL.conj().T @ t1 / (4 * m * m)
               - VhL @ S @ t2 / (2 * m))
    return EstimateSet(h0v_hat=h0v_hat, h0l_hat=h0l_hat,
                       legacy_rank=n, rank_deficient=False)


def _error_entries(ts, L, e0):
    e0 = e0.e0 if hasattr(e0, "e0") else np.asarray(e0, dtype=complex)
    if e0.shape[0] != ts.m or L.shape[0] != ts.m:
        raise ValueError("error vector / legacy data length does not match training length")
    return e0
