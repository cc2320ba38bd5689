"""Error-feedback simulation for the victim receiver (line 0).

Two construction paths are provided for the stacked error vector: a
per-symbol path that models reception and FEQ error formation symbol by
symbol, and a matrix path that evaluates V h0v + L h0l + z0 directly.
Both consume randomness in the same order (m victim symbols, then the
noise vector), so runs from equal-seeded generators are comparable.
"""

from dataclasses import dataclass

import numpy as np

from .training import random_qam


@dataclass(frozen=True)
class ErrorVector:
    m: int
    e0: np.ndarray


def generate_legacy_data(m, n, rng):
    """m x n matrix of i.i.d. uniform 4-QAM legacy user data."""
    if m < 1 or n < 0:
        raise ValueError(f"need m >= 1, n >= 0, got m={m}, n={n}")
    return random_qam(rng, (m, n))


def draw_noise(rng, noise_var, size=None):
    """Circularly-symmetric complex Gaussian samples of variance noise_var."""
    scale = np.sqrt(noise_var / 2.0)
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def receive_and_feedback(x0, xV, xL, ch, rng=None, noise=None):
    """One reported error sample e_0(t).

    Models the full reception chain: the receiver sees its own symbol
    through the direct gain plus crosstalk from all disturbers plus
    channel noise, divides by the (known) direct gain, and subtracts the
    transmitted symbol. `noise` is the raw (pre-normalization) channel
    noise sample; if omitted it is drawn from rng with variance
    noise_var * |h00|^2.
    """
    xV = np.asarray(xV)
    xL = np.asarray(xL)
    if xV.shape != ch.h0v.shape or xL.shape != ch.h0l.shape:
        raise ValueError("disturber symbol counts do not match the channel")
    if noise is None:
        noise = draw_noise(rng, ch.noise_var * abs(ch.h00) ** 2)
    y0 = (ch.h00 * x0
          + np.sum(ch.h0v * ch.h00 * xV)
          + np.sum(ch.h0l * ch.h00 * xL)
          + noise)
    return y0 / ch.h00 - x0


def build_error_vector(ts, L, ch, rng):
    """Stacked error vector via the per-symbol reception path."""
    _check_dims(ts, L, ch)
    x0 = random_qam(rng, ts.m)
    z0 = draw_noise(rng, ch.noise_var, ts.m)
    e0 = np.array([
        receive_and_feedback(x0[t], ts.V[t, :], L[t, :], ch, noise=z0[t] * ch.h00)
        for t in range(ts.m)
    ])
    return ErrorVector(m=ts.m, e0=e0)


def error_vector_matrix_form(ts, L, ch, rng):
    """Stacked error vector via the direct matrix expression.

    Independent of build_error_vector except for the shared randomness
    contract; used to cross-check the per-symbol path.
    """
    _check_dims(ts, L, ch)
    random_qam(rng, ts.m)  # skip the victim symbols, keeping draw order aligned
    z0 = draw_noise(rng, ch.noise_var, ts.m)
    return ErrorVector(m=ts.m, e0=ts.V @ ch.h0v + L @ ch.h0l + z0)


def _check_dims(ts, L, ch):
    if L.shape[0] != ts.m:
        raise ValueError(f"legacy data has {L.shape[0]} rows, expected {ts.m}")
    if ch.h0v.shape[0] != ts.p:
        raise ValueError(f"channel has {ch.h0v.shape[0]} vectored couplings, expected {ts.p}")
    if ch.h0l.shape[0] != L.shape[1]:
        raise ValueError(f"channel has {ch.h0l.shape[0]} legacy couplings, expected {L.shape[1]}")
