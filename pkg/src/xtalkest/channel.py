"""Per-tone channel generation for the mixed legacy/vectored scenario.

All quantities live in the FEQ-normalized domain: the direct gain is 1,
crosstalk couplings are h_0j / h_00, and the noise variance is that of
z_0(t) / h_00. Coupling strength X dB "weaker" means squared magnitude
10^(-X/10) relative to the direct path.
"""

from dataclasses import dataclass

import numpy as np

SYMBOL_ENERGY = 2.0  # E|x|^2 for 4-QAM


@dataclass(frozen=True)
class ChannelConfig:
    p: int                          # vectored interferer count
    n: int                          # legacy line count
    vectored_xtalk_db: float        # vectored coupling power below direct path
    legacy_xtalk_db: float          # legacy coupling power below direct path
    snr_db: float                   # crosstalk-free receiver SNR
    magnitude_spread_db: float = 0.0

    def __post_init__(self):
        if self.p < 0 or self.n < 0:
            raise ValueError("need p >= 0 and n >= 0")
        if self.magnitude_spread_db < 0:
            raise ValueError("magnitude_spread_db must be nonnegative")


@dataclass(frozen=True)
class ChannelRealization:
    h00: complex            # direct gain (1 in the normalized domain)
    h0v: np.ndarray         # p normalized vectored couplings
    h0l: np.ndarray         # n normalized legacy couplings
    noise_var: float        # variance of each normalized noise sample
    symbol_energy: float


def coupling_magnitude(xtalk_db):
    """Amplitude ratio for a coupling xtalk_db below the direct path."""
    return 10.0 ** (-xtalk_db / 20.0)


def generate_channels(cfg, rng):
    """Draw one channel realization.

    Coupling magnitudes are deterministic at the configured dB level
    (optionally dispersed log-uniformly within +-magnitude_spread_db);
    phases are independent uniform on [0, 2pi).
    """
    def draw(count, xtalk_db):
        spread = cfg.magnitude_spread_db
        mag = coupling_magnitude(xtalk_db) * 10.0 ** (rng.uniform(-spread, spread, count) / 20.0)
        phase = rng.uniform(0.0, 2.0 * np.pi, count)
        return mag * np.exp(1j * phase)

    h0v = draw(cfg.p, cfg.vectored_xtalk_db)
    h0l = draw(cfg.n, cfg.legacy_xtalk_db)
    noise_var = SYMBOL_ENERGY / 10.0 ** (cfg.snr_db / 10.0)
    return ChannelRealization(h00=1.0 + 0.0j, h0v=h0v, h0l=h0l,
                              noise_var=noise_var, symbol_energy=SYMBOL_ENERGY)
