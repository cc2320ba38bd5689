import numpy as np
import pytest

from xtalkest.channel import ChannelRealization
from xtalkest.estimator import EstimateSet
from xtalkest.evaluation import (
    CSV_HEADER,
    SweepConfig,
    run_sweep,
    run_trial,
    sinr_after_cancellation,
    sweep_to_csv,
)


def make_channel(h0v=(), h0l=(), noise_var=2e-3):
    return ChannelRealization(h00=1.0 + 0j,
                              h0v=np.array(h0v, dtype=complex),
                              h0l=np.array(h0l, dtype=complex),
                              noise_var=noise_var, symbol_energy=2.0)


def make_estimates(h0v_hat, h0l_hat):
    return EstimateSet(h0v_hat=np.array(h0v_hat, dtype=complex),
                       h0l_hat=np.array(h0l_hat, dtype=complex),
                       legacy_rank=len(h0l_hat), rank_deficient=False)


class TestSinr:
    def test_perfect_estimates_hit_snr(self):
        ch = make_channel(h0v=[0.5, 0.2j], h0l=[0.1])
        est = make_estimates([0.5, 0.2j], [0.1])
        np.testing.assert_allclose(sinr_after_cancellation(ch, est), 30.0, atol=1e-12)

    def test_zero_estimates_closed_form(self):
        # single legacy line 10 dB weaker, 30 dB SNR, nothing cancelled
        ch = make_channel(h0l=[np.sqrt(0.1)])
        est = make_estimates([], [0.0])
        expected = 10 * np.log10(2.0 / (0.1 * 2.0 + 2e-3))
        np.testing.assert_allclose(sinr_after_cancellation(ch, est), expected, atol=1e-12)
        np.testing.assert_allclose(expected, 9.957, atol=5e-4)

    def test_halved_residual_drops_interference_6db(self):
        ch = make_channel(h0v=[0.4], h0l=[0.2])
        full = make_estimates([0.0], [0.0])
        half = make_estimates([0.2], [0.1])
        nv = ch.noise_var

        def interference(est):
            sinr = sinr_after_cancellation(ch, est)
            return ch.symbol_energy / 10 ** (sinr / 10) - nv

        drop = 10 * np.log10(interference(full) / interference(half))
        np.testing.assert_allclose(drop, 6.0206, atol=1e-3)

    def test_dimension_mismatch(self):
        ch = make_channel(h0v=[0.5])
        with pytest.raises(ValueError):
            sinr_after_cancellation(ch, make_estimates([0.5, 0.1], []))


class TestRunSweep:
    def test_determinism(self):
        cfg = SweepConfig(m_values=(16,), p=4, n_values=(4,), vectored_xtalk_db=6,
                          legacy_xtalk_db_values=(10,), snr_db=30, trials=3,
                          master_seed=5)
        a = run_sweep(cfg)
        b = run_sweep(cfg)
        assert a == b

    def test_nothing_to_estimate_hits_snr(self):
        cfg = SweepConfig(m_values=(8,), p=0, n_values=(0,), vectored_xtalk_db=6,
                          legacy_xtalk_db_values=(10,), snr_db=30, trials=5,
                          master_seed=0)
        row = run_sweep(cfg).rows[0]
        np.testing.assert_allclose(row.mean_sinr_db, 30.0, atol=1e-12)
        assert row.std_sinr_db == 0.0

    def test_sinr_capped_by_snr_and_monotone_in_m(self):
        cfg = SweepConfig(m_values=(16, 32, 64), p=4, n_values=(4,),
                          vectored_xtalk_db=6, legacy_xtalk_db_values=(15,),
                          snr_db=30, trials=60, master_seed=1)
        rows = run_sweep(cfg).rows
        means = [r.mean_sinr_db for r in rows]
        assert all(mu <= 30.5 for mu in means)
        assert means[1] >= means[0] - 0.5
        assert means[2] >= means[1] - 0.5

    def test_more_legacy_lines_never_help(self):
        cfg = SweepConfig(m_values=(32,), p=4, n_values=(1, 4, 10),
                          vectored_xtalk_db=6, legacy_xtalk_db_values=(10,),
                          snr_db=30, trials=60, master_seed=2)
        means = [r.mean_sinr_db for r in run_sweep(cfg).rows]
        assert means[1] <= means[0] + 0.5
        assert means[2] <= means[1] + 0.5

    def test_rank_deficient_fraction(self):
        cfg = SweepConfig(m_values=(8,), p=4, n_values=(10,), vectored_xtalk_db=6,
                          legacy_xtalk_db_values=(10,), snr_db=30, trials=4,
                          master_seed=3)
        assert run_sweep(cfg).rows[0].rank_deficient_fraction == 1.0

    def test_rejects_bad_config(self):
        with pytest.raises(ValueError):
            SweepConfig(m_values=(12,), p=4, n_values=(1,), vectored_xtalk_db=6,
                        legacy_xtalk_db_values=(10,), snr_db=30, trials=1,
                        master_seed=0)
        with pytest.raises(ValueError):
            SweepConfig(m_values=(16,), p=4, n_values=(1,), vectored_xtalk_db=6,
                        legacy_xtalk_db_values=(10,), snr_db=30, trials=0,
                        master_seed=0)


class TestCsv:
    def test_format(self):
        cfg = SweepConfig(m_values=(8,), p=4, n_values=(1,), vectored_xtalk_db=6,
                          legacy_xtalk_db_values=(10,), snr_db=30, trials=2,
                          master_seed=4)
        csv = sweep_to_csv(run_sweep(cfg))
        lines = csv.split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[0] == ("m,p,n,vectored_db,legacy_db,trials,"
                            "mean_sinr_db,std_sinr_db,rank_deficient_fraction")
        fields = lines[1].split(",")
        assert fields[:3] == ["8", "4", "1"]
        assert fields[5] == "2"
        assert csv.endswith("\n") and "\r" not in csv


def test_run_trial_deterministic():
    seed = np.random.SeedSequence((1, 2, 3))
    a = run_trial(16, 4, 4, 6.0, 10.0, 30.0, seed)
    b = run_trial(16, 4, 4, 6.0, 10.0, 30.0, np.random.SeedSequence((1, 2, 3)))
    assert a == b
