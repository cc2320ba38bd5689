import numpy as np

from xtalkest.cli import run_cli, run_selftest


def test_selftest_passes(capsys):
    assert run_cli(["selftest", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "3/3 checks passed" in out


def test_selftest_checks_structure():
    checks = run_selftest(3)
    assert len(checks) == 3
    assert all(ok for _, ok, _ in checks)


def test_sweep_deterministic_output(tmp_path):
    args = ["sweep", "--m", "16", "--n", "4", "--legacy-db", "10",
            "--trials", "2", "--seed", "1"]
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert run_cli(args + ["--out", str(out1)]) == 0
    assert run_cli(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0].startswith("m,p,n,")
    assert len(lines) == 2


def test_sweep_stdout_and_grid(capsys):
    assert run_cli(["sweep", "--m", "8", "--m", "16", "--n", "1", "--n", "4",
                    "--legacy-db", "10", "--trials", "1", "--seed", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5  # header + 2 m x 2 n x 1 legacy

    row = lines[1].split(",")
    assert row[0] == "8" and row[1] == "4"
    assert float(row[6]) <= 30.5


def test_single_prints_truth_and_estimates(capsys):
    assert run_cli(["single", "--m", "32", "--n", "2", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    for label in ("vectored true", "vectored est", "legacy true",
                  "legacy est", "SINR"):
        assert label in out


def test_single_noiseless_like_recovery(capsys):
    run_cli(["single", "--m", "64", "--n", "1", "--snr-db", "80", "--seed", "4"])
    out = capsys.readouterr().out
    sinr = float(out.strip().splitlines()[-1].split(":")[1].split("dB")[0])
    assert sinr > 70


def test_bad_flag_exits_2(capsys):
    assert run_cli(["sweep", "--bogus"]) == 2
    assert run_cli(["sweep", "--m", "notanint"]) == 2
    err = capsys.readouterr().err
    assert "usage" in err.lower()


def test_missing_subcommand_exits_2():
    assert run_cli([]) == 2
