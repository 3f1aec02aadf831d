import json
import math

import numpy as np
import pytest

from gatemp.cli import main
from gatemp.states import two_mode_squeezed_thermal

I2 = np.eye(2)


def write_state(tmp_path, cm, name="state.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cm.to_json_dict()), encoding="utf-8")
    return str(path)


class TestClassify:
    def test_atemporal_exit_and_report(self, tmp_path, capsys):
        path = write_state(tmp_path, two_mode_squeezed_thermal(1.0, 0.5))
        code = main(["classify", "--input", path])
        out = json.loads(capsys.readouterr().out)
        assert code == 10
        assert out["classification"] == "atemporal"
        assert out["total_f"] == pytest.approx(0.9319713847220885, abs=1e-12)

    def test_temporal_exit(self, tmp_path, capsys):
        path = write_state(tmp_path, two_mode_squeezed_thermal(1.5, 0.1))
        code = main(["classify", "--input", path])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["classification"] == "both-temporal"

    def test_validation_exit(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"V_A": [[0.5, 0], [0, 0.5]], "V_B": I2.tolist(), "C": I2.tolist()}))
        code = main(["classify", "--input", str(bad)])
        out = json.loads(capsys.readouterr().out)
        assert code == 2
        assert out["error"] == "LocalUncertaintyViolation"

    def test_malformed_json_exit(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["classify", "--input", str(bad)]) == 2
        capsys.readouterr()


class TestScan:
    def test_example1_csv(self, tmp_path, capsys):
        out = tmp_path / "e1.csv"
        code = main(["scan", "--family", "example1", "--out", str(out), "--v", "1:1.5:3", "--r", "0:0.6:4"])
        capsys.readouterr()
        assert code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "v,r,forward_f,reverse_f,total_f,log_negativity,nu_minus,physical"
        assert len(lines) == 1 + 3 * 4
        # spot-check the v=1, r=0.6 row against the closed form
        row = dict(zip(lines[0].split(","), lines[4].split(",")))
        assert float(row["v"]) == 1.0
        assert float(row["r"]) == 0.6
        expected = 1 + math.tanh(1.2) ** 2 - 1 / math.cosh(1.2)
        assert float(row["forward_f"]) == pytest.approx(expected, abs=1e-10)
        assert float(row["log_negativity"]) == pytest.approx(1.2, abs=1e-10)
        assert row["physical"] == "true"

    def test_deterministic_output(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["scan", "--family", "example2", "--u", "0.4:2:8", "--v", "0.4:2:8", "--seed", "0"]
        main(args + ["--out", str(a)])
        main(args + ["--out", str(b)])
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_workers_match_serial(self, tmp_path, capsys):
        a, b = tmp_path / "serial.csv", tmp_path / "par.csv"
        args = ["scan", "--family", "example3", "--eta", "0.5", "--v1", "0.5:2:5", "--v2", "0.5:2:5"]
        main(args + ["--out", str(a), "--workers", "1"])
        main(args + ["--out", str(b), "--workers", "2"])
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()

    def test_random_family_seeded(self, tmp_path, capsys):
        a, b = tmp_path / "ra.csv", tmp_path / "rb.csv"
        args = ["scan", "--family", "random-pure", "--samples", "20", "--seed", "3"]
        main(args + ["--out", str(a)])
        main(args + ["--out", str(b)])
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()
        assert len(a.read_text().splitlines()) == 21

    def test_include_unphysical(self, tmp_path, capsys):
        args = ["scan", "--family", "example2", "--u", "0.3:0.9:3", "--v", "0.3:0.9:3"]
        only_phys = tmp_path / "p.csv"
        everything = tmp_path / "all.csv"
        main(args + ["--out", str(only_phys)])
        main(args + ["--out", str(everything), "--include-unphysical"])
        capsys.readouterr()
        n_phys = len(only_phys.read_text().splitlines())
        n_all = len(everything.read_text().splitlines())
        assert n_all == 10  # header + full 3x3 grid
        assert n_phys < n_all

    def test_bad_range_exit(self, tmp_path, capsys):
        code = main(["scan", "--family", "example1", "--out", str(tmp_path / "x.csv"), "--v", "nope"])
        capsys.readouterr()
        assert code == 2


class TestSample:
    def test_tmsv_roundtrip(self, tmp_path, capsys):
        prefix = str(tmp_path / "run")
        code = main(
            ["sample", "--family", "tmsv", "--v0", "1", "--r0", "0.5", "--n", "20000", "--seed", "1", "--out", prefix]
        )
        out = json.loads(capsys.readouterr().out)
        assert code == 10
        assert out["classification"] == "atemporal"
        assert "boundary_uncertain" in out
        csv_lines = (tmp_path / "run.samples.csv").read_text(encoding="utf-8").splitlines()
        assert csv_lines[0] == "setting_a,setting_b,x_a,x_b"
        assert len(csv_lines) == 1 + 8 * 20000
        est = json.loads((tmp_path / "run.estimate.json").read_text(encoding="utf-8"))
        assert est["n_per_setting"] == 20000
        assert est["estimate"]["V_A"][0][0] == pytest.approx(math.cosh(1.0), abs=0.1)

    def test_deterministic(self, tmp_path, capsys):
        p1, p2 = str(tmp_path / "x"), str(tmp_path / "y")
        args = ["sample", "--family", "tmsv", "--n", "2000", "--seed", "7"]
        main(args + ["--out", p1])
        out1 = capsys.readouterr().out
        main(args + ["--out", p2])
        out2 = capsys.readouterr().out
        assert out1 == out2
        assert (tmp_path / "x.samples.csv").read_bytes() == (tmp_path / "y.samples.csv").read_bytes()

    def test_unsamplable_exit(self, tmp_path, capsys):
        state = {"V_A": I2.tolist(), "V_B": I2.tolist(), "C": (2 * I2).tolist()}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(state))
        code = main(["sample", "--input", str(path), "--n", "10", "--out", str(tmp_path / "z")])
        out = json.loads(capsys.readouterr().out)
        assert code == 3
        assert out["error"] == "UnsamplableMarginal"

    def test_requires_source(self, tmp_path, capsys):
        code = main(["sample", "--n", "10", "--out", str(tmp_path / "z")])
        capsys.readouterr()
        assert code == 2


class TestSmall:
    def test_thresholds(self, capsys):
        code = main(["thresholds", "--v", "1.5"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["r_ent"] == pytest.approx(0.2027326, abs=1e-6)
        assert out["r_atemp"] == pytest.approx(0.2919680, abs=1e-6)

    def test_thresholds_validation(self, capsys):
        code = main(["thresholds", "--v", "0.5"])
        capsys.readouterr()
        assert code == 2

    def test_version(self, capsys):
        assert main(["version"]) == 0
        assert capsys.readouterr().out.strip() == "0.1.0"
