import json
import subprocess
import sys

from qcharlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQcharCommand:
    def test_fundamental_term_count(self, capsys):
        code, out, _ = run_cli(capsys, "qchar", "--n", "2", "--lambda", "1,0")
        assert code == 0
        assert "terms: 3" in out
        assert "Y[1,0]" in out

    def test_decreasing_adjoint(self, capsys):
        code, out, _ = run_cli(capsys, "qchar", "--n", "2", "--lambda", "1,1", "--dir", "dec")
        assert code == 0 and "terms: 8" in out

    def test_partition_oracle_matches_tableaux(self, capsys):
        code, tab_out, _ = run_cli(
            capsys, "qchar", "--n", "2", "--kr", "2,0,2", "--full", "--json"
        )
        assert code == 0
        code, part_out, _ = run_cli(
            capsys,
            "qchar", "--n", "2", "--kr", "2,0,2", "--full", "--json",
            "--oracle", "partitions",
        )
        assert code == 0
        assert json.loads(tab_out)["terms"] == json.loads(part_out)["terms"]

    def test_partition_oracle_rejects_first_node(self, capsys):
        code, _, err = run_cli(
            capsys, "qchar", "--n", "2", "--kr", "1,0,2", "--oracle", "partitions"
        )
        assert code == 2 and "error" in err

    def test_missing_spec_is_invalid(self, capsys):
        code, _, err = run_cli(capsys, "qchar", "--n", "2")
        assert code == 2

    def test_zero_weight_is_invalid(self, capsys):
        code, _, _ = run_cli(capsys, "qchar", "--n", "2", "--lambda", "0,0")
        assert code == 2


class TestTensorCommand:
    def test_sl2_case_i(self, capsys):
        code, out, _ = run_cli(
            capsys, "tensor", "--n", "1", "--lambda", "1", "--kr", "1,-2,1"
        )
        assert code == 0
        assert "reducible (case i" in out and "lambda_prime: 1" in out

    def test_sl3_case_ii(self, capsys):
        code, out, _ = run_cli(
            capsys, "tensor", "--n", "2", "--lambda", "1,0", "--kr", "2,3,1"
        )
        assert code == 0 and "case ii" in out

    def test_sl3_irreducible(self, capsys):
        code, out, _ = run_cli(
            capsys, "tensor", "--n", "2", "--lambda", "1,0", "--kr", "2,0,1"
        )
        assert code == 0 and "verdict: irreducible" in out

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "tensor", "--n", "2", "--lambda", "1,0", "--kr", "2,3,1", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["case"] == "ii" and data["kprime"] == 1
        assert data["lambda_prime"] == {"n": 2, "Y": []}

    def test_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "tensor", "--n", "2", "--lambda", "1,0")
        assert code == 1 and "usage" in err

    def test_bad_kr_triple(self, capsys):
        code, _, _ = run_cli(
            capsys, "tensor", "--n", "2", "--lambda", "1,0", "--kr", "2,0"
        )
        assert code == 2


class TestFactorizeCommand:
    def test_splits_far_strings(self, capsys):
        mono = json.dumps({"n": 1, "Y": [[1, 0, 1], [1, 4, 1]]})
        code, out, _ = run_cli(capsys, "factorize", mono, "--json")
        assert code == 0
        assert json.loads(out) == {"strings": [[0, 1], [4, 1]]}

    def test_text_output(self, capsys):
        mono = json.dumps({"n": 1, "Y": [[1, 0, 1], [1, 2, 1]]})
        code, out, _ = run_cli(capsys, "factorize", mono)
        assert code == 0 and out.strip() == "strings: (0,2)"

    def test_rank_two_rejected(self, capsys):
        mono = json.dumps({"n": 2, "Y": [[1, 0, 1]]})
        code, _, _ = run_cli(capsys, "factorize", mono)
        assert code == 2

    def test_malformed_json(self, capsys):
        code, _, _ = run_cli(capsys, "factorize", "not-json")
        assert code == 2


class TestTransformCommand:
    def test_star(self, capsys):
        mono = json.dumps({"n": 1, "Y": [[1, 0, 1]]})
        code, out, _ = run_cli(capsys, "transform", mono, "--kind", "star")
        assert code == 0 and out.strip() == "Y[1,-2]"

    def test_tau_json(self, capsys):
        mono = json.dumps({"n": 2, "Y": [[1, 0, 1]]})
        code, out, _ = run_cli(
            capsys, "transform", mono, "--kind", "tau", "--t", "3", "--json"
        )
        assert code == 0 and json.loads(out) == {"n": 2, "Y": [[1, 3, 1]]}


def _write_config(path, **overrides):
    cfg = {
        "n_max": 2,
        "lambda_sum_max": 2,
        "k_max": 1,
        "r_window_pad": 1,
        "variants": ["normal"],
        "parallelism": 1,
        "output": str(path / "out.jsonl"),
    }
    cfg.update(overrides)
    cfg_path = path / "sweep.json"
    cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
    return cfg_path


class TestSweepCommand:
    def test_small_sweep_passes(self, capsys, tmp_path):
        cfg = _write_config(tmp_path)
        code, out, _ = run_cli(capsys, "sweep", "--config", str(cfg))
        assert code == 0
        assert "violations: 0" in out
        lines = (tmp_path / "out.jsonl").read_text().splitlines()
        assert lines and all("report" in json.loads(line) for line in lines)

    def test_rerun_is_byte_identical(self, capsys, tmp_path):
        cfg = _write_config(tmp_path)
        assert run_cli(capsys, "sweep", "--config", str(cfg))[0] == 0
        first = (tmp_path / "out.jsonl").read_bytes()
        assert run_cli(capsys, "sweep", "--config", str(cfg))[0] == 0
        assert (tmp_path / "out.jsonl").read_bytes() == first

    def test_all_variants_small(self, capsys, tmp_path):
        cfg = _write_config(tmp_path, variants=["normal", "a", "b", "c"], n_max=2,
                            lambda_sum_max=1)
        code, out, _ = run_cli(capsys, "sweep", "--config", str(cfg))
        assert code == 0 and "violations: 0" in out

    def test_parallel_matches_serial(self, capsys, tmp_path, monkeypatch):
        cfg = _write_config(tmp_path, lambda_sum_max=1)
        assert run_cli(capsys, "sweep", "--config", str(cfg))[0] == 0
        serial = (tmp_path / "out.jsonl").read_bytes()
        monkeypatch.setenv("QCHARLAB_THREADS", "2")
        assert run_cli(capsys, "sweep", "--config", str(cfg))[0] == 0
        assert (tmp_path / "out.jsonl").read_bytes() == serial

    def test_empty_grid_rejected(self, capsys, tmp_path):
        cfg = _write_config(tmp_path, n_max=0)
        code, _, err = run_cli(capsys, "sweep", "--config", str(cfg))
        assert code == 2

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = _write_config(tmp_path, bogus=1)
        code, _, _ = run_cli(capsys, "sweep", "--config", str(cfg))
        assert code == 2

    def test_missing_config_file(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "sweep", "--config", str(tmp_path / "nope.json"))
        assert code == 2


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qcharlab", "qchar", "--n", "1", "--lambda", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0 and "terms: 2" in proc.stdout

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        capsys.readouterr()
