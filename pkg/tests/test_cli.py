"""CLI behaviour: round trips, reproducibility, exit codes."""

import json
import subprocess
import sys

import pytest

from spliceops.cli import main
from spliceops.expr import parse_expr
from spliceops.tree import canonicalize

from test_expr import depth2_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCanonAndEq:
    def test_canon_round_trip_corpus(self, capsys):
        for text in depth2_corpus():
            try:
                code, out, _ = run(capsys, "canon", text)
            except Exception:
                raise AssertionError(f"canon failed on {text!r}")
            assert code == 0
            expr = out.strip()
            assert canonicalize(parse_expr(expr)) == parse_expr(expr)
            code2, out2, _ = run(capsys, "canon", expr)
            assert out2.strip() == expr  # canonical output is a fixed point

    def test_eq_detects_same_knot(self, capsys):
        code, out, _ = run(capsys, "eq", "sum(T(2,3),T(2,5))", "sum(T(2,5),T(2,3))")
        assert code == 0 and out.strip() == "true"
        code, out, _ = run(capsys, "eq", "T(2,3)", "mirror(T(2,3))")
        assert code == 0 and out.strip() == "false"

    def test_complexity(self, capsys):
        code, out, _ = run(capsys, "complexity", "sum(T(2,3),T(2,3))")
        assert code == 0 and out.strip() == "3"
        code, out, _ = run(capsys, "complexity", "unknot")
        assert out.strip() == "0"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "canon", "--json", "sum(T(2,3),fig8)")
        data = json.loads(out)
        assert data["kind"] == "sum"


class TestAxioms:
    def test_reproducible_bytes(self, capsys):
        args = ("axioms", "--operad", "overlap", "--trials", "40", "--seed", "11")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_corrupt_mode_fails_with_counterexample(self, capsys):
        code, out, _ = run(
            capsys, "axioms", "--operad", "splice", "--trials", "5", "--seed", "1", "--corrupt"
        )
        assert code == 1
        assert "counterexample" in out

    def test_all_operads_pass(self, capsys):
        for operad in ("cubes", "overlap", "splice"):
            code, out, _ = run(
                capsys, "axioms", "--operad", operad, "--trials", "25", "--seed", "2"
            )
            assert code == 0, out
            assert "result: OK" in out


class TestRealize:
    def test_verdict(self, capsys):
        code, out, _ = run(
            capsys, "realize", "--n", "10", "--p", "2", "--q", "5", "--cycles", "(5)-"
        )
        assert code == 0
        assert out.startswith("ACCEPT")
        assert "rule 4" in out

    def test_swap_convention(self, capsys):
        code, out, _ = run(
            capsys,
            "realize", "--n", "10", "--p", "5", "--q", "2",
            "--cycles", "(5)-", "--convention", "swap",
        )
        assert out.startswith("ACCEPT")

    def test_enumerate(self, capsys):
        code, out, _ = run(
            capsys, "realize", "--n", "10", "--p", "2", "--q", "5", "--enumerate", "--k", "5"
        )
        assert code == 0
        assert "(5)-" in out

    def test_fixed_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "realize", "--n", "6", "--p", "3", "--q", "2",
            "--cycles", "(6)+ (1)+", "--fixed",
        )
        assert out.startswith("ACCEPT")


class TestGeomAndEmit:
    def test_geom_selftest(self, capsys):
        code, out, _ = run(capsys, "geom", "selftest", "--samples", "200")
        assert code == 0
        assert "result: OK" in out

    def test_emit_dot(self, capsys):
        code, out, _ = run(capsys, "emit", "--dot", "sum(T(2,3),fig8)")
        assert code == 0
        assert out.startswith("digraph")

    def test_emit_json(self, capsys):
        code, out, _ = run(capsys, "emit", "--json", "cable(2,3;fig8)")
        assert json.loads(out)["kind"] == "cable"


class TestErrors:
    def test_unknown_verb_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["canon", "--bogus", "unknot"])
        assert exc.value.code == 2

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "canon", "sum(T(2,3)")
        assert code == 2
        assert "error" in err

    def test_reducible_satellite_exits_2(self, capsys):
        code, _, err = run(capsys, "canon", "splice(whitehead; unknot)")
        assert code == 2
        assert "unknot" in err

    def test_bad_trials(self, capsys):
        code, _, err = run(capsys, "axioms", "--operad", "cubes", "--trials", "0")
        assert code == 2


class TestCatalogueFlag:
    def test_custom_catalogue(self, tmp_path, capsys):
        data = {
            "knots": [{"name": "customknot", "invertible": True, "amphichiral": True}],
            "links": [],
        }
        path = tmp_path / "cat.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "--catalogue", str(path), "canon", "rev(customknot)")
        assert code == 0
        assert out.strip() == "customknot"

    def test_environment_variable(self, tmp_path, capsys, monkeypatch):
        data = {
            "knots": [{"name": "envknot", "invertible": False, "amphichiral": False}],
            "links": [],
        }
        path = tmp_path / "cat.json"
        path.write_text(json.dumps(data))
        monkeypatch.setenv("SPLICE_CATALOGUE", str(path))
        code, out, _ = run(capsys, "canon", "rev(envknot)")
        assert code == 0
        assert out.strip() == "rev(envknot)"


def test_console_entry_subprocess():
    out1 = subprocess.run(
        [sys.executable, "-m", "spliceops.cli", "axioms", "--operad", "cubes",
         "--trials", "20", "--seed", "7"],
        capture_output=True, text=True,
    )
    out2 = subprocess.run(
        [sys.executable, "-m", "spliceops.cli", "axioms", "--operad", "cubes",
         "--trials", "20", "--seed", "7"],
        capture_output=True, text=True,
    )
    assert out1.returncode == 0
    assert out1.stdout == out2.stdout


class TestRealizeFeasibility:
    def test_k_only_feasibility(self, capsys):
        code, out, _ = run(capsys, "realize", "--n", "10", "--p", "2", "--q", "5", "--k", "5")
        assert code == 0 and out.strip() == "feasible"
        code, out, _ = run(capsys, "realize", "--n", "10", "--p", "3", "--q", "7", "--k", "5")
        assert code == 0 and out.strip() == "infeasible"

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "realize", "--n", "10", "--p", "2", "--q", "5")
        assert code == 2
        code, _, err = run(capsys, "realize", "--n", "10", "--p", "2", "--q", "5", "--enumerate")
        assert code == 2


def test_scripts_run():
    for cmd in (
        [sys.executable, "scripts/run_axiom_sweep.py", "--trials", "40"],
        [sys.executable, "scripts/reproduce_examples.py"],
    ):
        proc = subprocess.run(cmd, capture_output=True, text=True, cwd=".")
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout
