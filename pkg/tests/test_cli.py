import io
import json

import pytest

from domgame import cli, harness
from domgame.families import FamilySpec, generate
from domgame.graph import (PartiallyDominatedGraph, format_edge_list,
                           parse_edge_list)


def run_cli(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def p11_file(tmp_path):
    lg = generate(FamilySpec("path", {"n": 11}))
    path = tmp_path / "p11.el"
    path.write_text(format_edge_list(PartiallyDominatedGraph(lg.graph)))
    return str(path)


class TestSolve:
    def test_p11(self, p11_file):
        code, out = run_cli("solve", p11_file)
        assert code == 0
        assert "gamma_g = 5" in out

    def test_staller_start(self, p11_file):
        code, out = run_cli("solve", p11_file, "--start", "staller")
        assert code == 0
        assert "gamma_g_staller =" in out

    def test_fully_dominated(self, tmp_path):
        lg = generate(FamilySpec("path", {"n": 3}))
        f = tmp_path / "done.el"
        f.write_text(format_edge_list(PartiallyDominatedGraph(lg.graph)))
        code, out = run_cli("solve", str(f), "--dominated", "0,1,2")
        assert code == 0
        assert "gamma_g = 0" in out

    def test_flag_overrides_file_dominated(self, tmp_path):
        lg = generate(FamilySpec("path", {"n": 3}))
        f = tmp_path / "g.el"
        f.write_text(format_edge_list(PartiallyDominatedGraph(lg.graph, 0b111)))
        code, out = run_cli("solve", str(f), "--dominated", "")
        assert code == 0
        assert "gamma_g = 1" in out

    def test_missing_file(self):
        code, _ = run_cli("solve", "/nonexistent/graph.el")
        assert code == 2

    def test_malformed_file(self, tmp_path):
        f = tmp_path / "bad.el"
        f.write_text("not an edge list\n")
        code, _ = run_cli("solve", str(f))
        assert code == 2

    def test_cap_env_override(self, p11_file, monkeypatch):
        monkeypatch.setenv("DOMGAME_CAP", "5")
        code, _ = run_cli("solve", p11_file)
        assert code == 2


class TestGamma:
    def test_p7(self, tmp_path):
        lg = generate(FamilySpec("path", {"n": 7}))
        f = tmp_path / "p7.el"
        f.write_text(format_edge_list(PartiallyDominatedGraph(lg.graph)))
        code, out = run_cli("gamma", str(f))
        assert code == 0
        assert "gamma = 3" in out


class TestFamily:
    def test_emit_then_solve(self, tmp_path):
        f = tmp_path / "c9h.el"
        code, out = run_cli("family", "hatted-cycle", "n=9", "--emit", str(f))
        assert code == 0
        code, out = run_cli("solve", str(f))
        assert code == 0
        assert "gamma_g = 5" in out

    def test_emit_roundtrip(self, tmp_path):
        f = tmp_path / "t.el"
        code, _ = run_cli("family", "tadpole", "m=5", "n=3", "--emit", str(f))
        assert code == 0
        reparsed = parse_edge_list(f.read_text())
        lg = generate(FamilySpec("tadpole", {"m": 5, "n": 3}))
        assert reparsed.graph == lg.graph

    def test_emit_roundtrip_with_dominated(self, tmp_path):
        f = tmp_path / "pp.el"
        code, _ = run_cli("family", "prime-path", "n=4", "--emit", str(f))
        assert code == 0
        reparsed = parse_edge_list(f.read_text())
        lg = generate(FamilySpec("prime-path", {"n": 4}))
        assert reparsed == lg.partial

    def test_bad_params(self):
        code, _ = run_cli("family", "tadpole", "m=2", "n=1")
        assert code == 2

    def test_inline_solve(self):
        code, out = run_cli("family", "broken-ladder", "k=1", "--solve")
        assert code == 0
        assert "gamma_g = 6" in out


class TestReports:
    def test_verify_tables_ok(self):
        code, out = run_cli("verify-tables")
        assert code == 0
        assert "ok = True" in out

    def test_table_mismatch_exits_1(self, monkeypatch):
        broken = dict(harness.TADPOLE_TABLE_EXPECTED)
        broken[(0, 0)] = (9, 9, 9)
        monkeypatch.setattr(harness, "TADPOLE_TABLE_EXPECTED", broken)
        code, out = run_cli("verify-tables")
        assert code == 1
        assert "ok = False" in out

    def test_check_r(self):
        code, out = run_cli("check-r", "--max", "2")
        assert code == 0

    def test_add_edges_json(self, tmp_path):
        out_file = tmp_path / "report.json"
        code, _ = run_cli("--format", "json", "--output", str(out_file),
                          "add-edges", "--base", "path", "--n", "9", "--k", "2")
        assert code == 0
        doc = json.loads(out_file.read_text())
        assert doc["max_value"] <= 5

    def test_sweep_csv(self):
        code, out = run_cli("--format", "csv", "sweep", "broken-ladder",
                            "--k-max", "1")
        assert code == 0
        assert out.splitlines()[0] == harness.CSV_HEADER

    def test_props(self):
        code, out = run_cli("props", "--seed", "1", "--trials", "5")
        assert code == 0
        assert "ok = True" in out

    def test_usage_error(self):
        code, _ = run_cli("no-such-command")
        assert code == 2
