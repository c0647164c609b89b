"""Command line behavior: outputs, formats, exit codes, error objects."""

import io
import json

import pytest

from helpers import E1_TEXT, E2_TEXT
from primspec.cli import main


@pytest.fixture()
def e1_file(tmp_path):
    p = tmp_path / "e1.graph"
    p.write_text(E1_TEXT)
    return str(p)


@pytest.fixture()
def e2_file(tmp_path):
    p = tmp_path / "e2.graph"
    p.write_text(E2_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestReports:
    def test_parse(self, capsys, e1_file):
        code, out = run_json(capsys, "parse", "--graph", e1_file)
        assert code == 0
        assert out == {
            "schema": "primspec/1",
            "graph": {
                "vertices": ["v", "w"],
                "edges": [["v", "v", 1], ["v", "w", "inf"]],
            },
        }

    def test_tails(self, capsys, e2_file):
        code, out = run_json(capsys, "tails", "--graph", e2_file)
        assert code == 0
        assert [t["id"] for t in out["tails"]] == ["M1", "M2", "M3"]
        assert [t["kind"] for t in out["tails"]] == ["tau", "gamma", "tau"]
        assert out["tails"][2]["k_m"] == ["w"]

    def test_bv(self, capsys, e1_file):
        code, out = run_json(capsys, "bv", "--graph", e1_file)
        assert (code, out["breaking_vertices"]) == (0, ["v"])

    def test_hs(self, capsys, e1_file):
        code, out = run_json(capsys, "hs", "--graph", e1_file)
        assert out["sets"] == [[], ["w"], ["v", "w"]]

    def test_ideals_with_hasse(self, capsys, e1_file):
        code, out = run_json(capsys, "ideals", "--graph", e1_file)
        assert out["ideals"] == [
            {"K": [], "B": []},
            {"K": ["w"], "B": []},
            {"K": ["w"], "B": ["v"]},
            {"K": ["v", "w"], "B": []},
        ]
        assert out["hasse"] == [[0, 1], [1, 2], [2, 3]]

    def test_prim(self, capsys, e1_file):
        code, out = run_json(capsys, "prim", "--graph", e1_file)
        assert out["gamma"] == [
            {"tail": "M2", "vertices": ["v", "w"], "ideal": {"K": [], "B": []}}
        ]
        assert out["bv"] == [{"vertex": "v", "ideal": {"K": ["w"], "B": []}}]
        assert out["tau"][0]["sandwich"] == {
            "lower": {"K": ["w"], "B": ["v"]},
            "upper": {"K": ["v", "w"], "B": []},
        }

    def test_simple(self, capsys, e1_file):
        code, out = run_json(capsys, "simple", "--graph", e1_file)
        assert out["simple"] is False


class TestClosure:
    def test_json_set(self, capsys, e2_file):
        code, out = run_json(
            capsys, "closure", "--graph", e2_file,
            "--set", '{"circle":{"M3":"arc:(0,1/2)"}}',
        )
        assert code == 0
        assert out == {"gamma": ["M2"], "circle": {"M1": "T", "M3": "arc:[0,1/2]"}}

    def test_inline_set(self, capsys, e1_file):
        code, out = run_json(capsys, "closure", "--graph", e1_file, "--set", "bv:v")
        assert out == {"bv": ["v"], "circle": {"M1": "T"}}

    def test_empty_set(self, capsys, e1_file):
        code, out = run_json(capsys, "closure", "--graph", e1_file, "--set", "{}")
        assert (code, out) == (0, {})

    def test_label_by_root(self, capsys, e1_file):
        code, out = run_json(
            capsys, "closure", "--graph", e1_file, "--set", "v:point:1/4",
            "--label-by-root",
        )
        assert out == {"circle": {"v": "point:1/4"}}

    def test_unknown_tail_id(self, capsys, e1_file):
        code, out = run_json(capsys, "closure", "--graph", e1_file, "--set", "M9")
        assert code == 2
        assert out["error"]["kind"] == "validation"
        assert "M9" in out["error"]["message"]

    def test_text_format(self, capsys, e1_file):
        code, out = run(capsys, "closure", "--graph", e1_file, "--set", "M2",
                        "--format", "text")
        assert code == 0
        assert out.splitlines() == ["gamma M2", "bv v", "circle M1: T"]


class TestOrderAndQuotient:
    def test_order_pairs(self, capsys, e2_file):
        code, out = run_json(capsys, "order", "--graph", e2_file)
        pairs = {(p["from"], p["to"]) for p in out["pairs"]}
        assert ("circle:M3", "gamma:M2") in pairs
        assert ("circle:M3", "circle:M1") in pairs
        assert ("gamma:M2", "circle:M1") in pairs
        assert ("circle:M1", "gamma:M2") not in pairs

    def test_order_dot(self, capsys, e1_file):
        code, out = run(capsys, "order", "--graph", e1_file, "--format", "dot")
        assert code == 0
        assert out.startswith("digraph Specialization {")
        assert '"bv:v" -> "circle:M1"' in out

    def test_quotient(self, capsys, e1_file):
        code, out = run_json(capsys, "quotient", "--graph", e1_file,
                             "--K", "w", "--B", "v")
        assert out["graph"] == {"vertices": ["v"], "edges": [["v", "v", 1]]}

    def test_quotient_empty_k(self, capsys, e1_file):
        code, out = run_json(capsys, "quotient", "--graph", e1_file, "--K", "")
        assert out["graph"]["vertices"] == ["v", "w"]

    def test_quotient_inadmissible_exit_3(self, capsys, e1_file):
        code, out = run_json(capsys, "quotient", "--graph", e1_file, "--K", "v")
        assert code == 3
        assert out["error"]["kind"] == "inadmissible"

    def test_quotient_dot(self, capsys, e1_file):
        code, out = run(capsys, "quotient", "--graph", e1_file, "--K", "w",
                        "--format", "dot")
        assert '"v" -> "beta_v"' in out


class TestInputsAndErrors:
    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(E1_TEXT))
        code, out = run_json(capsys, "bv", "--graph", "-")
        assert (code, out["breaking_vertices"]) == (0, ["v"])

    def test_parse_error_exit_2(self, capsys, tmp_path):
        p = tmp_path / "bad.graph"
        p.write_text("graph { vertices: a; edge a -> zz; }")
        code, out = run_json(capsys, "parse", "--graph", str(p))
        assert code == 2
        err = out["error"]
        assert err["kind"] == "parse" and err["line"] == 1 and "zz" in err["message"]

    def test_missing_file_exit_2(self, capsys):
        code, out = run_json(capsys, "parse", "--graph", "/nonexistent/g.graph")
        assert code == 2
        assert out["error"]["kind"] == "validation"

    def test_graph_text_round_trip(self, capsys, e2_file):
        code, out = run(capsys, "parse", "--graph", e2_file, "--format", "text")
        assert code == 0
        assert out == (
            "graph {\n"
            "  vertices: u, v, w;\n"
            "  edge u -> u;\n"
            "  edge u -> v;\n"
            "  edge v -> w [inf];\n"
            "  edge w -> w;\n"
            "}\n"
        )

    def test_graph_dot(self, capsys, e1_file):
        code, out = run(capsys, "parse", "--graph", e1_file, "--format", "dot")
        assert '"v" -> "w" [label="inf"];' in out

    def test_outputs_are_single_line_json(self, capsys, e2_file):
        for args in (("tails",), ("bv",), ("hs",), ("ideals",), ("prim",),
                     ("simple",), ("order",)):
            code, out = run(capsys, *args, "--graph", e2_file)
            assert code == 0
            assert out.count("\n") == 1 and out.endswith("\n")
