"""Command-line surface: formats, error paths, exit codes."""

import json

import pytest

from spincensus.cli import main
from spincensus.corpus import banana, double_edge_star
from spincensus.dual_graph import graph_to_json


@pytest.fixture
def dollar_file(tmp_path):
    path = tmp_path / "dollar.json"
    path.write_text(graph_to_json(double_edge_star(2)))
    return str(path)


@pytest.fixture
def single_vertex_file(tmp_path):
    path = tmp_path / "point.json"
    path.write_text('{"vertices": [{"id": "a", "genus": 0}], "edges": []}')
    return str(path)


class TestCensusCommand:
    def test_table(self, capsys):
        assert main(["census", "-g", "4", "--tacnodes", "1", "--cusps", "1"]) == 0
        out = capsys.readouterr().out
        assert "weighted total 120 vs odd theta count 120 [OK]" in out
        assert out.count("\n") == 9  # heading + header + 6 rows + identity

    def test_csv(self, capsys):
        assert main(["census", "-g", "3", "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == ["i,j,k,h,count,multiplicity,weighted", "0,0,0,0,28,1,28"]

    def test_json(self, capsys):
        assert main(["census", "-g", "5", "--tacnodes", "2", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert len(obj["rows"]) == 6
        assert obj["identity"]["ok"] is True

    def test_nodes_leave_identity_unavailable(self, capsys):
        assert main(["census", "-g", "6", "--nodes", "2"]) == 0
        out = capsys.readouterr().out
        assert "identity unavailable" in out

    def test_csv_blank_multiplicity_for_nodes(self, capsys):
        assert main(["census", "-g", "4", "--nodes", "1", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[2].endswith(",28,,")

    def test_genus_too_small(self, capsys):
        assert main(["census", "-g", "2"]) == 1
        assert "genus" in capsys.readouterr().err

    def test_invalid_profile(self, capsys):
        assert main(["census", "-g", "3", "--tacnodes", "2"]) == 1
        assert "normalization genus" in capsys.readouterr().err


class TestRootsCommand:
    def test_omega_table(self, capsys, dollar_file):
        assert main(["roots", "--graph", dollar_file]) == 0
        out = capsys.readouterr().out
        assert "support_bitmask" in out
        # genus 3 graph: weighted total 4^3
        assert "weighted total: 64 vs 4^genus = 64 [OK]" in out

    def test_csv(self, capsys, dollar_file):
        assert main(["roots", "--graph", dollar_file, "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "support_bitmask,class_count,multiplicity,odd,even,parity_model"
        assert len(lines) == 5  # header + 2^2 supports

    def test_json(self, capsys, dollar_file):
        assert main(["roots", "--graph", dollar_file, "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["weighted_total"] == obj["expected_total"] == 64
        assert len(obj["entries"]) == 4

    def test_explicit_parity_gets_sentinel(self, capsys, tmp_path):
        path = tmp_path / "banana.json"
        path.write_text(graph_to_json(banana(1, 1)))
        assert main(["roots", "--graph", str(path), "--parity", "1,1", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert all(line.endswith("NotComputed") for line in lines[1:])

    def test_unsolvable_parity(self, capsys, single_vertex_file):
        assert main(["roots", "--graph", single_vertex_file, "--parity", "1"]) == 0
        assert "no admissible subgraphs" in capsys.readouterr().out

    def test_missing_file(self, capsys):
        assert main(["roots", "--graph", "/does/not/exist.json"]) == 1
        assert "cannot read graph file" in capsys.readouterr().err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{")
        assert main(["roots", "--graph", str(path)]) == 1
        assert "malformed" in capsys.readouterr().err

    def test_parity_length_mismatch(self, capsys, dollar_file):
        assert main(["roots", "--graph", dollar_file, "--parity", "1,0"]) == 1
        assert "3 vertices" in capsys.readouterr().err


class TestReduceCommand:
    def test_table(self, capsys):
        assert main(["reduce", "-g", "4", "--cusps", "1"]) == 0
        out = capsys.readouterr().out
        assert "base change order: 6" in out
        assert "weighted total 120 vs odd theta count 120 [OK]" in out

    def test_dot(self, capsys):
        assert main(["reduce", "-g", "5", "--tacnodes", "1", "--cusps", "1", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert 'tail="cusp"' in out and 'tail="tacnode"' in out
        assert out.count('"center" -- "tac1";') == 2

    def test_json(self, capsys):
        assert main(["reduce", "-g", "5", "--tacnodes", "1", "--cusps", "1", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["base_change"]["combined"] == 12
        assert obj["total"] == obj["expected"] == 496
        assert obj["fibers"][0]["type"] == {"i": 0, "j": 0, "k": 0}

    def test_csv(self, capsys):
        assert main(["reduce", "-g", "4", "--cusps", "1", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "i,j,k,t,fiber_size,weighted"
        assert lines[1:] == ["0,0,0,36,1,36", "0,0,1,28,1,84"]

    def test_normalization_genus_negative(self, capsys):
        assert main(["reduce", "-g", "3", "--tacnodes", "2"]) == 1
        assert capsys.readouterr().err

    def test_genus_too_small(self, capsys):
        assert main(["reduce", "-g", "2"]) == 1


class TestVerifyCommand:
    def test_arf_suite(self, capsys):
        assert main(["verify", "arf"]) == 0
        out = capsys.readouterr().out
        for g in range(1, 7):
            assert f"PASS arf census g={g}" in out
        assert "FAIL" not in out

    def test_identity_suite(self, capsys):
        assert main(["verify", "identity"]) == 0
        assert "FAIL" not in capsys.readouterr().out

    def test_thread_cap_rejects_garbage(self, capsys, monkeypatch):
        monkeypatch.setenv("SPIN_CENSUS_THREADS", "zero")
        assert main(["verify", "admissible"]) == 1
        assert "SPIN_CENSUS_THREADS" in capsys.readouterr().err

    def test_thread_cap_rejects_nonpositive(self, capsys, monkeypatch):
        monkeypatch.setenv("SPIN_CENSUS_THREADS", "0")
        assert main(["verify", "admissible"]) == 1

    def test_thread_cap_parallel_run(self, capsys, monkeypatch):
        monkeypatch.setenv("SPIN_CENSUS_THREADS", "2")
        assert main(["verify", "admissible"]) == 0
        assert "FAIL" not in capsys.readouterr().out
