"""CLI: commands, exit codes, end-to-end flows."""

import json

import pytest

import skelgraph as sk
from skelgraph import io as sio
from skelgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


class TestFixtureCommand:
    def test_kodaira(self, capsys):
        code, out, _ = run(capsys, "fixture", "kodaira-II")
        assert code == 0
        g = sio.graph_from_json(json.loads(out))
        assert g == sk.fixtures.kodaira_type_ii()

    def test_cycle_with_n(self, capsys):
        code, out, _ = run(capsys, "fixture", "cycle", "--n", "5")
        assert code == 0
        assert len(json.loads(out)["vertices"]) == 5

    def test_stable_metric_flag(self, capsys):
        code, out, _ = run(capsys, "fixture", "kodaira-II", "--metric", "stable")
        assert code == 0
        assert json.loads(out)["metric"] == "stable"

    def test_in_star_one(self, capsys):
        code, out, _ = run(capsys, "fixture", "kodaira-In-star", "--n", "1")
        assert code == 0
        doc = json.loads(out)
        mults = sorted(v["N"] for v in doc["vertices"])
        assert mults == [1, 1, 1, 1, 2, 2]

    def test_unknown_fixture_is_usage_error(self, capsys):
        with pytest.raises(SystemExit):
            main(["fixture", "nope"])


class TestVerifyCommand:
    def test_laplacian_pass(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.kodaira_type_ii()))
        dpath = write_json(tmp_path / "d.json",
                           sio.data_to_json(sk.fixtures.kodaira_type_ii_data()))
        code, out, _ = run(capsys, "verify", "laplacian",
                           "--graph", gpath, "--data", dpath)
        assert code == 0
        report = json.loads(out)
        assert report["ok"] is True
        lap = sio.divisor_from_json(report["laplacian"])
        assert lap == sk.GraphDivisor({
            sk.GraphPoint.at_vertex("v1"): -1, sk.GraphPoint.at_vertex("v2"): -2,
            sk.GraphPoint.at_vertex("v3"): -3, sk.GraphPoint.at_vertex("v4"): 6})

    def test_laplacian_fail_exits_one(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.kodaira_type_ii()))
        bad = sk.PluricanonicalModelData(m=1, nu={"v1": 0, "v2": 2, "v3": 3, "v4": 5})
        dpath = write_json(tmp_path / "d.json", sio.data_to_json(bad))
        code, out, _ = run(capsys, "verify", "laplacian",
                           "--graph", gpath, "--data", dpath)
        assert code == 1
        assert json.loads(out)["ok"] is False

    def test_essential_kodaira(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.kodaira_type_ii()))
        code, out, _ = run(capsys, "verify", "essential", "--graph", gpath)
        assert code == 0
        skel = json.loads(out)["essential_skeleton"]
        assert [v["id"] for v in skel["vertices"]] == ["v4"]

    def test_ks_kodaira(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.kodaira_type_ii()))
        dpath = write_json(tmp_path / "d.json",
                           sio.data_to_json(sk.fixtures.kodaira_type_ii_data()))
        code, out, _ = run(capsys, "verify", "ks", "--graph", gpath, "--data", dpath)
        assert code == 0
        assert json.loads(out)["ks_skeleton"]["vertices"] == ["v4"]

    def test_min_locus_theta(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.theta_graph()))
        code, out, _ = run(capsys, "verify", "min-locus", "--graph", gpath)
        assert code == 0
        report = json.loads(out)
        assert set(report["edges"]) == {"e0", "e1", "e2"}
        assert all(entry["ok"] for entry in report["edges"].values())

    def test_min_locus_broken_hypotheses_exits_one(self, tmp_path, capsys):
        # a tree has only bridges, so requesting a specific edge fails
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.path_graph(3)))
        data = write_json(tmp_path / "w.json", {"edge": "e0"})
        code, out, _ = run(capsys, "verify", "min-locus",
                           "--graph", gpath, "--data", data)
        assert code == 1
        report = json.loads(out)
        assert not report["ok"]
        assert "bridge" in report["edges"]["e0"]["error"]

    def test_bridge_dumbbell(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.dumbbell(2)))
        code, out, _ = run(capsys, "verify", "bridge", "--graph", gpath)
        assert code == 0
        report = json.loads(out)
        assert len(report["chains"]) == 1
        assert len(report["chains"][0]["chain"]) == 2

    def test_nonbridge_union(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.dumbbell(1)))
        code, out, _ = run(capsys, "verify", "nonbridge", "--graph", gpath)
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_schema_violation_exits_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "verify", "essential", "--graph", str(bad))
        assert code == 2
        assert "error" in err

    def test_missing_data_exits_two(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.kodaira_type_ii()))
        code, _, err = run(capsys, "verify", "laplacian", "--graph", gpath)
        assert code == 2


class TestExportDot:
    def test_star_with_lengths(self, tmp_path, capsys):
        gpath = write_json(tmp_path / "g.json",
                           sio.graph_to_json(sk.fixtures.kodaira_type_ii()))
        code, out, _ = run(capsys, "export-dot", "--graph", gpath)
        assert code == 0
        for frac in ("1/6", "1/12", "1/18"):
            assert frac in out

    def test_locus_overlay(self, tmp_path, capsys):
        g = sk.fixtures.kodaira_type_ii()
        gpath = write_json(tmp_path / "g.json", sio.graph_to_json(g))
        lpath = write_json(tmp_path / "l.json",
                           sio.locus_to_json(sk.vertex_locus(g, "v4")))
        code, out, _ = run(capsys, "export-dot", "--graph", gpath,
                           "--locus", lpath)
        assert code == 0
        assert 'locus="1"' in out


class TestSolve:
    def test_kodaira_poisson(self, tmp_path, capsys):
        g = sk.fixtures.kodaira_type_ii()
        gpath = write_json(tmp_path / "g.json", sio.graph_to_json(g))
        dpath = write_json(tmp_path / "d.json",
                           sio.divisor_to_json(sk.canonical_divisor(g)))
        code, out, _ = run(capsys, "solve", "--graph", gpath,
                           "--divisor", dpath, "--anchor", "v4")
        assert code == 0
        f = sio.function_from_json(json.loads(out))
        assert sk.laplacian(g, f) == sk.canonical_divisor(g)

    def test_degree_mismatch_exits_two(self, tmp_path, capsys):
        g = sk.fixtures.theta_graph()
        gpath = write_json(tmp_path / "g.json", sio.graph_to_json(g))
        dpath = write_json(tmp_path / "d.json",
                           sio.divisor_to_json(sk.GraphDivisor.at("u", 1)))
        code, _, err = run(capsys, "solve", "--graph", gpath,
                           "--divisor", dpath, "--anchor", "u")
        assert code == 2
