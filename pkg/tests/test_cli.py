import json

import pytest

from girthspec import (
    BipartiteGraph,
    complete_bipartite,
    random_biregular,
    tesseract,
    write_alist,
    write_edge_list,
)
from girthspec.cli import main


@pytest.fixture
def k34_alist(tmp_path):
    path = tmp_path / "k34.alist"
    path.write_text(write_alist(complete_bipartite(3, 4)))
    return str(path)


@pytest.fixture
def q4_el(tmp_path):
    path = tmp_path / "q4.el"
    path.write_text(write_edge_list(tesseract()))
    return str(path)


@pytest.fixture
def irregular_el(tmp_path):
    g = BipartiteGraph.from_edges(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1),
                                         (1, 2), (2, 1), (2, 2)])
    path = tmp_path / "irregular.el"
    path.write_text(write_edge_list(g))
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCount:
    def test_transfer_k34(self, capsys, k34_alist):
        code, report = run_json(capsys, ["count", "--input", k34_alist,
                                         "--route", "transfer", "--max-k", "6"])
        assert code == 0
        assert report["schema"] == "girthspec/1"
        assert report["counts"] == {"4": 18, "6": 24}
        assert report["input"]["format"] == "alist"
        assert report["error"] is None

    def test_auto_picks_transfer_on_q4(self, capsys, q4_el):
        code, report = run_json(capsys, ["count", "--input", q4_el,
                                         "--route", "auto"])
        assert code == 0
        assert report["counts"]["4"] == 24
        assert report["routes"][0]["name"] == "transfer"

    def test_transfer_on_irregular_exits_2(self, capsys, irregular_el):
        code, report = run_json(capsys, ["count", "--input", irregular_el,
                                         "--route", "transfer"])
        assert code == 2
        assert "bi-regular" in report["error"]["message"]

    def test_auto_falls_back_to_trace(self, capsys, irregular_el):
        code, report = run_json(capsys, ["count", "--input", irregular_el,
                                         "--route", "auto"])
        assert code == 0
        assert report["routes"][0]["name"] == "trace"

    def test_parse_error_exits_4(self, capsys, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("not a graph\n")
        code, report = run_json(capsys, ["count", "--input", str(bad)])
        assert code == 4
        assert report["error"]["code"] == 4

    def test_missing_file_exits_4(self, capsys, tmp_path):
        code, report = run_json(capsys, ["count", "--input",
                                         str(tmp_path / "nope.el")])
        assert code == 4

    def test_forest_exits_2(self, capsys, tmp_path):
        path = tmp_path / "tree.el"
        path.write_text("2 1\n0 0\n1 0\n")
        code, report = run_json(capsys, ["count", "--input", str(path)])
        assert code == 2

    def test_emit_spectra(self, capsys, q4_el):
        code, report = run_json(capsys, ["count", "--input", q4_el,
                                         "--route", "transfer", "--emit-spectra"])
        assert code == 0
        assert {"re", "im", "mult"} == set(report["spectra"]["edge"][0])
        assert sum(e["mult"] for e in report["spectra"]["edge"]) == 64

    def test_json_round_trips(self, capsys, q4_el):
        _, report = run_json(capsys, ["count", "--input", q4_el])
        assert json.loads(json.dumps(report)) == report

    def test_deterministic_output(self, capsys, q4_el):
        _, a = run_json(capsys, ["count", "--input", q4_el])
        _, b = run_json(capsys, ["count", "--input", q4_el])
        a["routes"] = b["routes"] = None  # timings excluded
        assert a == b

    def test_table_mode(self, capsys, k34_alist):
        code = main(["count", "--input", k34_alist, "--table"])
        out = capsys.readouterr().out
        assert code == 0
        assert "N_4 = 18" in out

    def test_dense_cap_env(self, capsys, q4_el, monkeypatch):
        monkeypatch.setenv("GIRTHSPEC_DENSE_CAP", "4")
        code, report = run_json(capsys, ["count", "--input", q4_el,
                                         "--route", "transfer"])
        assert code == 2
        monkeypatch.setenv("GIRTHSPEC_DENSE_CAP", "8000")
        code, _ = run_json(capsys, ["count", "--input", q4_el,
                                    "--route", "transfer"])
        assert code == 0


class TestVerify:
    def test_q4_all_routes_agree(self, capsys, q4_el):
        code, report = run_json(capsys, ["verify", "--input", q4_el])
        assert code == 0
        assert report["agreement"]["ok"] is True
        names = {r["name"] for r in report["routes"]}
        assert {"transfer", "trace", "direct", "brute"} <= names

    def test_random_biregular(self, capsys, tmp_path):
        g = random_biregular(6, 4, 2, 3, seed=5)
        path = tmp_path / "r23.el"
        path.write_text(write_edge_list(g))
        code, report = run_json(capsys, ["verify", "--input", str(path)])
        assert code == 0 and report["agreement"]["ok"]

    def test_girth6_includes_cross_check(self, capsys, tmp_path):
        seed = 0
        from girthspec import profile
        while True:
            g = random_biregular(9, 6, 2, 3, seed=seed)
            if (gi := profile(g).girth) is not None and gi >= 6:
                break
            seed += 1
        path = tmp_path / "g6.el"
        path.write_text(write_edge_list(g))
        code, report = run_json(capsys, ["verify", "--input", str(path)])
        assert code == 0
        assert report["cross_check_g_plus_4"] == report["counts"][str(gi + 4)]

    def test_corrupted_input_fixture(self, capsys, tmp_path):
        # edge list whose declared shape cannot parse
        bad = tmp_path / "corrupt.el"
        bad.write_text("3 3\n0 0\n9 9\n")
        code, _ = run_json(capsys, ["verify", "--input", str(bad)])
        assert code == 4


class TestBench:
    def test_csv_output(self, capsys):
        code = main(["bench", "--dv", "3", "--dc", "6", "--sizes", "12,24",
                     "--seed", "1"])
        out = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert out[0] == "n,m,edges,t_transfer_ms,t_direct_ms"
        assert len(out) == 3
        n, m, e, t1, t2 = out[1].split(",")
        assert (n, m, e) == ("12", "6", "36")
        float(t1), float(t2)  # both columns populated

    def test_dv_two_family_marks_na(self, capsys):
        code = main(["bench", "--dv", "2", "--dc", "2", "--sizes", "6",
                     "--seed", "0"])
        out = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert out[1].split(",")[3] == "n/a"
