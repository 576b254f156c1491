import json

import pytest

from densecolor.cli import main
from densecolor.graph import format_edge_list

from .conftest import complete_graph

K6_TEXT = format_edge_list(complete_graph(6))


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_color_k6(tmp_path, capsys):
    graph = tmp_path / "k6.txt"
    graph.write_text(K6_TEXT)
    code, out = run_cli(capsys, "color", str(graph))
    assert code == 0
    doc = json.loads(out)
    assert doc["graph_class"] == 1
    assert doc["palette"] == 5
    assert doc["instance"]["order"] == 6


def test_color_verify_round_trip(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    coloring = tmp_path / "g.col"
    code = main(
        ["generate", "random-dense", "--order", "20", "--seed", "3", "--out", str(graph)]
    )
    assert code == 0
    code, out = run_cli(capsys, "color", str(graph), "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    coloring.write_text(doc["coloring"])
    code, out = run_cli(capsys, "verify", str(graph), str(coloring))
    assert code == 0
    verdict = json.loads(out)
    assert verdict["ok"] and verdict["proper"] and verdict["complete"]
    assert verdict["palette"] == doc["palette"]


def test_detect_overfull_subcommand(tmp_path, capsys):
    graph = tmp_path / "p12.txt"
    assert (
        main(
            ["generate", "planted-overfull", "--order", "12", "--seed", "0", "--out", str(graph)]
        )
        == 0
    )
    code, out = run_cli(capsys, "detect-overfull", str(graph))
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "overfull-found"
    assert isinstance(doc["witness"], int)


def test_oracle_subcommand(tmp_path, capsys):
    graph = tmp_path / "k6.txt"
    graph.write_text(K6_TEXT)
    code, out = run_cli(capsys, "oracle", str(graph))
    assert code == 0
    doc = json.loads(out)
    assert doc["chromatic_index"] == 5
    assert doc["graph_class"] == 1


def test_exit_code_2_on_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 4 1\ne 0 9\n")
    assert main(["color", str(bad)]) == 2
    assert main(["color", str(tmp_path / "missing.txt")]) == 2
    assert main(["generate", "regular", "--order", "9", "--degree", "4"]) == 2


def test_exit_code_3_on_sparse_graph(tmp_path, capsys):
    sparse = tmp_path / "c6.txt"
    sparse.write_text("p 6 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n")
    assert main(["color", str(sparse)]) == 3


def test_verify_rejects_foreign_coloring(tmp_path, capsys):
    graph = tmp_path / "k6.txt"
    graph.write_text(K6_TEXT)
    coloring = tmp_path / "bogus.col"
    coloring.write_text("c 0 7 0 1\nk 3\n")
    assert main(["verify", str(graph), str(coloring)]) == 2


def test_reports_byte_stable(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    assert (
        main(["generate", "two-light", "--order", "20", "--degree", "13", "--seed", "4", "--out", str(graph)])
        == 0
    )
    outs = []
    for i in range(3):
        path = tmp_path / f"run{i}.json"
        assert main(["color", str(graph), "--seed", "9", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_bench_on_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for i in range(3):
        assert (
            main(["generate", "regular", "--order", "20", "--degree", "13", "--seed", str(i), "--out", str(corpus / f"r{i}.txt")])
            == 0
        )
    code, out = run_cli(capsys, "bench", str(corpus))
    assert code == 0
    doc = json.loads(out)
    assert doc["aggregate"]["count"] == 3
    assert doc["aggregate"]["successes"] == 3
    assert doc["aggregate"]["class1"] == 3


def test_bench_empty_dir(tmp_path, capsys):
    corpus = tmp_path / "empty"
    corpus.mkdir()
    code, out = run_cli(capsys, "bench", str(corpus))
    assert code == 0
    doc = json.loads(out)
    assert doc["aggregate"]["count"] == 0
