import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from seqcm.cli import main
from seqcm.fileio import InputError, format_graph, format_weights, parse_graph, parse_weights
from seqcm.graphs import Graph, cycle_graph, suspension_of_cycle


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def c4(tmp_path):
    return write(tmp_path, "c4.txt", format_graph(cycle_graph(4)))


@pytest.fixture
def weighted_suspension(tmp_path):
    S = suspension_of_cycle(4)
    w = {(u, v): 2 if v < 4 else 1 for u, v in S.edges}
    return write(tmp_path, "s4.txt", format_graph(S)), write(tmp_path, "s4w.txt", format_weights(w))


def test_classify(c4, capsys):
    assert main(["classify", "--graph", c4]) == 0
    assert capsys.readouterr().out.strip() == "woodroofe: false; complete-union: false; induced-cycles: [4]"
    assert main(["classify", "--graph", c4, "--expect", "woodroofe"]) == 1
    capsys.readouterr()
    assert main(["classify", "--graph", c4, "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["woodroofe"] is False and d["induced_cycles"] == [4]


def test_check_scm_reports_witness(weighted_suspension, capsys):
    g, w = weighted_suspension
    assert main(["check", "scm", "--graph", g, "--weights", w]) == 1
    out = capsys.readouterr().out
    assert "witness monomial: x0*x1*x2*x3" in out
    assert "witness radical: x0*x1, x0*x3, x1*x2, x2*x3, x4, x5, x6, x7" in out
    assert main(["check", "scm", "--graph", g, "--weights", w, "--json"]) == 1
    d = json.loads(capsys.readouterr().out)
    assert d["verdict"] is False and d["witness"]["u"] == [1, 1, 1, 1, 0, 0, 0, 0]


def test_check_cm_unit_weights(tmp_path, capsys):
    g = write(tmp_path, "s3.txt", format_graph(suspension_of_cycle(3)))
    assert main(["check", "cm", "--graph", g, "--cross-field"]) == 0
    assert main(["check", "unmixed", "--graph", g, "--char", "2"]) == 0


def test_radicals_and_primes(c4, capsys):
    assert main(["radicals", "--graph", c4]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "1\t(x0*x1, x0*x3, x1*x2, x2*x3)"
    assert main(["ass-primes", "--graph", c4]) == 0
    assert capsys.readouterr().out.split() == ["(x0,", "x2)", "(x1,", "x3)"]


def test_verify_thm_scm_json(capsys):
    assert main(["verify", "thm-scm", "--nmax", "5", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["passed"] and d["instances_checked"] == 34


def test_verify_json_is_deterministic(capsys):
    runs = []
    for _ in range(2):
        assert main(["verify", "cor31", "--sample", "15", "--seed", "4", "--json"]) == 0
        d = json.loads(capsys.readouterr().out)
        d.pop("elapsed_ms")
        runs.append(d)
    assert runs[0] == runs[1] and runs[0]["seed"] == 4


@pytest.mark.parametrize("text", [
    "n 3\n0 5\n",
    "0 1\n",
    "n 3\n0 0\n",
    "n x\n",
    "n 3\n0 1 2\n",
])
def test_malformed_graph_exits_2(tmp_path, capsys, text):
    g = write(tmp_path, "bad.txt", text)
    assert main(["classify", "--graph", g]) == 2
    assert capsys.readouterr().err


def test_usage_errors_exit_2(c4, tmp_path, capsys):
    assert main(["check", "cm", "--graph", c4, "--char", "4"]) == 2
    assert main(["verify", "nope"]) == 2
    assert main(["verify", "terai", "--t", "5"]) == 2
    missing = write(tmp_path, "w.txt", "0 1 2\n")
    assert main(["check", "cm", "--graph", c4, "--weights", missing]) == 2
    assert main(["check", "cm", "--graph", str(tmp_path / "none.txt")]) == 2


def test_weights_parser():
    G = cycle_graph(3)
    assert parse_weights("# w\n0 1 2\n2 1 1\n0 2 3\n", G) == {(0, 1): 2, (1, 2): 1, (0, 2): 3}
    with pytest.raises(InputError, match=":2:"):
        parse_weights("0 1 2\n0 1 3\n1 2 1\n0 2 1\n", G)
    with pytest.raises(InputError):
        parse_weights("0 1 0\n1 2 1\n0 2 1\n", G)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_graph_round_trip(G):
    assert parse_graph(format_graph(G)) == G


def test_module_entry_point(c4):
    r = subprocess.run([sys.executable, "-m", "seqcm", "classify", "--graph", c4],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "induced-cycles: [4]" in r.stdout
