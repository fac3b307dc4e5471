import io

import pytest

from pushout.cli import main
from pushout.graph import parse_graph
from pushout.solution_io import decode, parse_stream

P3 = "3 2\n0 1\n1 2\n"
K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


def run(argv, stdin_text=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    rc = main(argv, stdout=out, stderr=err)
    return rc, out.getvalue(), err.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def make(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def test_count_matchings_on_path(graph_file):
    assert run(["matchings", "-i", graph_file(P3)]) == (0, "3\n", "")


def test_count_spanning_trees_on_k4(graph_file):
    rc, out, _ = run(["spanning-trees", "-i", graph_file(K4)])
    assert rc == 0 and out.strip() == "16"


def test_reads_stdin(monkeypatch):
    rc, out, _ = run(["connected", "--root", "0", "-i", "-"], P3, monkeypatch)
    assert rc == 0 and out.strip() == "3"


def test_generated_cycle_spanning_trees():
    rc, out, _ = run(["spanning-trees", "--gen", "cycle", "5"])
    assert rc == 0 and out.strip() == "5"


@pytest.mark.parametrize("argv", [
    ["matchings", "--gen", "connected-gnp", "7", "0.5"],
    ["connected", "--gen", "gnp", "6", "0.5"],
    ["elim", "--structure", "leaf", "--gen", "tree", "6"],
])
def test_delta_stream_decodes_to_the_counted_solutions(argv):
    _, count, _ = run(argv + ["--seed", "4"])
    rc, delta, _ = run(argv + ["--seed", "4", "--delta"])
    _, full, _ = run(argv + ["--seed", "4", "--full"])
    assert rc == 0
    sols = decode(parse_stream(delta))
    assert len(sols) == int(count)
    assert len(full.splitlines()) == int(count)
    assert len(set(sols)) == len(sols)


def test_gen_is_deterministic_per_seed():
    a = run(["gen", "chordal", "9", "2", "--seed", "11"])[1]
    b = run(["gen", "chordal", "9", "2", "--seed", "11"])[1]
    c = run(["gen", "chordal", "9", "2", "--seed", "12"])[1]
    assert a == b and a != c


def test_gen_tree_is_a_tree():
    rc, out, _ = run(["gen", "tree", "8", "--seed", "3"])
    g = parse_graph(out)
    assert rc == 0 and g.n_vertices() == 8 and g.n_edges() == 7 and g.is_connected()


def test_out_file_receives_the_output(tmp_path, graph_file):
    target = tmp_path / "res.txt"
    rc, out, _ = run(["matchings", "-i", graph_file(P3), "--out", str(target)])
    assert rc == 0 and out == "" and target.read_text() == "3\n"


def test_profile_beta_search_and_failing_beta(tmp_path, graph_file):
    trace = tmp_path / "t.jsonl"
    assert run(["matchings", "-i", graph_file(P3), "--trace", str(trace)])[0] == 0
    rc, out, _ = run(["profile", "--trace", str(trace), "--alpha", "1.25", "--beta-search"])
    beta = float(out.strip())
    assert rc == 0 and beta > 0
    assert run(["profile", "--trace", str(trace), "--alpha", "1.25", "--beta", str(beta)])[0] == 0
    rc, out, _ = run(["profile", "--trace", str(trace), "--alpha", "1.25", "--beta", "0"])
    assert rc == 1 and "FAIL" in out


def test_profile_writes_report(tmp_path, graph_file):
    trace, report = tmp_path / "t.jsonl", tmp_path / "r.csv"
    run(["spanning-trees", "-i", graph_file(K4), "--trace", str(trace)])
    rc, _, _ = run(["profile", "--trace", str(trace), "--alpha", "1.5", "--beta", "100", "--report", str(report)])
    lines = report.read_text().splitlines()
    assert rc == 0 and len(lines) > 1


@pytest.mark.parametrize("text, where", [
    ("2 1\n0 5\n", "line 2"),
    ("2 1\n0  x\n", "column 4"),
    ("", "line 1"),
])
def test_malformed_graph_exits_2_with_position(graph_file, text, where):
    rc, out, err = run(["matchings", "-i", graph_file(text)])
    assert rc == 2 and out == "" and where in err


@pytest.mark.parametrize("argv", [
    ["elim", "--structure", "simplicial", "--gen", "cycle", "4"],
    ["spanning-trees", "--gen", "gnp", "6", "0"],
    ["connected", "--root", "9", "--gen", "path", "3"],
    ["matchings", "-i", "/nonexistent/graph.txt"],
    ["matchings", "--gen", "nosuchfamily", "3"],
    ["profile", "--trace", "/nonexistent", "--alpha", "0.5"],
])
def test_input_errors_exit_2(argv):
    rc, _, err = run(argv)
    assert rc == 2 and err.startswith("error:")


def test_oracle_check_passes():
    for target in ("matchings", "connected", "spanning-trees", "elim"):
        rc, out, _ = run(["oracle-check", target, "--cases", "15", "--max-n", "5", "--seed", "2"])
        assert rc == 0 and out.startswith("ok")
