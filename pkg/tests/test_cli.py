import json

import pytest

from bek.betti import BettiTable, betti_lollipop
from bek.cli import ORACLE_CAVEAT, main
from bek.graph import make_complete, make_complete_bipartite, make_cycle, make_k_handle_lollipop, make_path
from bek.io import parse_edgelist, render_edgelist, render_json


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt", text=None):
        p = tmp_path / name
        p.write_text(text if text is not None else render_edgelist(g))
        return str(p)
    return write


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_classify(capsys, graph_file):
    rc, out, _ = run(capsys, "classify", graph_file(make_cycle(5)))
    data = json.loads(out)
    assert rc == 0
    assert data["closed"] is False and data["linear"] is False
    assert data["pure"]["verdict"] == "NotPure" and data["pure"]["hint"] == "induced C_m, m>=5"
    assert sorted(data["pure"]["witness"]) == [1, 2, 3, 4, 5]
    rc, out, _ = run(capsys, "classify", graph_file(make_complete(4)))
    assert json.loads(out) == {"closed": True, "linear": True, "pure": {"verdict": "Complete", "hint": None}}


def test_classify_isolated_vertex(capsys, graph_file):
    rc, out, _ = run(capsys, "classify", graph_file(None, text="3\n1 2\n"))
    data = json.loads(out)
    assert rc == 0 and data["pure"] is None and data["linear"] is None and "isolated" in data["note"]


def test_betti_formula_and_oracle_agree(capsys, graph_file):
    f = graph_file(make_k_handle_lollipop(3, [2]))
    rc, out, _ = run(capsys, "betti", f)
    assert rc == 0
    lines = out.splitlines()
    assert "pd: 4" in lines and "reg: 3" in lines
    formula = BettiTable.from_json(lines[-1])
    assert formula == betti_lollipop(3, [2])
    rc, out, _ = run(capsys, "betti", f, "--method", "oracle")
    assert rc == 0
    assert out.splitlines()[0] == ORACLE_CAVEAT
    assert BettiTable.from_json(out.splitlines()[-1]) == formula


def test_betti_errors(capsys, graph_file):
    rc, _, err = run(capsys, "betti", graph_file(make_cycle(4)))
    assert rc == 2 and "no closed-form" in err
    rc, _, err = run(capsys, "betti", graph_file(make_complete_bipartite(1, 3)), "--method", "oracle")
    assert rc == 2 and "closed" in err


def test_strand(capsys, graph_file):
    rc, out, _ = run(capsys, "strand", graph_file(make_complete(4)))
    data = json.loads(out)
    assert rc == 0 and data["status"] == "TheoremBacked"
    assert data["prediction"]["1"] == 8 and data["closed_check_ok"] is True
    rc, out, _ = run(capsys, "strand", graph_file(make_cycle(5)))
    data = json.loads(out)
    assert rc == 0 and "closed_check" not in data


def test_switch(capsys, graph_file):
    f = graph_file(make_k_handle_lollipop(3, [3]))
    rc, out, _ = run(capsys, "switch", f, "--remove", "4,5", "--add", "2,5")
    assert rc == 0
    g = parse_edgelist(out)
    assert (2, 5) in g.edges and (4, 5) not in g.edges
    rc, _, err = run(capsys, "switch", f, "--remove", "1,2", "--add", "2,5")
    assert rc == 2 and err.startswith("error:")


def test_switch_bad_pair_is_a_usage_error(capsys, graph_file):
    with pytest.raises(SystemExit) as exc:
        main(["switch", graph_file(make_path(3)), "--remove", "1-2", "--add", "2,3"])
    assert exc.value.code == 2


def test_reduce(capsys, graph_file):
    rc, out, _ = run(capsys, "reduce", graph_file(make_k_handle_lollipop(3, [2])))
    lines = out.splitlines()
    assert rc == 0 and lines[0] == "free cut edges: 1-4 4-5"
    assert parse_edgelist("\n".join(lines[1:])).edges == make_k_handle_lollipop(3, [2]).edges - {(1, 4), (4, 5)}
    rc, out, _ = run(capsys, "reduce", graph_file(make_cycle(4)))
    assert out.splitlines()[0] == "free cut edges: none"


def test_input_formats(capsys, graph_file):
    rc, out, _ = run(capsys, "classify", graph_file(None, "k4.g6", "C~\n"))
    assert json.loads(out)["pure"]["verdict"] == "Complete"
    rc, out, _ = run(capsys, "classify", graph_file(None, "p.json", render_json(make_path(4))))
    assert json.loads(out)["pure"]["verdict"] == "DisjointPaths"
    rc, out, _ = run(capsys, "classify", graph_file(None, "k4.dat", "C~\n"), "--format", "graph6")
    assert rc == 0


def test_bad_input_exit_code(capsys, graph_file, tmp_path):
    rc, _, err = run(capsys, "classify", graph_file(None, text="3\n1 9\n"))
    assert rc == 2 and "out of range" in err
    rc, _, err = run(capsys, "classify", str(tmp_path / "missing.txt"))
    assert rc == 2


def test_verify_suites(capsys):
    rc, out, _ = run(capsys, "verify", "closed-strand", "--max-n", "5")
    assert rc == 0 and out.strip().endswith("0 mismatches")
    rc, out, _ = run(capsys, "verify", "lollipop", "--max-m", "3", "--max-t", "2")
    assert rc == 0 and "4 cases, 0 failures" in out
    rc, _, err = run(capsys, "verify", "closed-strand", "--max-n", "9")
    assert rc == 2


@pytest.mark.slow
def test_verify_closed_strand_default(capsys):
    rc, out, _ = run(capsys, "verify", "closed-strand", "--max-n", "6")
    assert rc == 0 and "0 mismatches" in out
