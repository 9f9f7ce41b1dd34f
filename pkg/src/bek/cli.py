"""Command-line front end: ``bek <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .betti import NoClosedFormError, formula_table, strand_prediction
from .classifier import IsolatedVertexError, classify_pure, has_linear_resolution, obstruction_scan
from .closedness import NotClosedError, find_closed_labeling, in_graph, is_closed
from .graph import (
    GraphError,
    SwitchError,
    clique_census,
    free_cut_edges,
    reduced_graph,
    switch_free_cut_edge,
)
from .homology import closed_strand_check, hochster_betti
from .io import FORMATS, ParseError, read_graph_file, render_edgelist, render_json
from .verify import MAX_STRAND_N, verify_closed_strand, verify_lollipop

ORACLE_CAVEAT = (
    "note: this is the Betti table of the initial ideal of J_G; it equals the table of J_G "
    "when S/J_G is Cohen-Macaulay (e.g. paths and lollipops), and bounds it from above otherwise"
)


def _pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}") from None
    return u, v


def _load(args):
    return read_graph_file(args.file, args.format).graph


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_classify(args) -> int:
    g = _load(args)
    out: dict = {"closed": is_closed(g)}
    try:
        out["linear"] = has_linear_resolution(g)
        pc = classify_pure(g)
        out["pure"] = {"verdict": pc.verdict.value, "hint": pc.hint}
        if not pc.pure:
            ob = obstruction_scan(g)
            if ob is not None:
                out["pure"]["witness"] = list(ob.vertices)
    except IsolatedVertexError as exc:
        out["linear"] = None
        out["pure"] = None
        out["note"] = str(exc)
    _emit(out)
    return 0


def cmd_betti(args) -> int:
    g = _load(args)
    if args.method == "formula":
        try:
            table = formula_table(g)
        except NoClosedFormError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        labeling = find_closed_labeling(g)
        if labeling is None:
            print("error: the oracle method needs a closed graph", file=sys.stderr)
            return 2
        table = hochster_betti(in_graph(g, labeling).as_graph())
        print(ORACLE_CAVEAT)
    print(table.diagram())
    print(f"pd: {table.pd}")
    print(f"reg: {table.reg}")
    print(table.to_json())
    return 0


def cmd_strand(args) -> int:
    g = _load(args)
    pred = strand_prediction(g)
    out: dict = {
        "status": pred.status.value,
        "prediction": {str(i): v for i, v in sorted(pred.values.items())},
    }
    rc = 0
    if is_closed(g):
        report = closed_strand_check(g)
        out["closed_check"] = [
            {"i": r.i, "roth_van_tuyl": r.roth_van_tuyl, "hochster": r.hochster, "clique_formula": r.clique_formula}
            for r in report.rows
        ]
        out["closed_check_ok"] = report.ok
        rc = 0 if report.ok else 1
    _emit(out)
    return rc


def cmd_switch(args) -> int:
    g = _load(args)
    try:
        h = switch_free_cut_edge(g, args.remove, args.add)
    except SwitchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    before, after = clique_census(g), clique_census(h)
    if before.counts != after.counts:
        print("error: clique census changed under switching", file=sys.stderr)
        return 1
    sys.stdout.write(render_edgelist(h))
    return 0


def cmd_reduce(args) -> int:
    g = _load(args)
    fce = sorted(free_cut_edges(g))
    print("free cut edges: " + (" ".join(f"{u}-{v}" for u, v in fce) or "none"))
    sys.stdout.write(render_edgelist(reduced_graph(g)))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "closed-strand":
        if args.max_n > MAX_STRAND_N:
            print(f"error: --max-n is limited to {MAX_STRAND_N}", file=sys.stderr)
            return 2
        res = verify_closed_strand(args.max_n, connected_only=args.connected_only)
        for rep in res.failures:
            print(f"MISMATCH {render_json(rep.graph, labeling=rep.labeling)}")
            for r in rep.rows:
                if not r.agrees:
                    print(f"  i={r.i}: rvt={r.roth_van_tuyl} hochster={r.hochster} formula={r.clique_formula}")
        print(f"closed-strand: {res.checked} closed graphs checked, {len(res.failures)} mismatches")
        return 0 if res.ok else 1
    cases = verify_lollipop(args.max_m, args.max_t)
    bad = 0
    for c in cases:
        status = "ok" if c.ok else "FAIL"
        bad += not c.ok
        print(f"L_{{{c.m},{c.t}}}: pd={c.formula.pd}/{c.oracle.pd} reg={c.formula.reg}/{c.oracle.reg} {status}")
        for comp in c.composition_mismatches:
            print(f"  composition {list(comp)} disagrees")
    print(f"lollipop: {len(cases)} cases, {bad} failures")
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bek", description="Homological invariants of binomial edge ideals from graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        sp.add_argument("--format", choices=FORMATS, default=None,
                        help="input format (default: from the extension, else edge list)")
        return sp

    with_file("classify", "closedness, linearity and purity verdicts").set_defaults(func=cmd_classify)
    sp = with_file("betti", "graded Betti table of S/J_G")
    sp.add_argument("--method", choices=("formula", "oracle"), default="formula")
    sp.set_defaults(func=cmd_betti)
    with_file("strand", "linear strand prediction and closed-graph check").set_defaults(func=cmd_strand)
    sp = with_file("switch", "free cut edge switching")
    sp.add_argument("--remove", type=_pair, required=True, metavar="U,V")
    sp.add_argument("--add", type=_pair, required=True, metavar="X,Y")
    sp.set_defaults(func=cmd_switch)
    with_file("reduce", "free cut edges and the reduced graph").set_defaults(func=cmd_reduce)

    sp = sub.add_parser("verify", help="run a verification suite")
    vs = sp.add_subparsers(dest="suite", required=True)
    cs = vs.add_parser("closed-strand", help="strand identity on all closed graphs up to N vertices")
    cs.add_argument("--max-n", type=int, default=6)
    cs.add_argument("--connected-only", action="store_true")
    lp = vs.add_parser("lollipop", help="lollipop formula against the oracle")
    lp.add_argument("--max-m", type=int, default=4)
    lp.add_argument("--max-t", type=int, default=3)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NotClosedError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
