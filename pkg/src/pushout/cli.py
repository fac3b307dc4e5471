"""Command-line front end.

Enumerators read a graph (``-i FILE``, ``-i -`` for stdin, or ``--gen SPEC``)
and print a count, the delta stream, or every solution in full.  ``profile``
checks a saved trace against the PO condition, ``oracle-check`` compares an
enumerator with brute force on random instances, ``gen`` prints a graph.

Exit codes: 0 ok, 1 failed check, 2 bad input.
"""

from __future__ import annotations

import argparse
import io
import random
import sys
from contextlib import contextmanager
from typing import Callable, Iterator

from .connected import enum_all_connected, enum_connected_from_root
from .elim import StructureError, enum_elim_orderings, leaf_structure, noncut_structure, simplicial_structure
from .generators import GeneratorSpecError, chordal, connected_gnp, generate, random_tree
from .graph import ContractViolation, GraphFormatError, MultiGraph, format_graph, parse_graph
from .matching import enum_matchings
from .oracles import (
    OracleSizeError,
    brute_connected,
    brute_elim_orderings,
    brute_matchings,
    brute_spanning_trees,
    canonical_sequences,
    canonical_sets,
)
from .profiler import POParams, RecursionTrace, TraceError, Tracer, check_po, minimal_beta, search_feasible_params, simulate_push_out
from .solution_io import CollectingSink, CountingSink, DeltaSink
from .sptree import DisconnectedGraphError, enum_spanning_trees

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2

STRUCTURES = {"simplicial": simplicial_structure, "noncut": noncut_structure, "leaf": leaf_structure}


class InputError(Exception):
    pass


# ----------------------------------------------------------------------
# running one enumerator
# ----------------------------------------------------------------------


def _runner(args) -> tuple[Callable, bool]:
    """(fn(graph, sink, tracer), solutions-are-sequences) for an enumerator subcommand."""
    cmd = args.command
    if cmd == "matchings":
        return (lambda g, s, t: enum_matchings(g, s, t)), False
    if cmd == "spanning-trees":
        return (lambda g, s, t: enum_spanning_trees(g, s, t)), False
    if cmd == "connected":
        if args.root is not None:
            return (lambda g, s, t: enum_connected_from_root(g, args.root, s, t)), False
        return (lambda g, s, t: enum_all_connected(g, s, t)), False
    if cmd == "elim":
        make = STRUCTURES[args.structure]
        return (lambda g, s, t: enum_elim_orderings(make(g), s, t)), True
    raise AssertionError(cmd)


def _load_graph(args) -> MultiGraph:
    if args.gen:
        return generate(args.gen, args.seed)
    if args.input is None:
        raise InputError("no input graph: use -i FILE, -i - or --gen SPEC")
    name = "<stdin>" if args.input == "-" else args.input
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        raise InputError(f"{name}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise InputError(f"{name}: {exc}") from None


def cmd_enumerate(args, out) -> int:
    g = _load_graph(args)
    fn, sequence = _runner(args)
    if args.command == "connected" and args.root is not None and not g.has_vertex(args.root):
        raise InputError(f"root {args.root} is not a vertex")
    tracer = Tracer() if args.trace else None
    if args.mode == "delta":
        sink = DeltaSink(sequence=sequence, stream=out, keep_records=False)
    elif args.mode == "full":
        sink = _FullSink(out)
    else:
        sink = CountingSink()
    fn(g, sink, tracer)
    if args.mode == "count":
        out.write(f"{sink.count}\n")
    if tracer is not None:
        tracer.trace().save(args.trace)
    return EXIT_OK


class _FullSink:
    def __init__(self, out):
        self.out = out
        self.count = 0

    def emit(self, solution) -> None:
        self.out.write(" ".join(map(str, solution)) + "\n")
        self.count += 1


# ----------------------------------------------------------------------
# profile
# ----------------------------------------------------------------------


def _grid(text: str) -> list[float]:
    """``a,b,c`` or ``lo:hi:step``."""
    try:
        if ":" in text:
            lo, hi, step = (float(x) for x in text.split(":"))
            if step <= 0:
                raise ValueError
            k = int(round((hi - lo) / step))
            return [round(lo + i * step, 12) for i in range(k + 1)]
        return [float(x) for x in text.split(",") if x]
    except ValueError:
        raise InputError(f"bad grid {text!r}: use a,b,c or lo:hi:step") from None


def cmd_profile(args, out) -> int:
    if not args.trace:
        raise InputError("profile needs --trace FILE")
    try:
        trace = RecursionTrace.load(args.trace)
    except OSError as exc:
        raise InputError(f"{args.trace}: {exc.strerror}") from None
    except (TraceError, ValueError, KeyError) as exc:
        raise InputError(f"{args.trace}: bad trace: {exc}") from None

    if args.beta_search:
        if args.betas:
            alphas = _grid(args.alphas) if args.alphas else [args.alpha]
            feasible = search_feasible_params(trace, alphas, _grid(args.betas))
            if not feasible:
                out.write("infeasible\n")
            for p in sorted(feasible, key=lambda p: (p.alpha, p.beta)):
                out.write(f"alpha={p.alpha:g} beta={p.beta:g}\n")
            return EXIT_OK
        b = minimal_beta(trace, args.alpha)
        out.write("infeasible\n" if b == float("inf") else f"{b:.12g}\n")
        return EXIT_OK

    if args.beta is None:
        raise InputError("profile needs --beta B or --beta-search")
    params = POParams(args.alpha, args.beta)
    report = simulate_push_out(trace, params) if check_po(trace, params).all_pass else check_po(trace, params)
    out.write(report.summary() + "\n")
    if args.report:
        with open(args.report, "w", newline="") as fh:
            report.to_csv(fh)
    ok = report.all_pass and (report.claim_holds is not False)
    return EXIT_OK if ok else EXIT_CHECK


# ----------------------------------------------------------------------
# oracle-check
# ----------------------------------------------------------------------


def _random_instance(kind: str, rng: random.Random, max_n: int) -> MultiGraph:
    n = rng.randint(1, max_n)
    seed = rng.randrange(2**31)
    if kind == "elim-simplicial":
        return chordal(n, rng.randint(1, 3), seed=seed)
    if kind == "elim-leaf":
        return random_tree(n, seed=seed)
    return connected_gnp(n, rng.uniform(0.1, 0.8), seed=seed)


def _compare(kind: str, g: MultiGraph) -> bool:
    if kind == "matchings":
        got = CollectingSink()
        enum_matchings(g, got)
        return canonical_sets(got.solutions) == brute_matchings(g).solutions
    if kind == "spanning-trees":
        got = CollectingSink()
        enum_spanning_trees(g, got)
        return canonical_sets(got.solutions) == brute_spanning_trees(g).solutions
    if kind == "connected":
        got = CollectingSink()
        enum_all_connected(g, got)
        if canonical_sets(got.solutions) != brute_connected(g).solutions:
            return False
        for r in g.vertices():
            got = CollectingSink()
            enum_connected_from_root(g, r, got)
            if canonical_sets(got.solutions) != brute_connected(g, r).solutions:
                return False
        return True
    structure = kind.split("-", 1)[1]
    got = CollectingSink()
    enum_elim_orderings(STRUCTURES[structure](g), got)
    return canonical_sequences(got.solutions) == brute_elim_orderings(g, structure).solutions


def cmd_oracle_check(args, out) -> int:
    kind = args.target if args.target != "elim" else f"elim-{args.structure}"
    if args.input or args.gen:
        graphs: Iterator[MultiGraph] = iter([_load_graph(args)])
        total = 1
    else:
        rng = random.Random(args.seed)
        total = args.cases
        graphs = (_random_instance(kind, rng, args.max_n) for _ in range(total))
    for i, g in enumerate(graphs):
        try:
            ok = _compare(kind, g)
        except OracleSizeError as exc:
            raise InputError(str(exc)) from None
        if not ok:
            out.write(f"counterexample (case {i}):\n")
            out.write(format_graph(g))
            return EXIT_CHECK
    out.write(f"ok: {total} case(s) agree\n")
    return EXIT_OK


# ----------------------------------------------------------------------
# gen
# ----------------------------------------------------------------------


def cmd_gen(args, out) -> int:
    out.write(format_graph(generate(args.spec, args.seed)))
    return EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, modes: bool = True) -> None:
    p.add_argument("-i", "--input", metavar="FILE", help="graph file, or - for stdin")
    p.add_argument("--gen", nargs="+", metavar="SPEC", help="generate the input instead, e.g. --gen chordal 6 2")
    p.add_argument("--seed", type=int, default=0, help="seed for --gen and random cases (default 0)")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    if modes:
        m = p.add_mutually_exclusive_group()
        m.add_argument("--count", dest="mode", action="store_const", const="count", help="print the number of solutions (default)")
        m.add_argument("--delta", dest="mode", action="store_const", const="delta", help="print the difference-encoded stream")
        m.add_argument("--full", dest="mode", action="store_const", const="full", help="print every solution in full")
        p.set_defaults(mode="count")
        p.add_argument("--trace", metavar="FILE", help="save the recursion trace as JSON lines")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pushout", description="Enumerate graph objects and profile recursion traces.")
    sub = ap.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("matchings", help="all matchings"))
    _common(sub.add_parser("spanning-trees", help="all spanning trees of a connected multigraph"))
    p = sub.add_parser("connected", help="vertex sets inducing connected subgraphs")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--root", type=int, help="only sets containing this vertex")
    g.add_argument("--all", action="store_true", help="every set (default)")
    p = sub.add_parser("elim", help="elimination orderings")
    _common(p)
    p.add_argument("--structure", choices=sorted(STRUCTURES), required=True)

    p = sub.add_parser("profile", help="check a saved trace against the PO condition")
    p.add_argument("--trace", metavar="FILE", required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float)
    p.add_argument("--beta-search", action="store_true", help="print the minimal feasible beta, or feasible grid points")
    p.add_argument("--alphas", metavar="GRID", help="alpha grid for --beta-search (a,b,c or lo:hi:step)")
    p.add_argument("--betas", metavar="GRID", help="beta grid for --beta-search")
    p.add_argument("--report", metavar="CSV", help="write per-node results")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("oracle-check", help="compare an enumerator against brute force")
    p.add_argument("target", choices=["matchings", "connected", "spanning-trees", "elim"])
    p.add_argument("--structure", choices=sorted(STRUCTURES), default="simplicial")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-n", type=int, default=7)
    _common(p, modes=False)

    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("spec", nargs="+", help="gnp n p | connected-gnp n p | chordal n k | tree n | cycle n | path n | "
                   "star n | complete n | multi n m | hubs n h | cycle-chords n c")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    return ap


COMMANDS = {
    "matchings": cmd_enumerate,
    "spanning-trees": cmd_enumerate,
    "connected": cmd_enumerate,
    "elim": cmd_enumerate,
    "profile": cmd_profile,
    "oracle-check": cmd_oracle_check,
    "gen": cmd_gen,
}


@contextmanager
def _output(path: str | None, stdout) -> Iterator:
    if path is None:
        yield stdout
        return
    buf = io.StringIO()
    yield buf
    # only touch the file once the command has finished
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "alpha", None) is not None and args.alpha <= 1:
            raise InputError("--alpha must be greater than 1")
        if getattr(args, "beta", None) is not None and args.beta < 0:
            raise InputError("--beta must be non-negative")
        with _output(args.out, stdout) as out:
            return COMMANDS[args.command](args, out)
    except (InputError, GeneratorSpecError, StructureError, DisconnectedGraphError, ContractViolation) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
