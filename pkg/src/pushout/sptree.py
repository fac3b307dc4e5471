"""Spanning tree enumeration by parallel/series class branching.

The working graph is kept connected and bridgeless.  Bridges of the input are
contracted and committed to the tree up front (a bridge lies in every
spanning tree).  Of the branch graphs below only G minus a parallel class can
gain bridges, and the iteration that builds it contracts them before the
call, so every leaf has an empty edge set.  For the lowest-id edge ``e1``
with class ``F = {e1, ..., ek}``:

parallel class (k >= 2)
    A tree uses at most one edge of F.  Contracting ``e1`` turns the rest of
    F into loops, and that single graph serves all k branches "tree contains
    e_i".  One more branch, G minus F, covers trees using no edge of F when
    it is connected.

series class (k >= 2)
    A tree misses at most one edge of F.  Removing F splits the graph into k
    pieces joined in a ring by F; the trees missing ``e_i`` are F - {e_i} plus
    a spanning tree of every piece, for any i.  So one graph H = (G/(F - e1))
    minus e1 serves all k branches.  The trees containing all of F are those
    of G/F, unless F is a cycle of the graph.

otherwise
    Binary split on ``e1``: contract it (in the tree) or delete it (not in the
    tree; G minus e1 stays bridgeless because e1 has no series partner).
"""

from __future__ import annotations

from ._recursion import recursion_room
from .graph import MultiGraph
from .profiler import Tracer
from .solution_io import CountingSink, SolutionSink

__all__ = ["DisconnectedGraphError", "enum_spanning_trees", "preprocess_bridges", "branch_kind"]


class DisconnectedGraphError(ValueError):
    pass


def preprocess_bridges(g: MultiGraph, tree: list[int]) -> int:
    """Contract every bridge of ``g`` and append it to ``tree``.

    Mutations go to the current undo frame.  Returns the number of bridges.
    """
    found = sorted(g.bridges())
    for b in found:
        g.contract_edge(b)
        tree.append(b)
    return len(found)


def branch_kind(g: MultiGraph, e1: int) -> tuple[str, list[int]]:
    """Classify ``e1`` as ``"parallel"``, ``"series"`` or ``"single"`` with its class."""
    par = g.parallel_class(e1)
    if len(par) >= 2:
        return "parallel", par
    ser = g.series_class(e1)
    if len(ser) >= 2:
        return "series", ser
    return "single", [e1]


def enum_spanning_trees(g: MultiGraph, sink: SolutionSink | None = None, tracer: Tracer | None = None) -> int:
    """Emit every spanning tree of a connected multigraph as a list of edge ids."""
    if g.n_vertices() == 0:
        raise DisconnectedGraphError("graph has no vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("graph is not connected")
    if sink is None:
        sink = CountingSink()
    start = sink.count
    tree: list[int] = []

    def emit() -> None:
        sink.emit(tree)
        if tracer is not None:
            tracer.solution()

    def rec() -> None:
        if tracer is not None:
            tracer.enter(g.ops)
        e1 = g.first_edge()
        if e1 is None:
            emit()
        else:
            kind, cls = branch_kind(g, e1)
            if kind == "parallel":
                _branch_parallel(g, cls, tree, rec)
            elif kind == "series":
                _branch_series(g, cls, tree, rec)
            else:
                g.begin()
                g.contract_edge(e1)
                tree.append(e1)
                rec()
                tree.pop()
                g.undo()
                g.begin()
                g.remove_edge(e1)
                rec()
                g.undo()
        if tracer is not None:
            tracer.exit(g.ops)

    with recursion_room(4 * g.n_edges() + 50):
        g.begin()
        try:
            preprocess_bridges(g, tree)
            rec()
        finally:
            g.undo()
    return sink.count - start


def _branch_parallel(g: MultiGraph, cls: list[int], tree: list[int], rec) -> None:
    e1 = cls[0]
    g.begin()
    g.contract_edge(e1)  # every other edge of the class becomes a loop and is dropped
    for e in cls:
        tree.append(e)
        rec()
        tree.pop()
    g.undo()
    g.begin()
    for e in cls:
        g.remove_edge(e)
    if g.is_connected():
        mark = len(tree)
        preprocess_bridges(g, tree)
        rec()
        del tree[mark:]
    g.undo()


def _branch_series(g: MultiGraph, cls: list[int], tree: list[int], rec) -> None:
    e1, rest = cls[0], cls[1:]
    g.begin()
    for e in rest:
        g.contract_edge(e)
    # after contracting the others, e1 survives unless F closes a cycle
    is_cycle = not g.has_edge(e1)
    if is_cycle:
        _series_ring(g, cls, tree, rec)
    else:
        g.begin()
        g.remove_edge(e1)
        _series_ring(g, cls, tree, rec)
        g.undo()
        g.begin()
        g.contract_edge(e1)
        tree.extend(cls)
        rec()
        del tree[-len(cls):]
        g.undo()
    g.undo()


def _series_ring(g: MultiGraph, cls: list[int], tree: list[int], rec) -> None:
    # g is H; branch i commits every class edge except e_i.  Moving from
    # branch i to i + 1 swaps a single slot: e_{i+1} out, e_i in.
    base = len(tree)
    tree.extend(cls[1:])
    for i in range(len(cls)):
        if i:
            tree[base + i - 1] = cls[i - 1]
        rec()
    del tree[base:]
