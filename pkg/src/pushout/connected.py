"""Connected induced subgraph enumeration by contraction into a root.

Every vertex merged into the root ``r`` so far forms the current set ``S``.
An iteration takes the first neighbour ``v`` of ``r`` and splits the sets
containing ``S`` into those with ``v`` (contract ``(r, v)``) and those without
(delete ``v``).  When ``r`` has no neighbour left, ``S`` is emitted.

After a contraction the root is simplified back to one edge per neighbour.
Keeping the parallel copies would leave the answer unchanged but lets the
root's degree grow with ``|S|``, and the per-solution cost with it.
"""

from __future__ import annotations

from ._recursion import recursion_room
from .graph import ContractViolation, MultiGraph
from .profiler import Tracer
from .solution_io import CountingSink, SolutionSink

__all__ = ["enum_connected_from_root", "enum_all_connected"]


def _run_from_root(g: MultiGraph, r: int, sink: SolutionSink, tracer: Tracer | None) -> None:
    chosen = [r]

    def rec(root: int) -> None:
        if tracer is not None:
            tracer.enter(g.ops)
        hit = g.first_incident(root)
        if hit is None:
            sink.emit(chosen)
            if tracer is not None:
                tracer.solution()
                tracer.exit(g.ops)
            return
        e, v = hit
        # non-root vertices are never merged, so v is an input vertex id
        g.begin()
        survivor = g.contract_edge(e)
        g.simplify_at(survivor)
        chosen.append(v)
        rec(survivor)
        chosen.pop()
        g.undo()
        g.begin()
        g.remove_vertex(v)
        rec(root)
        g.undo()
        if tracer is not None:
            tracer.exit(g.ops)

    with recursion_room(2 * g.capacity[0] + 50):
        rec(r)


def enum_connected_from_root(
    g: MultiGraph, r: int, sink: SolutionSink | None = None, tracer: Tracer | None = None
) -> int:
    """Emit every vertex set containing ``r`` that induces a connected subgraph.

    Sets are emitted as lists of vertex ids with ``r`` first.  Returns the count.
    """
    if not g.has_vertex(r):
        raise ContractViolation(f"root {r} is not a vertex of the graph")
    if sink is None:
        sink = CountingSink()
    start = sink.count
    _run_from_root(g, r, sink, tracer)
    return sink.count - start


def enum_all_connected(g: MultiGraph, sink: SolutionSink | None = None, tracer: Tracer | None = None) -> int:
    """Emit every non-empty vertex set inducing a connected subgraph, once each.

    Vertices are taken in ascending id order; the sets whose smallest vertex
    is ``v_i`` are those containing ``v_i`` in the graph with ``v_1..v_{i-1}``
    deleted.  With a tracer, one extra root iteration stands for this outer
    loop and each rooted run hangs below it.
    """
    if sink is None:
        sink = CountingSink()
    start = sink.count
    if tracer is not None:
        tracer.enter(g.ops)
    g.begin()
    try:
        for v in sorted(g.vertices()):
            _run_from_root(g, v, sink, tracer)
            g.remove_vertex(v)
    finally:
        g.undo()
    if tracer is not None:
        tracer.exit(g.ops)
    return sink.count - start
