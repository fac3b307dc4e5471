"""Matching enumeration by pivoting on a maximum-degree vertex.

Each iteration picks a vertex ``v`` of maximum degree and partitions the
matchings of the current graph into those using no edge at ``v`` (recurse on
G minus v) and, for each edge ``e_i = (v, u_i)``, those containing ``e_i``
(recurse on G+(e_i)).  The G+(e_i) graphs are visited one after another by
restoring the edges at ``u_{i-1}`` and removing those at ``u_i``, so the whole
walk costs O(|E|).
"""

from __future__ import annotations

from typing import Iterator

from ._recursion import recursion_room
from .graph import MultiGraph
from .profiler import Tracer
from .solution_io import CountingSink, SolutionSink

__all__ = ["enum_matchings", "enum_matchings_naive", "incremental_gplus_walk", "branch_states"]


def branch_states(g: MultiGraph, v: int) -> Iterator[int | None]:
    """Drive ``g`` through the branch graphs of pivot ``v``.

    Yields ``None`` with ``g`` equal to G minus v (``v`` left isolated), then
    each edge ``e_i`` at ``v`` in adjacency order with ``g`` equal to
    G+(e_i).  ``g`` is restored when the generator finishes or is closed.
    """
    edges = g.incident(v)
    g.begin()
    try:
        g.isolate(v)
        yield None
        for e, u in edges:
            g.begin()
            try:
                g.isolate(u)
                yield e
            finally:
                g.undo()
    finally:
        g.undo()


def incremental_gplus_walk(g: MultiGraph, v: int) -> Iterator[int]:
    """The G+(e_i) states only, for each edge ``e_i`` at ``v``."""
    for e in branch_states(g, v):
        if e is not None:
            yield e


def enum_matchings(g: MultiGraph, sink: SolutionSink | None = None, tracer: Tracer | None = None) -> int:
    """Emit every matching of ``g`` (the empty one included) exactly once.

    Solutions are lists of edge ids.  Isolated vertices are dropped before
    the recursion starts and restored afterwards.  Returns the number of
    matchings.
    """
    if sink is None:
        sink = CountingSink()
    start = sink.count
    matching: list[int] = []

    def rec() -> None:
        if tracer is not None:
            tracer.enter(g.ops)
        if g.n_edges() == 0:
            sink.emit(matching)
            if tracer is not None:
                tracer.solution()
                tracer.exit(g.ops)
            return
        v = g.max_degree_vertex()
        for e in branch_states(g, v):
            if e is None:
                rec()
            else:
                matching.append(e)
                rec()
                matching.pop()
        if tracer is not None:
            tracer.exit(g.ops)

    g.begin()
    try:
        for v in g.isolated_vertices():
            g.remove_vertex(v)
        with recursion_room(4 * g.n_vertices() + 50):
            rec()
    finally:
        g.undo()
    return sink.count - start


def enum_matchings_naive(g: MultiGraph, sink: SolutionSink | None = None, tracer: Tracer | None = None) -> int:
    """Binary include/exclude on the lowest-id edge.  Reference variant.

    Each inner iteration costs Theta(d(u) + d(v)) and every matching is
    reached, but the PO condition can fail when G+(e) is much smaller than G.
    """
    if sink is None:
        sink = CountingSink()
    start = sink.count
    matching: list[int] = []

    def rec() -> None:
        if tracer is not None:
            tracer.enter(g.ops)
        e = g.first_edge()
        if e is None:
            sink.emit(matching)
            if tracer is not None:
                tracer.solution()
                tracer.exit(g.ops)
            return
        g.begin()
        g.remove_edge(e)
        rec()
        g.undo()
        g.begin()
        g.remove_closed_neighborhood_edges(e)
        matching.append(e)
        rec()
        matching.pop()
        g.undo()
        if tracer is not None:
            tracer.exit(g.ops)

    with recursion_room(2 * g.capacity[1] + 50):
        rec()
    return sink.count - start
