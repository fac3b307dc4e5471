"""Elimination orderings over structures with removable elements.

A structure has a ground set and, while non-empty, a set of removable
elements.  An elimination ordering removes one removable element at a time
until nothing is left.  :func:`enum_elim_orderings` tries every removable
element at every step, in ascending id order.

Three graph structures are provided; in each the ground set is the vertex set
and removing an element deletes the vertex:

* :class:`SimplicialStructure` - simplicial vertices (perfect elimination
  orderings; only chordal graphs have one);
* :class:`NonCutStructure` - vertices whose removal keeps a connected graph
  connected;
* :class:`LeafStructure` - vertices of degree at most one in a tree.
"""

from __future__ import annotations

from typing import Protocol

from ._recursion import recursion_room
from .graph import MultiGraph
from .profiler import Tracer
from .solution_io import CountingSink, SolutionSink

__all__ = [
    "StructureError",
    "NotChordalError",
    "ElimStructure",
    "GraphElimStructure",
    "SimplicialStructure",
    "NonCutStructure",
    "LeafStructure",
    "simplicial_structure",
    "noncut_structure",
    "leaf_structure",
    "enum_elim_orderings",
]


class StructureError(ValueError):
    """The input does not belong to the structure class, or the interface was misused."""


class NotChordalError(StructureError):
    pass


class ElimStructure(Protocol):
    ops: int

    def ground_set(self) -> list[int]: ...

    def removables(self) -> set[int]: ...

    def remove(self, x: int) -> int: ...

    def undo(self, token: int) -> None: ...

    def size(self) -> int: ...

    def stuck(self) -> StructureError: ...


class GraphElimStructure:
    """Vertex-removal structure over a :class:`MultiGraph`.

    ``remove`` opens an undo frame and deletes the vertex; the returned token
    is the frame depth and must be handed back to ``undo`` in LIFO order.
    Subclasses define :meth:`removables`.
    """

    def __init__(self, g: MultiGraph):
        self.g = g

    @property
    def ops(self) -> int:
        return self.g.ops

    def ground_set(self) -> list[int]:
        return self.g.vertices()

    def size(self) -> int:
        return self.g.n_vertices()

    def removables(self) -> set[int]:
        raise NotImplementedError

    def remove(self, x: int) -> int:
        token = self.g.begin()
        self.g.remove_vertex(x)
        return token

    def undo(self, token: int) -> None:
        if token != self.g.depth:
            raise StructureError(f"undo token {token} does not match open frame {self.g.depth}")
        self.g.undo()

    def stuck(self) -> StructureError:
        return StructureError(f"{type(self).__name__}: non-empty structure without removable elements")

    def state(self) -> tuple:
        return self.g.snapshot()


class SimplicialStructure(GraphElimStructure):
    def removables(self) -> set[int]:
        g = self.g
        out = set()
        for v in g.vertices():
            nbrs = set(g.neighbors(v))
            if all(nbrs.issubset({w} | set(g.neighbors(w))) for w in nbrs):
                out.add(v)
        return out

    def stuck(self) -> StructureError:
        return NotChordalError("no simplicial vertex left: the graph is not chordal")


class NonCutStructure(GraphElimStructure):
    def removables(self) -> set[int]:
        cut = self.g.articulation_points()
        return {v for v in self.g.vertices() if v not in cut}


class LeafStructure(GraphElimStructure):
    def removables(self) -> set[int]:
        g = self.g
        return {v for v in g.vertices() if g.degree(v) <= 1}


def _simple_check(g: MultiGraph) -> None:
    seen = set()
    for _, u, v in g.edges():
        key = (min(u, v), max(u, v))
        if key in seen:
            raise StructureError(f"parallel edges between {u} and {v}; a simple graph is required")
        seen.add(key)


def simplicial_structure(g: MultiGraph) -> SimplicialStructure:
    """Perfect elimination orderings.  Chordality is not checked up front:
    enumeration raises :class:`NotChordalError` when it gets stuck."""
    _simple_check(g)
    return SimplicialStructure(g)


def noncut_structure(g: MultiGraph) -> NonCutStructure:
    if g.n_vertices() and not g.is_connected():
        raise StructureError("non-cut vertex orderings need a connected graph")
    return NonCutStructure(g)


def leaf_structure(g: MultiGraph) -> LeafStructure:
    n, m = g.n_vertices(), g.n_edges()
    if m != n - 1 or not g.is_connected():
        raise StructureError(f"not a tree: {n} vertices, {m} edges")
    return LeafStructure(g)


def enum_elim_orderings(z: ElimStructure, sink: SolutionSink | None = None, tracer: Tracer | None = None) -> int:
    """Emit every elimination ordering of ``z`` once, as a list of element ids.

    The structure is back in its input state afterwards, also when an error
    is raised.
    """
    if sink is None:
        sink = CountingSink()
    start = sink.count
    prefix: list[int] = []

    def rec() -> None:
        if tracer is not None:
            tracer.enter(z.ops)
        if z.size() == 1:
            (last,) = z.ground_set()
            prefix.append(last)
            sink.emit(prefix)
            prefix.pop()
            if tracer is not None:
                tracer.solution()
                tracer.exit(z.ops)
            return
        removable = z.removables()
        if not removable:
            raise z.stuck()
        for x in z.ground_set():
            if x in removable:
                token = z.remove(x)
                prefix.append(x)
                try:
                    rec()
                finally:
                    prefix.pop()
                    z.undo(token)
        if tracer is not None:
            tracer.exit(z.ops)

    n = z.size()
    if n == 0:
        raise StructureError("empty structure: nothing to order")
    with recursion_room(2 * n + 50):
        rec()
    return sink.count - start
