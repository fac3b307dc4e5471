"""Mutable multigraph with an undo journal and an elementary-operation counter.

Every enumerator in this package mutates one :class:`MultiGraph` in place and
restores it on the way back up the recursion.  Adjacency lists are doubly
linked (dancing-links style), so unlinking a half-edge is O(1) and relinking
it in reverse order puts it back at exactly the same position.

``ops`` counts elementary reads and mutations.  It is the only cost measure
used by the profiler; enumerators never touch it directly.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

__all__ = [
    "ContractViolation",
    "GraphFormatError",
    "MultiGraph",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
]

# journal record tags
_EDGE = 0
_VERTEX = 1
_MOVE = 2


class ContractViolation(ValueError):
    """A primitive was called on a dead id or with an illegal argument."""


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MultiGraph:
    """Undirected multigraph without self-loops.

    Vertex and edge ids are consecutive integers assigned at construction and
    never reused.  Contraction re-maps edge endpoints but keeps edge ids, so an
    edge id always refers to the same edge of the input graph.
    """

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        self.ops = 0
        self._journal: list[tuple] = []
        self._frames: list[int] = []

        # per-vertex state; vertex v lives at index v + 1 of the vertex lists,
        # index 0 is the sentinel
        self._valive: list[bool] = []
        self._deg: list[int] = []
        self._vsent: list[int] = []
        self._vn = [0]
        self._vp = [0]
        self._sn = [0]
        self._sp = [0]
        self._nv = 0

        # per-edge state; half s of edge e sits at _end[2e + s]
        self._end: list[int] = []
        self._ealive: list[bool] = []
        self._ehalf: list[int] = []
        self._en = [0]
        self._ep = [0]
        self._m = 0

        # adjacency nodes: vertex sentinels and half-edges share one index space
        self._an: list[int] = []
        self._ap: list[int] = []
        self._nedge: list[int] = []

        for _ in range(n):
            self.add_vertex()
        for u, v in edges:
            self.add_edge(u, v)

    # ------------------------------------------------------------------
    # construction (not journaled)
    # ------------------------------------------------------------------

    def add_vertex(self) -> int:
        self._check_unjournaled()
        v = len(self._valive)
        self._valive.append(True)
        self._deg.append(0)
        node = len(self._an)
        self._an.append(node)
        self._ap.append(node)
        self._nedge.append(-1)
        self._vsent.append(node)
        # append to live list
        self._vn.append(0)
        self._vp.append(0)
        self._sn.append(0)
        self._sp.append(0)
        _insert_before(self._vn, self._vp, 0, v + 1)
        self._nv += 1
        return v

    def add_edge(self, u: int, v: int) -> int:
        self._check_unjournaled()
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ContractViolation(f"self-loop at vertex {u} is not allowed")
        e = len(self._ealive)
        self._end.extend((u, v))
        self._ealive.append(True)
        node = len(self._an)
        self._ehalf.append(node)
        for s, w in ((0, u), (1, v)):
            self._an.append(node + s)
            self._ap.append(node + s)
            self._nedge.append(e)
            _insert_before(self._an, self._ap, self._vsent[w], node + s)
            if self._deg[w] == 0:
                _insert_before(self._sn, self._sp, 0, w + 1)
            self._deg[w] += 1
        self._en.append(0)
        self._ep.append(0)
        _insert_before(self._en, self._ep, 0, e + 1)
        self._m += 1
        return e

    def _check_unjournaled(self) -> None:
        if self._journal:
            raise ContractViolation("cannot add vertices or edges while mutations are pending")

    # ------------------------------------------------------------------
    # checks
    # ------------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < len(self._valive)) or not self._valive[v]:
            raise ContractViolation(f"vertex {v} is not live")

    def _check_edge(self, e: int) -> None:
        if not (0 <= e < len(self._ealive)) or not self._ealive[e]:
            raise ContractViolation(f"edge {e} is not live")

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < len(self._valive) and self._valive[v]

    def has_edge(self, e: int) -> bool:
        return 0 <= e < len(self._ealive) and self._ealive[e]

    # ------------------------------------------------------------------
    # reads
    # ------------------------------------------------------------------

    @property
    def capacity(self) -> tuple[int, int]:
        """Number of vertex ids and edge ids ever allocated."""
        return len(self._valive), len(self._ealive)

    def n_vertices(self) -> int:
        self.ops += 1
        return self._nv

    def n_edges(self) -> int:
        self.ops += 1
        return self._m

    def vertices(self) -> list[int]:
        """Live vertices in list order (ascending id unless contraction reordered nothing)."""
        out = []
        vn = self._vn
        i = vn[0]
        while i:
            out.append(i - 1)
            i = vn[i]
        self.ops += len(out) + 1
        return out

    def edges(self) -> list[tuple[int, int, int]]:
        """Live edges as ``(id, u, v)`` in ascending id order."""
        out = []
        en, end = self._en, self._end
        i = en[0]
        while i:
            e = i - 1
            out.append((e, end[2 * e], end[2 * e + 1]))
            i = en[i]
        self.ops += len(out) + 1
        return out

    def first_edge(self) -> int | None:
        """Lowest live edge id, or None."""
        self.ops += 1
        i = self._en[0]
        return i - 1 if i else None

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        self.ops += 1
        return self._end[2 * e], self._end[2 * e + 1]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        self.ops += 1
        return self._deg[v]

    def incident(self, v: int) -> list[tuple[int, int]]:
        """``(edge, other endpoint)`` pairs at ``v`` in adjacency order."""
        self._check_vertex(v)
        out = []
        an, nedge, ehalf, end = self._an, self._nedge, self._ehalf, self._end
        sent = self._vsent[v]
        node = an[sent]
        while node != sent:
            e = nedge[node]
            s = node - ehalf[e]
            out.append((e, end[2 * e + 1 - s]))
            node = an[node]
        self.ops += len(out) + 1
        return out

    def neighbors(self, v: int) -> list[int]:
        return [w for _, w in self.incident(v)]

    def first_incident(self, v: int) -> tuple[int, int] | None:
        self._check_vertex(v)
        self.ops += 1
        node = self._an[self._vsent[v]]
        if node == self._vsent[v]:
            return None
        e = self._nedge[node]
        s = node - self._ehalf[e]
        return e, self._end[2 * e + 1 - s]

    def max_degree_vertex(self) -> int | None:
        """Vertex of maximum degree, ties to the smallest id.

        Scans only non-isolated vertices, so the cost is bounded by 2|E|.
        """
        sn, deg = self._sn, self._deg
        best, best_d = None, 0
        i = sn[0]
        scanned = 0
        while i:
            v = i - 1
            d = deg[v]
            if d > best_d or (d == best_d and v < best):
                best, best_d = v, d
            i = sn[i]
            scanned += 1
        self.ops += scanned + 1
        return best

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices() if self._deg[v] == 0]

    # ------------------------------------------------------------------
    # journal
    # ------------------------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self._frames)

    def begin(self) -> int:
        """Open an undo frame; returns the new frame depth."""
        self._frames.append(len(self._journal))
        return len(self._frames)

    def undo(self) -> None:
        """Revert every mutation since the matching :meth:`begin`."""
        if not self._frames:
            raise ContractViolation("undo without an open frame")
        mark = self._frames.pop()
        journal = self._journal
        while len(journal) > mark:
            rec = journal.pop()
            tag = rec[0]
            if tag == _EDGE:
                self._restore_edge(rec[1])
            elif tag == _MOVE:
                self._unmove(rec[1], rec[2], rec[3], rec[4])
            else:
                self._restore_vertex(rec[1])
            self.ops += 1

    # ------------------------------------------------------------------
    # raw mutations
    # ------------------------------------------------------------------

    def _drop_degree(self, w: int) -> None:
        self._deg[w] -= 1
        if self._deg[w] == 0:
            _unlink(self._sn, self._sp, w + 1)

    def _raise_degree(self, w: int) -> None:
        if self._deg[w] == 0:
            _relink(self._sn, self._sp, w + 1)
        self._deg[w] += 1

    def _remove_edge_raw(self, e: int) -> None:
        an, ap = self._an, self._ap
        h = self._ehalf[e]
        _unlink(an, ap, h)
        self._drop_degree(self._end[2 * e])
        _unlink(an, ap, h + 1)
        self._drop_degree(self._end[2 * e + 1])
        _unlink(self._en, self._ep, e + 1)
        self._ealive[e] = False
        self._m -= 1
        self._journal.append((_EDGE, e))
        self.ops += 1

    def _restore_edge(self, e: int) -> None:
        an, ap = self._an, self._ap
        h = self._ehalf[e]
        self._m += 1
        self._ealive[e] = True
        _relink(self._en, self._ep, e + 1)
        self._raise_degree(self._end[2 * e + 1])
        _relink(an, ap, h + 1)
        self._raise_degree(self._end[2 * e])
        _relink(an, ap, h)

    def _remove_vertex_raw(self, v: int) -> None:
        _unlink(self._vn, self._vp, v + 1)
        self._valive[v] = False
        self._nv -= 1
        self._journal.append((_VERTEX, v))
        self.ops += 1

    def _restore_vertex(self, v: int) -> None:
        self._nv += 1
        self._valive[v] = True
        _relink(self._vn, self._vp, v + 1)

    def _move_half(self, node: int, src: int, dst: int) -> None:
        an, ap = self._an, self._ap
        old_p, old_n = ap[node], an[node]
        _unlink(an, ap, node)
        self._drop_degree(src)
        _insert_before(an, ap, self._vsent[dst], node)
        self._raise_degree(dst)
        e = self._nedge[node]
        self._end[2 * e + node - self._ehalf[e]] = dst
        self._journal.append((_MOVE, node, src, old_p, old_n))
        self.ops += 1

    def _unmove(self, node: int, src: int, old_p: int, old_n: int) -> None:
        an, ap = self._an, self._ap
        e = self._nedge[node]
        idx = 2 * e + node - self._ehalf[e]
        dst = self._end[idx]
        _unlink(an, ap, node)
        self._drop_degree(dst)
        ap[node] = old_p
        an[node] = old_n
        self._raise_degree(src)
        _relink(an, ap, node)
        self._end[idx] = src

    # ------------------------------------------------------------------
    # journaled primitives
    # ------------------------------------------------------------------

    def remove_edge(self, e: int) -> None:
        """G minus e."""
        self._check_edge(e)
        self._remove_edge_raw(e)

    def isolate(self, v: int) -> None:
        """Remove every edge incident to ``v``; ``v`` itself stays."""
        self._check_vertex(v)
        an, nedge, sent = self._an, self._nedge, self._vsent[v]
        node = an[sent]
        while node != sent:
            nxt = an[node]
            self._remove_edge_raw(nedge[node])
            node = nxt
        self.ops += 1

    def remove_vertex(self, v: int) -> None:
        """G minus v: drop ``v`` and its incident edges."""
        self.isolate(v)
        self._remove_vertex_raw(v)

    def remove_closed_neighborhood_edges(self, e: int) -> None:
        """G+(e): remove e and every edge sharing an endpoint with it.

        Both endpoints stay in the graph as isolated vertices.
        """
        self._check_edge(e)
        u, v = self._end[2 * e], self._end[2 * e + 1]
        self.isolate(u)
        self.isolate(v)

    def contract_edge(self, e: int) -> int:
        """G/e.  Returns the surviving endpoint.

        The endpoint of smaller degree is absorbed (ties: the larger id), so
        the cost is proportional to min(d(u), d(v)).  Parallel edges to other
        vertices are kept; ``e`` and every edge parallel to it would become a
        self-loop and are deleted instead.
        """
        self._check_edge(e)
        u, v = self._end[2 * e], self._end[2 * e + 1]
        if u == v:
            raise ContractViolation(f"edge {e} is a self-loop")
        du, dv = self._deg[u], self._deg[v]
        if du < dv or (du == dv and u > v):
            u, v = v, u
        # v is absorbed into u
        an, nedge, ehalf, end = self._an, self._nedge, self._ehalf, self._end
        sent = self._vsent[v]
        loops = []
        node = an[sent]
        while node != sent:
            nxt = an[node]
            f = nedge[node]
            s = node - ehalf[f]
            if end[2 * f + 1 - s] == u:
                loops.append(f)
            else:
                self._move_half(node, v, u)
            node = nxt
        for f in loops:
            self._remove_edge_raw(f)
        self._remove_vertex_raw(v)
        self.ops += 1
        return u

    def simplify_at(self, v: int) -> int:
        """Delete every edge at ``v`` that repeats an earlier neighbour in adjacency order.

        Afterwards ``v`` has one edge per neighbour.  Costs d(v) + 1; returns
        the number of edges deleted.
        """
        self._check_vertex(v)
        an, nedge, ehalf, end = self._an, self._nedge, self._ehalf, self._end
        sent = self._vsent[v]
        seen = set()
        dropped = 0
        node = an[sent]
        while node != sent:
            nxt = an[node]
            f = nedge[node]
            w = end[2 * f + 1 - (node - ehalf[f])]
            if w in seen:
                self._remove_edge_raw(f)
                dropped += 1
            else:
                seen.add(w)
            self.ops += 1
            node = nxt
        self.ops += 1
        return dropped

    # ------------------------------------------------------------------
    # global queries, all Theta(|V| + |E|)
    # ------------------------------------------------------------------

    def connected_components(self) -> list[set[int]]:
        an, nedge, ehalf, end, vsent = self._an, self._nedge, self._ehalf, self._end, self._vsent
        seen: set[int] = set()
        comps = []
        work = 0
        for s in self.vertices():
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                sent = vsent[x]
                node = an[sent]
                while node != sent:
                    f = nedge[node]
                    y = end[2 * f + 1 - (node - ehalf[f])]
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
                    node = an[node]
                    work += 1
            comps.append(comp)
        self.ops += work
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def _lowlink(self, want_bridges: bool) -> set[int]:
        """One DFS computing bridges (edge ids) or articulation points."""
        an, nedge, ehalf, end, vsent = self._an, self._nedge, self._ehalf, self._end, self._vsent
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        out: set[int] = set()
        t = 0
        work = 0
        for root in self.vertices():
            if root in disc:
                continue
            disc[root] = low[root] = t
            t += 1
            root_children = 0
            # frames: [vertex, edge used to enter, current adjacency node]
            stack = [[root, -1, vsent[root]]]
            while stack:
                top = stack[-1]
                x, pe = top[0], top[1]
                node = an[top[2]]
                top[2] = node
                if node == vsent[x]:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        if low[x] < low[p]:
                            low[p] = low[x]
                        if want_bridges:
                            if low[x] > disc[p]:
                                out.add(pe)
                        elif stack[-1][1] != -1 and low[x] >= disc[p]:
                            out.add(p)
                    continue
                work += 1
                f = nedge[node]
                if f == pe:
                    continue
                y = end[2 * f + 1 - (node - ehalf[f])]
                if y in disc:
                    if disc[y] < low[x]:
                        low[x] = disc[y]
                else:
                    disc[y] = low[y] = t
                    t += 1
                    if x == root:
                        root_children += 1
                    stack.append([y, f, vsent[y]])
            if not want_bridges and root_children >= 2:
                out.add(root)
        self.ops += work
        return out

    def bridges(self) -> set[int]:
        return self._lowlink(True)

    def articulation_points(self) -> set[int]:
        return self._lowlink(False)

    def parallel_class(self, e: int) -> list[int]:
        """``e`` and every edge with the same two endpoints, ascending ids."""
        u, v = self.endpoints(e)
        if self._deg[v] < self._deg[u]:
            u, v = v, u
        return sorted(f for f, w in self.incident(u) if w == v)

    def series_class(self, e: int) -> list[int]:
        """``e`` and every non-parallel ``f`` such that e is a bridge of G minus f.

        Assumes the graph is connected and bridgeless; then the series edges
        are exactly the bridges of G minus e.
        """
        par = set(self.parallel_class(e))
        self.begin()
        self.remove_edge(e)
        found = self.bridges()
        self.undo()
        return [e] + sorted(f for f in found if f not in par)

    # ------------------------------------------------------------------
    # comparison / copying
    # ------------------------------------------------------------------

    def snapshot(self) -> tuple:
        """Logical state: live vertices, live edges, adjacency orders, degrees.

        Two graphs with equal snapshots are indistinguishable through every
        public primitive, including iteration order.
        """
        verts = []
        i = self._vn[0]
        while i:
            verts.append(i - 1)
            i = self._vn[i]
        support = []
        i = self._sn[0]
        while i:
            support.append(i - 1)
            i = self._sn[i]
        edges = []
        i = self._en[0]
        while i:
            e = i - 1
            edges.append((e, self._end[2 * e], self._end[2 * e + 1]))
            i = self._en[i]
        adj = []
        for v in verts:
            sent = self._vsent[v]
            row = []
            node = self._an[sent]
            while node != sent:
                row.append(node)
                node = self._an[node]
            adj.append(tuple(row))
        degs = tuple(self._deg[v] for v in verts)
        return tuple(verts), tuple(support), tuple(edges), tuple(adj), degs, self._m, self._nv

    def copy(self) -> "MultiGraph":
        """Fresh graph on the live part, ids compacted to 0..n-1 in list order."""
        verts = [v for v in self.snapshot()[0]]
        index = {v: i for i, v in enumerate(verts)}
        return MultiGraph(len(verts), [(index[u], index[v]) for _, u, v in self.snapshot()[2]])

    def edge_list(self) -> list[tuple[int, int]]:
        """Live edges as endpoint pairs, without touching the counter."""
        return [(u, v) for _, u, v in self.snapshot()[2]]

    def check_invariants(self) -> None:
        verts, support, edges, adj, degs, m, nv = self.snapshot()
        assert nv == len(verts)
        assert m == len(edges)
        assert sum(degs) == 2 * m
        for v, row in zip(verts, adj):
            assert len(row) == self._deg[v]
        assert set(support) == {v for v in verts if self._deg[v] > 0}
        for _, u, v in edges:
            assert self._valive[u] and self._valive[v] and u != v

    def __repr__(self) -> str:
        return f"MultiGraph(n={self._nv}, m={self._m})"


def _unlink(nxt: list[int], prv: list[int], i: int) -> None:
    nxt[prv[i]] = nxt[i]
    prv[nxt[i]] = prv[i]


def _relink(nxt: list[int], prv: list[int], i: int) -> None:
    nxt[prv[i]] = i
    prv[nxt[i]] = i


def _insert_before(nxt: list[int], prv: list[int], anchor: int, i: int) -> None:
    p = prv[anchor]
    prv[i] = p
    nxt[i] = anchor
    nxt[p] = i
    prv[anchor] = i


# ----------------------------------------------------------------------
# text format
# ----------------------------------------------------------------------


def parse_graph(text: str) -> MultiGraph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based).

    ``#`` lines and blank lines are ignored; repeated lines give parallel edges.
    Errors carry the 1-based line and character column of the offending token.
    """
    rows: list[tuple[int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw)]))
    if not rows:
        raise GraphFormatError("missing header 'n m'", 1)
    lineno, head = rows[0]
    n, m = _ints(head, lineno, 2)
    if n < 0 or m < 0:
        raise GraphFormatError("negative size in header", lineno, head[0][0] if n < 0 else head[1][0])
    if len(rows) - 1 != m:
        last = rows[-1][0]
        raise GraphFormatError(f"header declares {m} edges, found {len(rows) - 1}", last)
    g = MultiGraph(n)
    for lineno, toks in rows[1:]:
        u, v = _ints(toks, lineno, 2)
        for (col, _), x in zip(toks, (u, v)):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range 0..{n - 1}", lineno, col)
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}", lineno, toks[0][0])
        g.add_edge(u, v)
    return g


def _ints(toks: Sequence[tuple[int, str]], lineno: int, count: int) -> list[int]:
    if len(toks) != count:
        col = toks[count][0] if len(toks) > count else (toks[0][0] if toks else 1)
        raise GraphFormatError(f"expected {count} integers, got {len(toks)}", lineno, col)
    out = []
    for col, tok in toks:
        try:
            out.append(int(tok))
        except ValueError:
            raise GraphFormatError(f"not an integer: {tok!r}", lineno, col) from None
    return out


def format_graph(g: MultiGraph) -> str:
    """Inverse of :func:`parse_graph` for graphs with ids 0..n-1 all live."""
    verts = g.snapshot()[0]
    index = {v: i for i, v in enumerate(verts)}
    pairs = g.edge_list()
    lines = [f"{len(verts)} {len(pairs)}"]
    lines.extend(f"{index[u]} {index[v]}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> MultiGraph:
    if path == "-":
        import sys

        return parse_graph(sys.stdin.read())
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: MultiGraph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))

