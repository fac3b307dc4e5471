"""Brute-force ground truth for every enumerator.

Nothing here uses the mutation primitives, the undo journal or the
enumerators: each oracle reads the live edge list once and filters subsets or
permutations against the plain definition of the object.  Results are
canonical (sorted tuples in sorted order) so they can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .graph import MultiGraph

__all__ = [
    "OracleSizeError",
    "OracleResult",
    "canonical_sets",
    "canonical_sequences",
    "brute_matchings",
    "brute_connected",
    "brute_spanning_trees",
    "brute_elim_orderings",
    "brute_elim_orderings_structure",
    "is_simplicial",
    "is_noncut",
    "is_leaf",
    "matrix_tree_count",
]

MAX_VERTICES = 16


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    solutions: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.solutions)

    def as_set(self) -> set[tuple[int, ...]]:
        return set(self.solutions)


def canonical_sets(solutions) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(s)) for s in solutions))


def canonical_sequences(solutions) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(s) for s in solutions))


def _read(g: MultiGraph) -> tuple[list[int], list[tuple[int, int, int]]]:
    verts = list(g.snapshot()[0])
    if len(verts) > MAX_VERTICES:
        raise OracleSizeError(f"{len(verts)} vertices exceeds the brute-force limit {MAX_VERTICES}")
    return verts, list(g.snapshot()[2])


def _find(parent: dict[int, int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _connected(verts, pairs) -> bool:
    verts = list(verts)
    if not verts:
        return True
    parent = {v: v for v in verts}
    for u, v in pairs:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    root = _find(parent, verts[0])
    return all(_find(parent, v) == root for v in verts)


def brute_matchings(g: MultiGraph) -> OracleResult:
    """Edge subsets with pairwise disjoint endpoints (size at most n/2)."""
    verts, edges = _read(g)
    found = []
    for k in range(len(verts) // 2 + 1):
        for combo in combinations(edges, k):
            ends = [x for _, u, v in combo for x in (u, v)]
            if len(set(ends)) == len(ends):
                found.append([e for e, _, _ in combo])
    return OracleResult(canonical_sets(found))


def brute_connected(g: MultiGraph, root: int | None = None) -> OracleResult:
    """Non-empty vertex subsets inducing connected subgraphs (containing ``root`` if given)."""
    verts, edges = _read(g)
    found = []
    for k in range(1, len(verts) + 1):
        for combo in combinations(verts, k):
            if root is not None and root not in combo:
                continue
            inside = set(combo)
            pairs = [(u, v) for _, u, v in edges if u in inside and v in inside]
            if _connected(combo, pairs):
                found.append(combo)
    return OracleResult(canonical_sets(found))


def brute_spanning_trees(g: MultiGraph) -> OracleResult:
    """(n-1)-edge subsets that connect all vertices."""
    verts, edges = _read(g)
    n = len(verts)
    if n == 0:
        return OracleResult(())
    found = []
    for combo in combinations(edges, n - 1):
        parent = {v: v for v in verts}
        ok = True
        for _, u, v in combo:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            found.append([e for e, _, _ in combo])
    return OracleResult(canonical_sets(found))


# ----------------------------------------------------------------------
# elimination orderings
# ----------------------------------------------------------------------

Adjacency = dict[int, set[int]]


def is_simplicial(adj: Adjacency, v: int) -> bool:
    nbrs = list(adj[v])
    return all(b in adj[a] for a, b in combinations(nbrs, 2))


def is_noncut(adj: Adjacency, v: int) -> bool:
    rest = [x for x in adj if x != v]
    return _connected(rest, [(a, b) for a in rest for b in adj[a] if b != v])


def is_leaf(adj: Adjacency, v: int) -> bool:
    return len(adj[v]) <= 1


_PREDICATES = {"simplicial": is_simplicial, "noncut": is_noncut, "leaf": is_leaf}


def brute_elim_orderings(g: MultiGraph, kind: str | Callable[[Adjacency, int], bool]) -> OracleResult:
    """All vertex permutations whose every step removes a removable vertex.

    ``kind`` is ``"simplicial"``, ``"noncut"``, ``"leaf"`` or a predicate on
    (adjacency, vertex).  The search walks the permutation tree and abandons a
    prefix as soon as it stops being valid; each check builds the remaining
    graph afresh from the input edge list.
    """
    pred = _PREDICATES[kind] if isinstance(kind, str) else kind
    verts, edges = _read(g)

    def remaining_adj(removed: set[int]) -> Adjacency:
        adj: Adjacency = {v: set() for v in verts if v not in removed}
        for _, u, v in edges:
            if u in adj and v in adj:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    found = []
    prefix: list[int] = []

    def extend() -> None:
        if len(prefix) == len(verts):
            found.append(tuple(prefix))
            return
        adj = remaining_adj(set(prefix))
        for v in sorted(adj):
            if pred(adj, v):
                prefix.append(v)
                extend()
                prefix.pop()

    if verts:
        extend()
    return OracleResult(canonical_sequences(found))


def brute_elim_orderings_structure(factory: Callable[[], object], elements: list[int]) -> OracleResult:
    """Permutation filter through the structure interface, one fresh structure per permutation.

    ``factory()`` must build a new structure over ``elements``.  Only
    ``removables`` and ``remove`` are used; nothing is ever undone.
    Exponential in ``len(elements)``; keep it to seven or fewer.
    """
    from itertools import permutations

    if len(elements) > 8:
        raise OracleSizeError("structure-interface oracle is limited to 8 elements")
    found = []
    for perm in permutations(sorted(elements)):
        z = factory()
        for x in perm:
            if x not in z.removables():
                break
            z.remove(x)
        else:
            found.append(perm)
    return OracleResult(canonical_sequences(found))


# ----------------------------------------------------------------------
# matrix-tree theorem
# ----------------------------------------------------------------------


def _bareiss_det(a: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_tree_count(g: MultiGraph) -> int:
    """Number of spanning trees: a Laplacian cofactor.  0 when disconnected."""
    verts = list(g.snapshot()[0])
    n = len(verts)
    if n == 0:
        return 0
    index = {v: i for i, v in enumerate(verts)}
    lap = [[0] * n for _ in range(n)]
    for _, u, v in g.snapshot()[2]:
        i, j = index[u], index[v]
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _bareiss_det(minor)
