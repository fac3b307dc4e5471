"""Seeded random and structured test graphs.

All generators take a ``seed`` and use their own :class:`random.Random`, so
the same arguments always give the same edge list in the same order.
"""

from __future__ import annotations

import random

from .graph import MultiGraph

__all__ = [
    "GeneratorSpecError",
    "gnp",
    "connected_gnp",
    "chordal",
    "random_tree",
    "cycle",
    "path",
    "star",
    "complete",
    "multi",
    "hub_graph",
    "cycle_with_chords",
    "generate",
    "GENERATORS",
]


class GeneratorSpecError(ValueError):
    pass


def gnp(n: int, p: float, seed: int = 0) -> MultiGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return MultiGraph(n, edges)


def connected_gnp(n: int, p: float, seed: int = 0) -> MultiGraph:
    """A random spanning tree plus every other pair independently with probability ``p``."""
    rng = random.Random(seed)
    pairs = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        pairs.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < p:
                pairs.add((u, v))
    return MultiGraph(n, sorted(pairs))


def chordal(n: int, k: int, seed: int = 0, keep: float = 0.7) -> MultiGraph:
    """Random chordal graph grown as a partial k-tree.

    Start from a clique on ``min(n, k + 1)`` vertices; each new vertex picks an
    existing clique of size at most ``k`` and joins all of it, so the reverse
    insertion order is a perfect elimination ordering.  With ``keep < 1`` the
    attachment clique is a random non-empty sub-clique, which keeps chordality.
    """
    if k < 1 and n > 1:
        raise GeneratorSpecError("chordal needs k >= 1")
    rng = random.Random(seed)
    base = min(n, k + 1)
    pairs = {(u, v) for u in range(base) for v in range(u + 1, base)}
    cliques = [tuple(range(base))] if base else []
    for v in range(base, n):
        host = list(rng.choice(cliques))
        rng.shuffle(host)
        size = max(1, min(k, sum(1 for _ in host if rng.random() < keep)))
        attach = sorted(host[:size])
        for u in attach:
            pairs.add((u, v))
        cliques.append(tuple(attach) + (v,))
    # relabel so vertex ids do not reveal the construction order
    perm = list(range(n))
    rng.shuffle(perm)
    edges = sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in pairs)
    return MultiGraph(n, edges)


def random_tree(n: int, seed: int = 0) -> MultiGraph:
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return MultiGraph(n, sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GeneratorSpecError("a simple cycle needs at least 3 vertices")
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> MultiGraph:
    """Vertex 0 joined to ``n - 1`` leaves."""
    return MultiGraph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def multi(n: int, m: int, seed: int = 0) -> MultiGraph:
    """Connected multigraph: a random spanning tree plus ``m - n + 1`` random extra edges (repeats allowed)."""
    if n < 1:
        raise GeneratorSpecError("multi needs n >= 1")
    if m < n - 1:
        raise GeneratorSpecError("multi needs m >= n - 1 to be connected")
    if n == 1 and m > 0:
        raise GeneratorSpecError("a single vertex cannot carry edges")
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(m - (n - 1)):
        u, v = rng.sample(range(n), 2)
        edges.append((min(u, v), max(u, v)))
    rng.shuffle(edges)
    return MultiGraph(n, edges)


def hub_graph(n: int, hubs: int = 2, seed: int = 0, p_extra: float = 0.2) -> MultiGraph:
    """``hubs`` mutually adjacent hub vertices; every other vertex joins one random hub
    and each further hub with probability ``p_extra``.  Connected, no isolated vertices,
    and the matching count grows only polynomially in ``n``."""
    if hubs < 1 or n <= hubs:
        raise GeneratorSpecError("hub_graph needs 1 <= hubs < n")
    rng = random.Random(seed)
    pairs = {(u, v) for u in range(hubs) for v in range(u + 1, hubs)}
    for v in range(hubs, n):
        first = rng.randrange(hubs)
        pairs.add((first, v))
        for h in range(hubs):
            if h != first and rng.random() < p_extra:
                pairs.add((h, v))
    return MultiGraph(n, sorted(pairs))


def cycle_with_chords(n: int, chords: int = 1, seed: int = 0, max_span: int | None = None) -> MultiGraph:
    """Cycle on ``n`` vertices plus ``chords`` distinct random chords.

    ``max_span`` bounds how far apart (along the cycle) a chord's endpoints may be.
    """
    if n < 4 and chords:
        raise GeneratorSpecError("chords need a cycle of length at least 4")
    rng = random.Random(seed)
    pairs = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    limit = n * (n - 1) // 2 - n
    if chords > limit or (max_span is not None and (max_span < 2 or max_span > n - 2)):
        raise GeneratorSpecError(f"cannot place {chords} chords in a {n}-cycle (max_span={max_span})")
    added = 0
    while added < chords:
        if max_span is None:
            u, v = sorted(rng.sample(range(n), 2))
        else:
            a = rng.randrange(n)
            u, v = sorted((a, (a + rng.randint(2, max_span)) % n))
        if (u, v) not in pairs:
            pairs.add((u, v))
            added += 1
    return MultiGraph(n, sorted(pairs))


GENERATORS = {
    "gnp": ("n p", lambda a, seed: gnp(int(a[0]), float(a[1]), seed)),
    "connected-gnp": ("n p", lambda a, seed: connected_gnp(int(a[0]), float(a[1]), seed)),
    "chordal": ("n k", lambda a, seed: chordal(int(a[0]), int(a[1]), seed)),
    "tree": ("n", lambda a, seed: random_tree(int(a[0]), seed)),
    "cycle": ("n", lambda a, seed: cycle(int(a[0]))),
    "path": ("n", lambda a, seed: path(int(a[0]))),
    "star": ("n", lambda a, seed: star(int(a[0]))),
    "complete": ("n", lambda a, seed: complete(int(a[0]))),
    "multi": ("n m", lambda a, seed: multi(int(a[0]), int(a[1]), seed)),
    "hubs": ("n h", lambda a, seed: hub_graph(int(a[0]), int(a[1]), seed)),
    "cycle-chords": ("n c", lambda a, seed: cycle_with_chords(int(a[0]), int(a[1]), seed)),
}


def generate(spec: list[str] | str, seed: int = 0) -> MultiGraph:
    """Build a graph from a spec such as ``["chordal", "6", "2"]`` or ``"cycle 5"``."""
    toks = spec.split() if isinstance(spec, str) else list(spec)
    if not toks or toks[0] not in GENERATORS:
        known = ", ".join(sorted(GENERATORS))
        raise GeneratorSpecError(f"unknown generator {toks[0] if toks else ''!r}; known: {known}")
    params, build = GENERATORS[toks[0]]
    want = len(params.split())
    if len(toks) - 1 != want:
        raise GeneratorSpecError(f"{toks[0]} takes {want} argument(s): {params}")
    try:
        return build(toks[1:], seed)
    except ValueError as exc:
        if isinstance(exc, GeneratorSpecError):
            raise
        raise GeneratorSpecError(f"bad arguments for {toks[0]}: {exc}") from None
