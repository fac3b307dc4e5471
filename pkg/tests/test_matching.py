import random

from corpora import atlas_graphs
from pushout import CollectingSink, MultiGraph, enum_matchings, enum_matchings_naive, incremental_gplus_walk
from pushout.generators import complete, connected_gnp, gnp, multi, path
from pushout.matching import branch_states
from pushout.oracles import brute_matchings, canonical_sets
from pushout.profiler import record_enumeration


def matchings_of(g):
    sink = CollectingSink()
    enum_matchings(g, sink)
    return canonical_sets(sink.solutions)


def test_small_counts():
    assert enum_matchings(path(3)) == 3
    assert enum_matchings(complete(3)) == 4
    assert enum_matchings(complete(4)) == 10
    assert enum_matchings(MultiGraph(0)) == 1
    assert enum_matchings(MultiGraph(3)) == 1


def test_parallel_edges_are_distinct_matchings():
    assert enum_matchings(MultiGraph(2, [(0, 1), (0, 1)])) == 3


def test_matches_oracle_and_naive_variant():
    graphs = atlas_graphs(6) + [gnp(random.Random(s).randint(1, 9), 0.4, seed=s) for s in range(100)]
    graphs += [multi(n, n + 3, seed=n) for n in range(2, 8)]
    for g in graphs:
        before = g.snapshot()
        got = matchings_of(g)
        assert got == brute_matchings(g).solutions
        naive = CollectingSink()
        enum_matchings_naive(g, naive)
        assert canonical_sets(naive.solutions) == got
        assert g.snapshot() == before


def test_branch_states_walk_the_right_graphs():
    g = complete(4)
    before = g.snapshot()
    v = 0
    seen = []
    for e in branch_states(g, v):
        if e is None:
            assert g.degree(v) == 0 and g.n_edges() == 3
        else:
            other = {0: 1, 1: 2, 2: 3}[e]  # K4 edges at vertex 0 are (0,1), (0,2), (0,3)
            # G+(e): every edge at v or at the other endpoint is gone
            assert g.degree(v) == 0 and g.degree(other) == 0
            assert g.n_edges() == 1
            seen.append(e)
    assert seen == [0, 1, 2]
    assert g.snapshot() == before


def test_gplus_walk_cost_is_linear_in_edges():
    for seed in range(40):
        g = connected_gnp(12, 0.5, seed=seed)
        v = g.max_degree_vertex()
        m = g.n_edges()
        before = g.ops
        for _ in incremental_gplus_walk(g, v):
            pass
        assert g.ops - before <= 6 * m + 10


def test_walk_can_be_abandoned_midway():
    g = complete(5)
    before = g.snapshot()
    walk = incremental_gplus_walk(g, 0)
    next(walk)
    walk.close()
    assert g.snapshot() == before


def test_inner_iterations_have_at_least_two_children():
    for seed in range(30):
        _, t = record_enumeration(enum_matchings, connected_gnp(8, 0.4, seed=seed))
        inner = t.n_children[t.n_children > 0]
        assert inner.min() >= 2
        assert t.n_solutions == t.n_leaves
