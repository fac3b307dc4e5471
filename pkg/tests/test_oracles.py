import pytest

from corpora import atlas_graphs
from pushout import MultiGraph
from pushout.generators import complete, cycle, path, star
from pushout.oracles import (
    OracleSizeError,
    brute_connected,
    brute_elim_orderings,
    brute_matchings,
    brute_spanning_trees,
    matrix_tree_count,
)


def test_matchings_small():
    assert brute_matchings(path(3)).count == 3
    assert brute_matchings(complete(4)).count == 10
    assert brute_matchings(MultiGraph(0)).solutions == ((),)


def test_connected_small():
    assert brute_connected(path(3)).count == 6
    assert brute_connected(star(4), 0).count == 8
    assert brute_connected(complete(3), 0).solutions == ((0,), (0, 1), (0, 1, 2), (0, 2))


def test_spanning_trees_small():
    assert brute_spanning_trees(cycle(4)).count == 4
    assert brute_spanning_trees(complete(4)).count == 16
    assert brute_spanning_trees(MultiGraph(2, [(0, 1)] * 3)).count == 3


def test_matrix_tree_small():
    assert matrix_tree_count(complete(5)) == 125
    assert matrix_tree_count(MultiGraph(2, [(0, 1)] * 3)) == 3
    assert matrix_tree_count(MultiGraph(3, [(0, 1)])) == 0
    assert matrix_tree_count(MultiGraph(1)) == 1


def test_cayley_formula():
    for n in range(1, 9):
        assert matrix_tree_count(complete(n)) == n ** (n - 2) if n > 1 else 1


def test_two_counting_routes_agree_on_small_graphs():
    for g in atlas_graphs(6):
        assert matrix_tree_count(g) == brute_spanning_trees(g).count


def test_elim_predicates():
    assert brute_elim_orderings(complete(3), "simplicial").count == 6
    assert brute_elim_orderings(cycle(4), "simplicial").count == 0
    assert brute_elim_orderings(path(3), "leaf").count == 4
    custom = brute_elim_orderings(path(3), lambda adj, v: True)
    assert custom.count == 6


def test_size_limit():
    with pytest.raises(OracleSizeError):
        brute_matchings(path(17))
