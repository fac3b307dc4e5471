"""
Counting matchings, connected sets and spanning trees
======================================================

Every enumerator is checked against brute force on a few small graphs.
"""

from pushout import CollectingSink, enum_all_connected, enum_matchings, enum_spanning_trees
from pushout.generators import complete, cycle_with_chords, path
from pushout.oracles import brute_connected, brute_matchings, canonical_sets, matrix_tree_count

graphs = {"P4": path(4), "K4": complete(4), "C6 + 2 chords": cycle_with_chords(6, 2, seed=1)}

for name, g in graphs.items():
    m = CollectingSink()
    enum_matchings(g, m)
    c = CollectingSink()
    enum_all_connected(g, c)
    t = enum_spanning_trees(g)

    # brute force and the Laplacian cofactor give the same numbers
    assert canonical_sets(m.solutions) == brute_matchings(g).solutions
    assert canonical_sets(c.solutions) == brute_connected(g).solutions
    assert t == matrix_tree_count(g)
    print(f"{name:14s} matchings={m.count:3d} connected sets={c.count:3d} spanning trees={t:3d}")

# the graph is back in its input state after each run
g = complete(5)
before = g.snapshot()
enum_spanning_trees(g)
print("K5 restored after enumeration:", g.snapshot() == before)
