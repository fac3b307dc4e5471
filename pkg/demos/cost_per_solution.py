"""
Operations per solution as the input grows
==========================================

Counted operations divided by the number of solutions, on graph families
whose solution counts stay manageable.  The ratio should level off.
"""

import time

from pushout import enum_all_connected, enum_matchings, enum_spanning_trees
from pushout.generators import cycle_with_chords, hub_graph

families = [
    ("matchings, two hubs", lambda n: hub_graph(n, 2, seed=n), enum_matchings),
    ("connected sets, cycle + short chord", lambda n: cycle_with_chords(n, 1, seed=n, max_span=4), enum_all_connected),
    ("spanning trees, cycle + 2 chords", lambda n: cycle_with_chords(n, 2, seed=n), enum_spanning_trees),
]

for title, make, enum in families:
    print(title)
    for n in (25, 50, 100, 200):
        g = make(n)
        t0 = time.perf_counter()
        count = enum(g)
        print(f"  n={n:4d} solutions={count:9d} ops/solution={g.ops / count:6.2f}  ({time.perf_counter() - t0:.2f}s)")
