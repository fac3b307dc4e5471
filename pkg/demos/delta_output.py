"""
Difference-encoded output
=========================

Each solution is written as its change from the previous one.  Summed over
a run, the written size stays below a small multiple of the counted work.
"""

import io

from pushout import DeltaSink, decode, enum_elim_orderings, enum_matchings, leaf_structure
from pushout.generators import path, random_tree
from pushout.solution_io import parse_stream

buf = io.StringIO()
sink = DeltaSink(stream=buf)
enum_matchings(path(5), sink)
print(buf.getvalue())

# orderings share prefixes, so they are written as (keep k, append ...)
buf = io.StringIO()
sink = DeltaSink(sequence=True, stream=buf)
enum_elim_orderings(leaf_structure(path(4)), sink)
print(buf.getvalue())
print("decoded:", decode(parse_stream(buf.getvalue()))[:3], "...")

g = random_tree(9, seed=2)
sink = DeltaSink(sequence=True, keep_records=False)
enum_elim_orderings(leaf_structure(g), sink)
print(f"{sink.count} orderings, delta size {sink.delta_size}, ops {g.ops}, ratio {sink.delta_size / g.ops:.3f}")
