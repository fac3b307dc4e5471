"""
Recording a recursion tree and checking the PO condition
========================================================

Trace the connected-set enumerator, find the smallest beta that makes
every inner iteration pass at alpha = 1.5, then run the push-out charging
and look at how much each iteration receives from its ancestors.
"""

import numpy as np

from pushout import POParams, check_po, enum_connected_from_root, minimal_beta, record_enumeration, simulate_push_out
from pushout.generators import connected_gnp

g = connected_gnp(9, 0.35, seed=4)
count, trace = record_enumeration(enum_connected_from_root, g, 0)
print(f"{count} sets, {len(trace)} iterations, {trace.n_inner} inner, T* = {trace.tstar:g}")
print("children per inner iteration:", np.unique(trace.n_children[trace.n_children > 0]))

alpha = 1.5
beta = minimal_beta(trace, alpha)
print(f"minimal beta at alpha={alpha}: {beta:.4f}")

# just below the minimum some node fails; at the minimum all pass
print("pass at 0.99 beta:", check_po(trace, POParams(alpha, 0.99 * beta)).all_pass)
report = simulate_push_out(trace, POParams(alpha, beta))
print(report.summary())

# received charge relative to the bound T(X)/(alpha-1); a node whose keep
# exceeds what reached it passes a negative amount down, hence negative values
ratio = np.array([n.s_received * (alpha - 1) / n.t for n in report.nodes if n.t > 0])
print(f"received / bound: max {ratio.max():.3f}, mean {ratio.mean():.3f}")
