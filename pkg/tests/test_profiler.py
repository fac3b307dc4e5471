import io
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pushout import MultiGraph, enum_connected_from_root, enum_matchings
from pushout.generators import complete, connected_gnp
from pushout.profiler import (
    IterationRecord,
    POParams,
    RecursionTrace,
    TraceError,
    Tracer,
    check_po,
    minimal_beta,
    record_enumeration,
    search_feasible_params,
    simulate_push_out,
)


def tree(costs, parents, solutions=()):
    recs = [IterationRecord(i, p, c, solution=i in solutions) for i, (c, p) in enumerate(zip(costs, parents))]
    for r in recs:
        if r.parent is not None:
            recs[r.parent].children.append(r.id)
    return RecursionTrace(recs)


def root_two_children():
    return tree([10, 20, 20], [None, 0, 0])


def test_derived_quantities():
    t = root_two_children()
    assert t.tstar == 20
    assert list(t.tbar) == [40, 0, 0]
    assert list(t.n_children) == [2, 0, 0]
    assert t.n_leaves == 2 and t.n_inner == 1 and t.total_cost == 50


def test_po_passes_at_alpha_one_and_a_half():
    assert check_po(root_two_children(), POParams(1.5, 0)).all_pass


def test_po_fails_at_root_for_alpha_five():
    rep = check_po(root_two_children(), POParams(5, 0))
    assert not rep.all_pass and rep.failures == [0]
    assert rep.nodes[0].slack == 40 - 50


def test_push_out_one_step():
    rep = simulate_push_out(root_two_children(), POParams(1.5, 0))
    assert rep.nodes[1].s_received == pytest.approx(5)
    assert rep.nodes[2].s_received == pytest.approx(5)
    assert rep.claim_holds
    assert rep.conservation_error < 1e-12


def test_root_only_trace():
    t = tree([7], [None], solutions={0})
    rep = simulate_push_out(t, POParams(2, 1))
    assert rep.nodes[0].s_received == 0 and rep.nodes[0].retained == 7
    assert t.tstar == 7


def test_degenerate_inner_node_is_flagged_not_fatal():
    t = tree([5, 0, 0], [None, 0, 0])
    rep = simulate_push_out(t, POParams(1.5, 10))
    assert rep.degenerate == [0]
    assert rep.conservation_error < 1e-12


def test_params_validation():
    with pytest.raises(ValueError):
        POParams(1.0, 0)
    with pytest.raises(ValueError):
        POParams(1.5, -0.1)


def test_minimal_beta_is_tight():
    t = tree([30, 2, 2], [None, 0, 0])
    b = minimal_beta(t, 1.5)
    assert b == pytest.approx((45 - 4) / 3 / 2)
    assert check_po(t, POParams(1.5, b)).all_pass
    assert not check_po(t, POParams(1.5, b * 0.99)).all_pass


def test_minimal_beta_zero_when_nothing_needed():
    assert minimal_beta(root_two_children(), 1.5) == 0


def test_minimal_beta_infinite_with_free_leaves():
    assert math.isinf(minimal_beta(tree([4, 0, 0], [None, 0, 0]), 1.5))


def test_search_grid_monotone_and_empty_cases():
    t = root_two_children()
    found = search_feasible_params(t, [1.25, 1.5], [0, 1])
    assert POParams(1.5, 0) in found and POParams(1.25, 0) in found
    assert search_feasible_params(t, [5], [0]) == set()
    with pytest.raises(ValueError):
        search_feasible_params(t, [], [0])


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**5), n=st.integers(2, 7), alpha=st.sampled_from([1.1, 1.25, 1.5, 2.0]), beta=st.floats(0, 20))
def test_feasibility_is_monotone(seed, n, alpha, beta):
    _, t = record_enumeration(enum_matchings, connected_gnp(n, 0.5, seed=seed))
    if check_po(t, POParams(alpha, beta)).all_pass:
        assert check_po(t, POParams(1 + (alpha - 1) / 2, beta)).all_pass
        assert check_po(t, POParams(alpha, beta + 1)).all_pass


def test_trace_of_empty_matching_run_has_one_node():
    _, t = record_enumeration(enum_matchings, MultiGraph(0))
    assert len(t) == 1 and t.tstar == t.cost[0] and t.n_solutions == 1


def test_connected_trace_on_triangle():
    _, t = record_enumeration(enum_connected_from_root, MultiGraph(3, [(0, 1), (1, 2), (0, 2)]), 0)
    # sets {0}, {0,1}, {0,2}, {0,1,2}: 4 leaves under 3 binary inner nodes
    assert len(t) == 7 and t.n_leaves == 4 and t.n_solutions == 4
    assert all(c in (0, 2) for c in t.n_children)


def test_costs_add_up_to_counter_delta():
    g = complete(5)
    before = g.ops
    _, t = record_enumeration(enum_connected_from_root, g, 0)
    assert t.total_cost == g.ops - before


def test_tracer_nesting_errors():
    tr = Tracer()
    with pytest.raises(TraceError):
        tr.exit(0)
    tr.enter(0)
    with pytest.raises(TraceError):
        tr.trace()
    tr.exit(1)
    with pytest.raises(TraceError):
        tr.enter(2)


def test_malformed_traces_rejected():
    with pytest.raises(TraceError):
        RecursionTrace([IterationRecord(0, None, 1), IterationRecord(1, None, 1)])
    with pytest.raises(TraceError):
        RecursionTrace([IterationRecord(0, None, -1)])


def test_jsonl_round_trip():
    _, t = record_enumeration(enum_connected_from_root, complete(4), 0)
    buf = io.StringIO()
    t.to_jsonl(buf)
    back = RecursionTrace.from_jsonl(buf.getvalue().splitlines())
    assert list(back.cost) == list(t.cost) and list(back.parent) == list(t.parent)
    assert back.n_solutions == t.n_solutions


def test_csv_report_columns():
    rep = simulate_push_out(root_two_children(), POParams(1.5, 0))
    buf = io.StringIO()
    rep.to_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "node_id,t,tbar,children,slack,s_received,retained"
    assert len(lines) == 4
    assert lines[2].split(",")[5] == "5"
