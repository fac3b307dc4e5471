"""Recursion-tree recording and push-out amortization checks.

A :class:`Tracer` is handed to an enumerator, which calls :meth:`Tracer.enter`
and :meth:`Tracer.exit` around every iteration with the graph's operation
counter.  The cost of an iteration is the counter delta spent while that
iteration was the innermost active one, so children's work is excluded and
output work (sinks never touch the counter) is excluded automatically.

Given a trace and constants ``alpha > 1``, ``beta >= 0``:

* :func:`check_po` tests, at every inner iteration X,
  ``tbar(X) >= alpha * T(X) - beta * (|C(X)| + 1) * T*``;
* :func:`simulate_push_out` moves cost from parents to children top-down,
  each node keeping ``beta / (alpha - 1) * (|C(X)| + 1) * T*`` and passing the
  rest on in proportion to the children's own costs, then checks that no node
  receives more than ``T(X) / (alpha - 1)``.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import IO, Any, Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "TraceError",
    "IterationRecord",
    "RecursionTrace",
    "Tracer",
    "record_enumeration",
    "POParams",
    "NodeCheck",
    "POReport",
    "check_po",
    "simulate_push_out",
    "minimal_beta",
    "search_feasible_params",
]

REL_TOL = 1e-9


class TraceError(ValueError):
    pass


@dataclass
class IterationRecord:
    id: int
    parent: int | None
    cost: int = 0
    children: list[int] = field(default_factory=list)
    solution: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.children


class RecursionTrace:
    """Tree of iteration records, ids in preorder (a parent precedes its children)."""

    def __init__(self, records: Sequence[IterationRecord]):
        self.records = list(records)
        self._validate()
        n = len(self.records)
        self.cost = np.array([r.cost for r in self.records], dtype=np.float64)
        self.parent = np.array(
            [-1 if r.parent is None else r.parent for r in self.records], dtype=np.int64
        )
        has_parent = self.parent >= 0
        self.n_children = np.bincount(self.parent[has_parent], minlength=n).astype(np.int64)
        self.tbar = np.bincount(
            self.parent[has_parent], weights=self.cost[has_parent], minlength=n
        ).astype(np.float64)
        leaves = self.n_children == 0
        self.tstar = float(self.cost[leaves].max()) if n else 0.0

    def _validate(self) -> None:
        roots = 0
        for i, r in enumerate(self.records):
            if r.id != i:
                raise TraceError(f"record {i} has id {r.id}; ids must be 0..n-1 in order")
            if r.cost < 0:
                raise TraceError(f"negative cost at node {i}")
            if r.parent is None:
                roots += 1
            elif not 0 <= r.parent < i:
                raise TraceError(f"node {i} has parent {r.parent}; parents must precede children")
            elif i not in self.records[r.parent].children:
                raise TraceError(f"node {i} missing from its parent's child list")
            for c in r.children:
                if not 0 <= c < len(self.records) or self.records[c].parent != i:
                    raise TraceError(f"child {c} of node {i} does not point back")
        if self.records and roots != 1:
            raise TraceError(f"expected exactly one root, found {roots}")

    def __len__(self) -> int:
        return len(self.records)

    @property
    def n_leaves(self) -> int:
        return int((self.n_children == 0).sum())

    @property
    def n_inner(self) -> int:
        return int((self.n_children > 0).sum())

    @property
    def n_solutions(self) -> int:
        return sum(1 for r in self.records if r.solution)

    @property
    def total_cost(self) -> int:
        return int(sum(r.cost for r in self.records))

    def depth(self) -> np.ndarray:
        d = np.zeros(len(self.records), dtype=np.int64)
        for i in range(1, len(self.records)):
            p = self.parent[i]
            if p >= 0:
                d[i] = d[p] + 1
        return d

    # -- JSON lines -----------------------------------------------------

    def to_jsonl(self, fh: IO[str]) -> None:
        for r in self.records:
            row = {"id": r.id, "parent": r.parent, "cost": r.cost, "leaf": r.is_leaf, "sol": r.solution}
            fh.write(json.dumps(row, separators=(",", ":")))
            fh.write("\n")

    @classmethod
    def from_jsonl(cls, lines: Iterable[str]) -> "RecursionTrace":
        rows = [json.loads(line) for line in lines if line.strip()]
        rows.sort(key=lambda row: row["id"])
        records = [
            IterationRecord(id=int(row["id"]), parent=row["parent"], cost=int(row["cost"]), solution=bool(row["sol"]))
            for row in rows
        ]
        for r in records:
            if r.parent is not None:
                if not 0 <= r.parent < len(records):
                    raise TraceError(f"node {r.id} has unknown parent {r.parent}")
                records[r.parent].children.append(r.id)
        trace = cls(records)
        for row, r in zip(rows, records):
            if bool(row.get("leaf", r.is_leaf)) != r.is_leaf:
                raise TraceError(f"leaf flag of node {r.id} disagrees with the tree")
        return trace

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            self.to_jsonl(fh)

    @classmethod
    def load(cls, path: str) -> "RecursionTrace":
        with open(path) as fh:
            return cls.from_jsonl(fh)


class Tracer:
    """Builds a :class:`RecursionTrace` from enter/exit callbacks."""

    def __init__(self) -> None:
        self.records: list[IterationRecord] = []
        self._stack: list[int] = []
        self._last = 0

    def enter(self, ops: int) -> None:
        if self._stack:
            self.records[self._stack[-1]].cost += ops - self._last
            parent = self._stack[-1]
        else:
            if self.records:
                raise TraceError("second root iteration")
            parent = None
        node = len(self.records)
        self.records.append(IterationRecord(node, parent))
        if parent is not None:
            self.records[parent].children.append(node)
        self._stack.append(node)
        self._last = ops

    def exit(self, ops: int) -> None:
        if not self._stack:
            raise TraceError("exit without matching enter")
        self.records[self._stack.pop()].cost += ops - self._last
        self._last = ops

    def solution(self) -> None:
        if not self._stack:
            raise TraceError("solution reported outside an iteration")
        self.records[self._stack[-1]].solution = True

    @property
    def open(self) -> bool:
        return bool(self._stack)

    def trace(self) -> RecursionTrace:
        if self._stack:
            raise TraceError(f"{len(self._stack)} iterations still open")
        return RecursionTrace(self.records)


def record_enumeration(enumerate_fn: Callable[..., Any], *args: Any, **kwargs: Any) -> tuple[Any, RecursionTrace]:
    """Run ``enumerate_fn(*args, tracer=..., **kwargs)`` and return (result, trace)."""
    tracer = Tracer()
    result = enumerate_fn(*args, tracer=tracer, **kwargs)
    return result, tracer.trace()


# ----------------------------------------------------------------------
# PO condition and push-out charging
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class POParams:
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not self.alpha > 1:
            raise ValueError(f"alpha must exceed 1, got {self.alpha}")
        if not self.beta >= 0:
            raise ValueError(f"beta must be non-negative, got {self.beta}")


@dataclass
class NodeCheck:
    node: int
    t: float
    tbar: float
    children: int
    slack: float
    passed: bool
    s_received: float = float("nan")
    retained: float = float("nan")


@dataclass
class POReport:
    params: POParams
    tstar: float
    nodes: list[NodeCheck]
    all_pass: bool
    failures: list[int]
    charged: bool = False
    degenerate: list[int] = field(default_factory=list)
    claim_holds: bool | None = None
    max_claim_ratio: float = float("nan")
    conservation_error: float = float("nan")
    max_retained_over_tstar: float = float("nan")

    def to_csv(self, fh: IO[str]) -> None:
        w = csv.writer(fh)
        w.writerow(["node_id", "t", "tbar", "children", "slack", "s_received", "retained"])
        for nc in self.nodes:
            w.writerow([nc.node, _num(nc.t), _num(nc.tbar), nc.children, _num(nc.slack),
                        _num(nc.s_received), _num(nc.retained)])

    def summary(self) -> str:
        lines = [
            f"alpha={self.params.alpha:g} beta={self.params.beta:g} T*={self.tstar:g}",
            f"nodes={len(self.nodes)} inner={sum(1 for n in self.nodes if n.children)} "
            f"po={'pass' if self.all_pass else 'FAIL'} failures={len(self.failures)}",
        ]
        if self.charged:
            lines.append(
                f"claim={'holds' if self.claim_holds else 'VIOLATED'} "
                f"max S(X)(alpha-1)/T(X)={self.max_claim_ratio:.6g} "
                f"conservation_rel_err={self.conservation_error:.3g} "
                f"max retained/T*={self.max_retained_over_tstar:.6g} degenerate={len(self.degenerate)}"
            )
        return "\n".join(lines)


def _num(x: float) -> str:
    if x != x:
        return ""
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _slack(trace: RecursionTrace, params: POParams) -> np.ndarray:
    return trace.tbar - (params.alpha * trace.cost - params.beta * (trace.n_children + 1) * trace.tstar)


def check_po(trace: RecursionTrace, params: POParams) -> POReport:
    """Evaluate the PO inequality at every inner node; leaves pass vacuously."""
    slack = _slack(trace, params)
    inner = trace.n_children > 0
    scale = np.maximum(1.0, params.alpha * trace.cost)
    ok = ~inner | (slack >= -REL_TOL * scale)
    nodes = [
        NodeCheck(i, float(trace.cost[i]), float(trace.tbar[i]), int(trace.n_children[i]),
                  float(slack[i]) if inner[i] else 0.0, bool(ok[i]))
        for i in range(len(trace))
    ]
    failures = [int(i) for i in np.flatnonzero(~ok)]
    return POReport(params, trace.tstar, nodes, not failures, failures)


def simulate_push_out(trace: RecursionTrace, params: POParams) -> POReport:
    """Charge cost top-down by the push-out rule and verify the received-charge bound.

    Inner nodes whose children all cost 0 cannot split their charge; they
    keep it, are listed in ``degenerate``, and are left out of the bound check
    for their children.
    """
    report = check_po(trace, params)
    n = len(trace)
    alpha, beta = params.alpha, params.beta
    keep = beta / (alpha - 1.0) * (trace.n_children + 1) * trace.tstar
    inner = trace.n_children > 0
    degenerate = inner & (trace.tbar <= 0)

    received = np.zeros(n)
    retained = np.zeros(n)
    pushed = np.zeros(n)
    depth = trace.depth()
    parent = trace.parent
    for level in range(int(depth.max()) + 1 if n else 0):
        idx = np.flatnonzero(depth == level)
        if level > 0:
            p = parent[idx]
            share = np.where(trace.tbar[p] > 0, trace.cost[idx] / np.where(trace.tbar[p] > 0, trace.tbar[p], 1.0), 0.0)
            received[idx] = pushed[p] * share
        total = received[idx] + trace.cost[idx]
        pushes = inner[idx] & ~degenerate[idx]
        pushed[idx] = np.where(pushes, total - keep[idx], 0.0)
        retained[idx] = np.where(pushes, keep[idx], total)

    bound = trace.cost / (alpha - 1.0)
    checked = np.ones(n, dtype=bool)
    checked[0] = True
    if n:
        has_parent = parent >= 0
        checked[has_parent] = ~degenerate[parent[has_parent]]
    tol = REL_TOL * np.maximum(1.0, bound)
    claim_ok = np.all((received <= bound + tol) | ~checked)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(trace.cost > 0, received * (alpha - 1.0) / np.where(trace.cost > 0, trace.cost, 1.0), 0.0)
    total_t = float(trace.cost.sum())
    cons = abs(float(retained.sum()) - total_t) / max(1.0, total_t)

    for nc in report.nodes:
        nc.s_received = float(received[nc.node])
        nc.retained = float(retained[nc.node])
    report.charged = True
    report.degenerate = [int(i) for i in np.flatnonzero(degenerate)]
    report.claim_holds = bool(claim_ok)
    report.max_claim_ratio = float(ratio[checked].max()) if n else 0.0
    report.conservation_error = cons
    report.max_retained_over_tstar = float(retained.max() / trace.tstar) if n and trace.tstar > 0 else float("nan")
    return report


def minimal_beta(trace: RecursionTrace, alpha: float) -> float:
    """Smallest beta >= 0 for which every inner node satisfies the PO condition.

    Returns ``inf`` when some inner node needs a positive beta but ``T*`` is 0.
    """
    inner = trace.n_children > 0
    if not inner.any():
        return 0.0
    need = alpha * trace.cost[inner] - trace.tbar[inner]
    worst = float(np.max(need / (trace.n_children[inner] + 1)))
    if worst <= 0:
        return 0.0
    if trace.tstar <= 0:
        return float("inf")
    return worst / trace.tstar


def search_feasible_params(
    trace: RecursionTrace, alphas: Iterable[float], betas: Iterable[float]
) -> set[POParams]:
    """All grid points (alpha, beta) at which :func:`check_po` passes."""
    alphas = [a for a in alphas]
    betas = [b for b in betas]
    if not alphas or not betas:
        raise ValueError("empty parameter grid")
    out = set()
    for a in alphas:
        for b in betas:
            p = POParams(a, b)
            if check_po(trace, p).all_pass:
                out.add(p)
    return out
