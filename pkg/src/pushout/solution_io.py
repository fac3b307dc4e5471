"""Solution sinks and the difference-encoded output stream.

Enumerators hand each solution to a sink as a list of ids.  A
:class:`DeltaSink` writes the first solution in full and every later one as
its difference from the one emitted just before it:

* set solutions (matchings, vertex sets, spanning trees) as additions and
  removals;
* sequence solutions (elimination orderings) as the length of the shared
  prefix to keep plus the new suffix.

Text form, one solution per line::

    = 1 2 3        full solution
    ~ 2 7 5        keep 2 leading ids, then append 7 5
    + 4 / - 1      add 4, remove 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable, Protocol, Sequence, Union

__all__ = [
    "Full",
    "SeqDelta",
    "SetDelta",
    "DeltaRecord",
    "DeltaError",
    "SolutionSink",
    "CountingSink",
    "CollectingSink",
    "DeltaSink",
    "encode",
    "decode",
    "format_record",
    "parse_record",
    "parse_stream",
    "record_size",
]


@dataclass(frozen=True)
class Full:
    ids: tuple[int, ...]


@dataclass(frozen=True)
class SeqDelta:
    keep: int
    append: tuple[int, ...]


@dataclass(frozen=True)
class SetDelta:
    add: tuple[int, ...]
    remove: tuple[int, ...]


DeltaRecord = Union[Full, SeqDelta, SetDelta]


class DeltaError(ValueError):
    pass


class SolutionSink(Protocol):
    count: int

    def emit(self, solution: Sequence[int]) -> None: ...


class CountingSink:
    def __init__(self) -> None:
        self.count = 0

    def emit(self, solution: Sequence[int]) -> None:
        self.count += 1


class CollectingSink:
    """Keeps a copy of every solution; for tests and small inputs."""

    def __init__(self) -> None:
        self.count = 0
        self.solutions: list[tuple[int, ...]] = []

    def emit(self, solution: Sequence[int]) -> None:
        self.count += 1
        self.solutions.append(tuple(solution))

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(s) for s in self.solutions]


def _delta(prev: Sequence[int] | None, cur: Sequence[int], sequence: bool) -> DeltaRecord:
    if prev is None:
        return Full(tuple(cur) if sequence else tuple(sorted(cur)))
    if sequence:
        k = 0
        limit = min(len(prev), len(cur))
        while k < limit and prev[k] == cur[k]:
            k += 1
        return SeqDelta(k, tuple(cur[k:]))
    old, new = set(prev), set(cur)
    return SetDelta(tuple(sorted(new - old)), tuple(sorted(old - new)))


def record_size(rec: DeltaRecord, prev_len: int = 0) -> int:
    """Number of ids a record changes: its length for Full, the difference otherwise."""
    if isinstance(rec, Full):
        return len(rec.ids)
    if isinstance(rec, SeqDelta):
        return (prev_len - rec.keep) + len(rec.append)
    return len(rec.add) + len(rec.remove)


@dataclass
class DeltaSink:
    """Difference-encoding sink.

    ``records`` keeps the encoded stream when ``keep_records`` is true;
    ``stream`` receives the text form.  ``delta_size`` accumulates the size
    of every record after the first, ``first_size`` the size of the first.
    """

    sequence: bool = False
    stream: IO[str] | None = None
    keep_records: bool = True
    count: int = 0
    delta_size: int = 0
    first_size: int = 0
    records: list[DeltaRecord] = field(default_factory=list)
    _prev: tuple[int, ...] | None = None

    def emit(self, solution: Sequence[int]) -> None:
        cur = tuple(solution)
        rec = _delta(self._prev, cur, self.sequence)
        if self._prev is None:
            self.first_size = len(cur)
        else:
            self.delta_size += record_size(rec, len(self._prev))
        self._prev = cur
        self.count += 1
        if self.keep_records:
            self.records.append(rec)
        if self.stream is not None:
            self.stream.write(format_record(rec))
            self.stream.write("\n")


def encode(solutions: Iterable[Sequence[int]], sequence: bool = False) -> list[DeltaRecord]:
    sink = DeltaSink(sequence=sequence)
    for s in solutions:
        sink.emit(s)
    return sink.records


def decode(records: Iterable[DeltaRecord]) -> list[tuple[int, ...]]:
    """Rebuild full solutions.  Set solutions come back sorted."""
    out: list[tuple[int, ...]] = []
    cur: list[int] | None = None
    for rec in records:
        if isinstance(rec, Full):
            cur = list(rec.ids)
        elif cur is None:
            raise DeltaError("delta record before any full record")
        elif isinstance(rec, SeqDelta):
            if not 0 <= rec.keep <= len(cur):
                raise DeltaError(f"cannot keep {rec.keep} of {len(cur)} ids")
            cur = cur[: rec.keep] + list(rec.append)
        else:
            held = set(cur)
            for x in rec.remove:
                if x not in held:
                    raise DeltaError(f"removal of absent id {x}")
                held.discard(x)
            held.update(rec.add)
            cur = sorted(held)
        out.append(tuple(cur))
    return out


def format_record(rec: DeltaRecord) -> str:
    if isinstance(rec, Full):
        return " ".join(["="] + [str(x) for x in rec.ids])
    if isinstance(rec, SeqDelta):
        return " ".join(["~", str(rec.keep)] + [str(x) for x in rec.append])
    return " ".join(["+"] + [str(x) for x in rec.add] + ["/", "-"] + [str(x) for x in rec.remove])


def parse_record(line: str) -> DeltaRecord:
    toks = line.split()
    if not toks:
        raise DeltaError("empty record")
    try:
        if toks[0] == "=":
            return Full(tuple(int(t) for t in toks[1:]))
        if toks[0] == "~":
            if len(toks) < 2:
                raise DeltaError("missing prefix length")
            return SeqDelta(int(toks[1]), tuple(int(t) for t in toks[2:]))
        if toks[0] == "+":
            slash = toks.index("/")
            if slash + 1 >= len(toks) or toks[slash + 1] != "-":
                raise DeltaError(f"malformed set delta: {line!r}")
            return SetDelta(
                tuple(int(t) for t in toks[1:slash]),
                tuple(int(t) for t in toks[slash + 2 :]),
            )
    except ValueError as exc:
        if isinstance(exc, DeltaError):
            raise
        raise DeltaError(f"malformed record: {line!r}") from None
    raise DeltaError(f"unknown record tag {toks[0]!r}")


def parse_stream(text: str) -> list[DeltaRecord]:
    return [parse_record(line) for line in text.splitlines() if line.strip()]
