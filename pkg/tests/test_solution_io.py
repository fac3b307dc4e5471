import io
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pushout.solution_io import (
    CollectingSink,
    CountingSink,
    DeltaError,
    DeltaSink,
    Full,
    SeqDelta,
    SetDelta,
    decode,
    encode,
    format_record,
    parse_record,
    parse_stream,
    record_size,
)


def test_set_stream_example():
    assert encode([[1, 2], [1, 3]]) == [Full((1, 2)), SetDelta((3,), (2,))]


def test_single_emission_is_one_full_record():
    assert encode([[4, 1]]) == [Full((1, 4))]


def test_sequence_stream_shares_prefix():
    recs = encode([[3, 1, 2], [3, 2, 1], [1, 3, 2]], sequence=True)
    assert recs == [Full((3, 1, 2)), SeqDelta(1, (2, 1)), SeqDelta(0, (1, 3, 2))]


def test_sequence_order_is_kept():
    assert decode(encode([[2, 0, 1]], sequence=True)) == [(2, 0, 1)]


def test_delta_before_full_is_rejected():
    with pytest.raises(DeltaError):
        decode([SetDelta((1,), ())])


def test_removing_absent_id_is_rejected():
    with pytest.raises(DeltaError):
        decode([Full((1,)), SetDelta((), (5,))])


def test_keep_longer_than_prefix_is_rejected():
    with pytest.raises(DeltaError):
        decode([Full((1,)), SeqDelta(3, ())])


@pytest.mark.parametrize("line", ["", "? 1", "~", "+ 1 2", "+ 1 / 2", "= a"])
def test_malformed_text_records(line):
    with pytest.raises(DeltaError):
        parse_record(line)


def test_text_forms():
    assert format_record(Full((1, 2))) == "= 1 2"
    assert format_record(SeqDelta(2, (7, 5))) == "~ 2 7 5"
    assert format_record(SetDelta((4,), (1,))) == "+ 4 / - 1"
    assert format_record(SetDelta((), ())) == "+ / -"
    assert format_record(Full(())) == "="


def test_record_sizes():
    assert record_size(Full((1, 2, 3))) == 3
    assert record_size(SetDelta((1,), (2, 3))) == 3
    assert record_size(SeqDelta(1, (9,)), prev_len=3) == 3


def test_delta_sink_tracks_sizes_and_stream():
    out = io.StringIO()
    sink = DeltaSink(stream=out)
    for s in ([0, 1], [0, 2], [2]):
        sink.emit(s)
    assert sink.count == 3 and sink.first_size == 2 and sink.delta_size == 2 + 1
    assert out.getvalue() == "= 0 1\n+ 2 / - 1\n+ / - 0\n"
    assert decode(parse_stream(out.getvalue())) == [(0, 1), (0, 2), (2,)]


def test_counting_and_collecting_sinks():
    c, k = CountingSink(), CollectingSink()
    for s in ([1], [], [2, 3]):
        c.emit(s)
        k.emit(s)
    assert c.count == k.count == 3
    assert k.as_sets() == [frozenset({1}), frozenset(), frozenset({2, 3})]


def random_stream(rng, sequence):
    out = []
    for _ in range(rng.randint(0, 30)):
        ids = rng.sample(range(40), rng.randint(0, 10))
        out.append(ids if sequence else sorted(ids))
    return out


def test_round_trip_on_1000_random_streams():
    rng = random.Random(2024)
    for i in range(1000):
        sequence = i % 2 == 1
        stream = random_stream(rng, sequence)
        recs = encode(stream, sequence=sequence)
        assert decode(recs) == [tuple(s) for s in stream]
        text = "\n".join(format_record(r) for r in recs)
        assert decode(parse_stream(text)) == [tuple(s) for s in stream]


@given(st.lists(st.lists(st.integers(0, 30), unique=True, max_size=8), max_size=20), st.booleans())
def test_round_trip_property(stream, sequence):
    want = [tuple(s) if sequence else tuple(sorted(s)) for s in stream]
    assert decode(encode(stream, sequence=sequence)) == want
