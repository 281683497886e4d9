import pytest
from hypothesis import given
from hypothesis import strategies as st

from ribbonbound.freegroup import word_from_ints
from ribbonbound.model import Band
from ribbonbound.partitions import DiscPartition
from ribbonbound.reduction import (
    FREE_REDUCE,
    STRIP_END,
    STRIP_START,
    cancel_band,
    cancel_verdict,
    reduce_code,
    render_trace,
    replay_trace,
)

from strategies import codes_with_partitions, partitions, words

PAIRED = DiscPartition.from_blocks(4, [[1, 3], [2, 4]])
DISCRETE4 = DiscPartition.discrete(4)


def test_cancel_band_strip_start():
    trace = cancel_band(Band("B1", 1, 2, word_from_ints(3)), PAIRED)
    assert trace.cancellable
    assert [s.kind for s in trace.steps] == [STRIP_START]
    assert trace.start_word == word_from_ints(1)
    assert trace.final_word == ()


def test_cancel_band_double_strip_end():
    trace = cancel_band(Band("B3", 3, 4, word_from_ints(4, 2)), PAIRED)
    assert trace.cancellable
    assert [s.kind for s in trace.steps] == [STRIP_END, STRIP_END]
    assert [s.positions for s in trace.steps] == [(1,), (0,)]


def test_cancel_band_stuck_under_discrete():
    trace = cancel_band(Band("B1", 1, 2, word_from_ints(3)), DISCRETE4)
    assert not trace.cancellable
    assert trace.steps == ()
    assert trace.final_word == word_from_ints(3)


def test_cancel_band_free_reduce_then_strip():
    # +2 -3 +3 collapses to +2, which strips at the start foot.
    trace = cancel_band(Band("B", 2, 1, word_from_ints(2, -3, 3)), DISCRETE4)
    assert trace.cancellable
    assert [s.kind for s in trace.steps] == [FREE_REDUCE, STRIP_START]
    assert trace.steps[0].positions == (1, 2)


def test_free_reduce_needs_class_identification():
    # +1 -3 only cancels once 1 and 3 share a class.
    band = Band("B", 2, 4, word_from_ints(1, -3))
    assert not cancel_band(band, DISCRETE4).cancellable
    trace = cancel_band(band, PAIRED)
    assert trace.cancellable
    assert [s.kind for s in trace.steps] == [FREE_REDUCE]


@given(words(max_disc=1, max_len=6), st.integers(0, 3))
def test_one_disc_band_always_cancels(word, _):
    band = Band("B", 1, 1, word)
    trace = cancel_band(band, DiscPartition.one_block(1))
    assert trace.cancellable


def test_reduce_code_example(example_code):
    verdicts = [t.cancellable for t in reduce_code(example_code, PAIRED)]
    assert verdicts == [True, True, True]
    verdicts = [t.cancellable for t in reduce_code(example_code, DISCRETE4)]
    assert verdicts == [False, False, False]


@given(codes_with_partitions())
def test_one_block_partition_cancels_everything(code_and_partition):
    code, _ = code_and_partition
    for trace in reduce_code(code, DiscPartition.one_block(code.d)):
        assert trace.cancellable


def test_reduce_code_rejects_mismatched_partition(example_code):
    with pytest.raises(ValueError):
        reduce_code(example_code, DiscPartition.discrete(3))


@given(codes_with_partitions())
def test_traces_replay_and_terminate(code_and_partition):
    code, partition = code_and_partition
    for band, trace in zip(code.bands, reduce_code(code, partition)):
        assert replay_trace(trace) == trace.final_word
        assert trace.cancellable == (trace.final_word == ())
        # Every step deletes at least one letter.
        assert len(trace.steps) <= len(band.word)


@given(codes_with_partitions())
def test_verdict_twin_agrees_with_traces(code_and_partition):
    code, partition = code_and_partition
    classes = partition.class_map().classes
    for band, trace in zip(code.bands, reduce_code(code, partition)):
        ints = tuple(lt.sign * classes[lt.disc - 1] for lt in band.word)
        assert (
            cancel_verdict(ints, classes[band.start_disc - 1], classes[band.end_disc - 1])
            == trace.cancellable
        )


@given(codes_with_partitions(max_d=4, max_b=3, max_len=3), st.data())
def test_coarsening_preserves_cancellability(code_and_partition, data):
    code, partition = code_and_partition
    if partition.n_blocks < 2:
        coarser = partition
    else:
        i = data.draw(st.integers(0, partition.n_blocks - 2))
        j = data.draw(st.integers(i + 1, partition.n_blocks - 1))
        coarser = partition.merge(i, j)
    for band in code.bands:
        if cancel_band(band, partition).cancellable:
            assert cancel_band(band, coarser).cancellable


def test_render_trace_format():
    trace = cancel_band(Band("B3", 3, 4, word_from_ints(4, 2)), PAIRED)
    assert render_trace(trace).splitlines() == [
        "B3 strip-end pos=1 letter=+2",
        "B3 strip-end pos=0 letter=+2",
        "B3 verdict=cancellable residual=",
    ]
    stuck = cancel_band(Band("B1", 1, 2, word_from_ints(3)), DISCRETE4)
    assert render_trace(stuck) == "B1 verdict=stuck residual=+3"
    pair = cancel_band(Band("B", 1, 2, word_from_ints(4, 3, -3, 4)), DISCRETE4)
    assert render_trace(pair).splitlines()[0] == "B free-reduce pos=1,2 letter=+3,-3"


def test_replay_rejects_corrupted_trace():
    trace = cancel_band(Band("B1", 1, 2, word_from_ints(3)), PAIRED)
    broken = type(trace)(
        band_id=trace.band_id,
        start_word=word_from_ints(2),  # wrong start word
        steps=trace.steps,
        final_word=trace.final_word,
        cancellable=trace.cancellable,
    )
    with pytest.raises(ValueError):
        replay_trace(broken)


def test_cancel_band_domain_error():
    band = Band("B", 1, 2, word_from_ints(5))
    with pytest.raises(ValueError):
        cancel_band(band, DISCRETE4)


@given(partitions(4))
def test_empty_word_always_cancels(partition):
    assert cancel_band(Band("B", 1, 4, ()), partition).cancellable
