"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from ribbonbound.freegroup import Letter
from ribbonbound.model import Band, RibbonCode
from ribbonbound.partitions import DiscPartition


def letters(max_disc: int = 5):
    return st.builds(
        Letter, disc=st.integers(1, max_disc), sign=st.sampled_from((1, -1))
    )


def words(max_disc: int = 5, max_len: int = 8):
    return st.lists(letters(max_disc), max_size=max_len).map(tuple)


@st.composite
def codes(draw, max_d: int = 5, max_b: int = 5, max_len: int = 4):
    d = draw(st.integers(1, max_d))
    b = draw(st.integers(0, max_b))
    bands = tuple(
        Band(
            f"B{i + 1}",
            draw(st.integers(1, d)),
            draw(st.integers(1, d)),
            draw(words(max_disc=d, max_len=max_len)),
        )
        for i in range(b)
    )
    return RibbonCode(d, bands)


@st.composite
def partitions(draw, d: int):
    labels = [draw(st.integers(0, d - 1)) for _ in range(d)]
    blocks: dict[int, list[int]] = {}
    for disc, label in enumerate(labels, start=1):
        blocks.setdefault(label, []).append(disc)
    return DiscPartition.from_blocks(d, blocks.values())


@st.composite
def codes_with_partitions(draw, max_d: int = 5, max_b: int = 5, max_len: int = 4):
    code = draw(codes(max_d=max_d, max_b=max_b, max_len=max_len))
    return code, draw(partitions(code.d))
