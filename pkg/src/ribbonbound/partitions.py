"""Partitions of the disc set {1..d} and their enumeration.

A trivial tube between two discs identifies their meridians, so a set
of tubings is recorded as a partition of the disc indices.  Partitions
are kept canonical: members ascending within a block, blocks ordered by
least member.  ``enumerate_partitions`` streams every partition in
decreasing block count, and within one block count in ascending
canonical order, which is what makes first-hit search results both
optimal and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .freegroup import ClassMap

__all__ = ["DiscPartition", "enumerate_partitions"]


@dataclass(frozen=True)
class DiscPartition:
    """A partition of {1..d} in canonical block order."""

    d: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"disc count must be >= 1, got {self.d}")
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            if any(b <= a for a, b in zip(block, block[1:])):
                raise ValueError(f"block {block} is not strictly ascending")
            seen.update(block)
        total = sum(len(block) for block in self.blocks)
        if total != self.d or seen != set(range(1, self.d + 1)):
            raise ValueError(f"blocks must cover 1..{self.d} exactly once")
        mins = [block[0] for block in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks must be ordered by least member")

    @classmethod
    def from_blocks(cls, d: int, blocks: Iterable[Iterable[int]]) -> DiscPartition:
        """Canonicalize arbitrary block order and build a partition."""
        canon = tuple(sorted(tuple(sorted(block)) for block in blocks))
        return cls(d, canon)

    @classmethod
    def discrete(cls, d: int) -> DiscPartition:
        return cls(d, tuple((i,) for i in range(1, d + 1)))

    @classmethod
    def one_block(cls, d: int) -> DiscPartition:
        return cls(d, (tuple(range(1, d + 1)),))

    @classmethod
    def parse(cls, text: str, d: int) -> DiscPartition:
        """Parse the ``1,3|2,4`` flag syntax against a known disc count."""
        blocks = []
        for chunk in text.split("|"):
            members = []
            for token in chunk.split(","):
                token = token.strip()
                if not token.isdigit():
                    raise ValueError(
                        f"bad partition member {token!r} (expected a disc index)"
                    )
                members.append(int(token))
            blocks.append(members)
        return cls.from_blocks(d, blocks)

    def format(self) -> str:
        return "|".join(",".join(str(m) for m in block) for block in self.blocks)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def block_index_map(self) -> dict[int, int]:
        """Map each disc to the position of its block in canonical order."""
        return {disc: i for i, block in enumerate(self.blocks) for disc in block}

    def class_map(self) -> ClassMap:
        classes = [0] * self.d
        for block in self.blocks:
            for disc in block:
                classes[disc - 1] = block[0]
        return ClassMap(tuple(classes))

    def merge(self, i: int, j: int) -> DiscPartition:
        """Coarsen by joining the blocks at canonical positions i and j."""
        if i == j:
            raise ValueError("cannot merge a block with itself")
        merged = self.blocks[i] + self.blocks[j]
        rest = [b for k, b in enumerate(self.blocks) if k not in (i, j)]
        return DiscPartition.from_blocks(self.d, rest + [list(merged)])

    def refines(self, other: DiscPartition) -> bool:
        """True when every block of self sits inside one block of other."""
        if other.d != self.d:
            raise ValueError(f"partitions of different disc sets: {self.d} vs {other.d}")
        owner = other.block_index_map()
        return all(len({owner[m] for m in block}) == 1 for block in self.blocks)


def _subsets_lex(pool: tuple[int, ...], max_size: int) -> Iterator[tuple[int, ...]]:
    # Ascending-tuple subsets of `pool` in lexicographic order with a
    # prefix preceding its extensions: (), (2,), (2,3), (2,4), (3,), ...
    def rec(start: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) < max_size:
            for i in range(start, len(pool)):
                yield from rec(i + 1, prefix + (pool[i],))

    yield from rec(0, ())


def _partitions_with_block_count(
    elems: tuple[int, ...], k: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    # Canonical-order partitions of `elems` into exactly k blocks.  The
    # block of the least element is chosen first, in ascending tuple
    # order, which makes the whole stream ascend lexicographically.
    if k == 1:
        yield (elems,)
        return
    if k == len(elems):
        yield tuple((e,) for e in elems)
        return
    first, rest = elems[0], elems[1:]
    for extra in _subsets_lex(rest, len(elems) - k):
        taken = set(extra)
        remaining = tuple(x for x in rest if x not in taken)
        head = (first, *extra)
        for tail in _partitions_with_block_count(remaining, k - 1):
            yield (head, *tail)


def enumerate_partitions(d: int) -> Iterator[DiscPartition]:
    """Yield every partition of {1..d} exactly once.

    Order contract: block counts descend from d (the discrete partition)
    to 1 (the one-block partition); within a fixed block count the
    canonical encodings ascend.  A search that takes the first
    qualifying partition therefore gets the maximum block count, with
    ties broken toward the smallest canonical encoding.
    """
    if d < 1:
        raise ValueError(f"disc count must be >= 1, got {d}")
    elems = tuple(range(1, d + 1))
    for k in range(d, 0, -1):
        for blocks in _partitions_with_block_count(elems, k):
            yield DiscPartition(d, blocks)
