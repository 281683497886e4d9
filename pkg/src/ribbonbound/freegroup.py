"""Words in the free group on disc meridians.

Each ribbon singularity of a disc-band code is recorded as one signed
letter: the index of the disc the band runs through, together with a
sign.  The ordered singularities of a band then form a word in the free
group generated by one meridian per disc.  Tubing discs together
identifies their meridians; ``ClassMap`` applies that identification to
a word, and ``free_reduce`` computes the canonical representative of
the word's homotopy class.

All values here are immutable and all operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Letter",
    "Word",
    "ClassMap",
    "word_from_ints",
    "word_to_ints",
    "parse_letter_token",
    "parse_word",
    "format_word",
    "apply_class_map",
    "free_reduce",
    "is_identity",
]


@dataclass(frozen=True, order=True)
class Letter:
    """A signed occurrence of one meridian generator."""

    disc: int
    sign: int

    def __post_init__(self):
        if self.disc < 1:
            raise ValueError(f"letter disc must be >= 1, got {self.disc}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> Letter:
        return Letter(self.disc, -self.sign)

    @classmethod
    def from_int(cls, value: int) -> Letter:
        """Decode a nonzero signed integer: -3 is the inverse of meridian 3."""
        if value == 0:
            raise ValueError("0 does not encode a letter")
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        return self.disc * self.sign

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + str(self.disc)


# A word is a finite ordered sequence of letters; the empty tuple is the
# identity.  Words are plain tuples so they hash and compare structurally.
Word = tuple[Letter, ...]

_LETTER_TOKEN = re.compile(r"[+-][0-9]+")


def word_from_ints(*values: int) -> Word:
    """Build a word from signed integers, e.g. ``word_from_ints(4, 2)``."""
    return tuple(Letter.from_int(v) for v in values)


def word_to_ints(word: Iterable[Letter]) -> tuple[int, ...]:
    return tuple(letter.to_int() for letter in word)


def parse_letter_token(token: str) -> Letter:
    """Parse one ``+k`` / ``-k`` token; the sign is mandatory."""
    if not _LETTER_TOKEN.fullmatch(token):
        raise ValueError(f"bad letter token {token!r}: expected '+k' or '-k'")
    sign = 1 if token[0] == "+" else -1
    return Letter(int(token[1:]), sign)


def parse_word(text: str) -> Word:
    """Parse a whitespace-separated sequence of letter tokens (may be empty)."""
    return tuple(parse_letter_token(token) for token in text.split())


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(str(letter) for letter in word)


@dataclass(frozen=True)
class ClassMap:
    """Total map from disc indices 1..d to class ids.

    Two discs get the same class id exactly when they lie in the same
    block of the originating partition; the id is the smallest disc
    index of the block, so ids are stable and serialize predictably.
    """

    classes: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.classes)

    def __getitem__(self, disc: int) -> int:
        if not 1 <= disc <= len(self.classes):
            raise ValueError(
                f"disc {disc} outside class map domain 1..{len(self.classes)}"
            )
        return self.classes[disc - 1]


def apply_class_map(word: Word, class_map: ClassMap) -> Word:
    """Replace each letter's disc index by its class id.

    Order and signs are preserved, so the result has the same length.
    Raises ValueError for a letter whose disc is outside the map domain.
    """
    return tuple(Letter(class_map[letter.disc], letter.sign) for letter in word)


def free_reduce(word: Word) -> Word:
    """Delete adjacent inverse pairs until none remain.

    The single-pass stack algorithm reaches the same normal form as
    deleting pairs in any order (the reduction system is confluent; the
    test suite re-checks this exhaustively on small words).
    """
    out: list[Letter] = []
    for letter in word:
        if out and out[-1].disc == letter.disc and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def is_identity(word: Word) -> bool:
    return not free_reduce(word)
