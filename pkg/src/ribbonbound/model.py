"""Disc-band codes: the combinatorial record of a ribbon-immersed surface.

A code is d discs plus a list of abstract bands.  Each band knows the
discs its two feet attach to and the ordered, signed word of ribbon
singularities met walking the band from the start foot to the end foot.
Feet positions around a disc boundary and any planar embedding data are
deliberately not modeled: the doubled surface depends only on the
homotopy classes of the band cores, which the signed word captures.

File format (UTF-8, line oriented, ``#`` starts a comment, blank lines
ignored)::

    discs 4
    band B1 1 2 : +3
    band B2 2 3 : +1
    band B3 3 4 : +4 +2

One header line ``discs <d>``, then one line per band: an id matching
``[A-Za-z0-9_]+``, the start and end foot discs, a lone colon, and the
singularity word in ``+k`` / ``-k`` tokens.  A band with an empty word
ends at the colon.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .freegroup import Letter, Word, format_word, parse_letter_token

__all__ = [
    "Band",
    "RibbonCode",
    "SurfaceStats",
    "ParseError",
    "validate",
    "stats",
    "parse_ribbon_code",
    "serialize_ribbon_code",
]

_ID = re.compile(r"[A-Za-z0-9_]+")
_INT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Band:
    """An abstract band: two feet and its ribbon-singularity word."""

    id: str
    start_disc: int
    end_disc: int
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))


@dataclass(frozen=True)
class RibbonCode:
    """d discs and an ordered list of bands.

    Construction is permissive so that malformed codes can be
    represented and reported on; ``validate`` is the checker.
    """

    d: int
    bands: tuple[Band, ...]

    def __post_init__(self):
        object.__setattr__(self, "bands", tuple(self.bands))

    @property
    def b(self) -> int:
        return len(self.bands)


@dataclass(frozen=True)
class SurfaceStats:
    d: int
    b: int
    chi: int                      # Euler characteristic of the surface, d - b
    connected: bool
    components: int
    double_genus: Optional[int]   # genus of the doubled closed surface; None if disconnected


def validate(code: RibbonCode) -> list[str]:
    """Return diagnostics for every violated invariant (empty means valid)."""
    diags: list[str] = []
    if code.d < 1:
        diags.append(f"disc count must be >= 1, got {code.d}")
    seen: set[str] = set()
    for band in code.bands:
        if not isinstance(band.id, str) or not _ID.fullmatch(band.id):
            diags.append(f"band {band.id!r}: bad id (use letters, digits, underscore)")
        if band.id in seen:
            diags.append(f"band {band.id!r}: duplicate id")
        seen.add(band.id)
        for foot in (band.start_disc, band.end_disc):
            if not 1 <= foot <= code.d:
                diags.append(
                    f"band {band.id!r}: foot disc {foot} out of range 1..{code.d}"
                )
        for letter in band.word:
            if letter.disc > code.d:
                diags.append(
                    f"band {band.id!r}: letter disc {letter.disc} out of range 1..{code.d}"
                )
    return diags


def _require_valid(code: RibbonCode) -> None:
    diags = validate(code)
    if diags:
        raise ValueError("invalid code: " + diags[0])


def disc_components(code: RibbonCode) -> list[set[int]]:
    """Connected components of the disc-band incidence graph.

    Vertices are discs, edges are bands via their feet.  Singularities
    do not join the surface, so word letters contribute no edges.
    """
    adjacency: dict[int, set[int]] = {i: set() for i in range(1, code.d + 1)}
    for band in code.bands:
        adjacency[band.start_disc].add(band.end_disc)
        adjacency[band.end_disc].add(band.start_disc)
    components = []
    seen: set[int] = set()
    for root in range(1, code.d + 1):
        if root in seen:
            continue
        component = {root}
        stack = [root]
        seen.add(root)
        while stack:
            here = stack.pop()
            for there in adjacency[here]:
                if there not in seen:
                    seen.add(there)
                    component.add(there)
                    stack.append(there)
        components.append(component)
    return components


def stats(code: RibbonCode) -> SurfaceStats:
    """Surface statistics of the code and of its double.

    The double of the surface along its full boundary doubles the Euler
    characteristic, so a connected code with chi = d - b doubles to a
    closed surface of genus 1 - chi = b - d + 1.
    """
    _require_valid(code)
    b = len(code.bands)
    chi = code.d - b
    components = disc_components(code)
    connected = len(components) == 1
    double_genus = b - code.d + 1 if connected else None
    return SurfaceStats(
        d=code.d,
        b=b,
        chi=chi,
        connected=connected,
        components=len(components),
        double_genus=double_genus,
    )


class ParseError(ValueError):
    """A ribbon-code file error with 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


def _tokens(line: str) -> list[tuple[int, str]]:
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def parse_ribbon_code(text: str) -> RibbonCode:
    """Parse the file format described in the module docstring."""
    d: Optional[int] = None
    bands: list[Band] = []
    ids: set[str] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        col0, head = toks[0]
        if d is None:
            if head != "discs":
                raise ParseError(lineno, col0, "expected 'discs <d>' header")
            if len(toks) < 2:
                raise ParseError(lineno, len(line) + 1, "expected disc count")
            col, tok = toks[1]
            if not _INT.fullmatch(tok):
                raise ParseError(
                    lineno, col, f"disc count must be a decimal integer, got {tok!r}"
                )
            count = int(tok)
            if count < 1:
                raise ParseError(lineno, col, "disc count must be >= 1")
            if len(toks) > 2:
                col, tok = toks[2]
                raise ParseError(lineno, col, f"unexpected token {tok!r} after disc count")
            d = count
            continue
        if head == "discs":
            raise ParseError(lineno, col0, "duplicate 'discs' header")
        if head != "band":
            raise ParseError(lineno, col0, f"expected 'band' line, got {head!r}")
        if len(toks) < 2:
            raise ParseError(lineno, len(line) + 1, "expected band id")
        col_id, band_id = toks[1]
        if not _ID.fullmatch(band_id):
            raise ParseError(
                lineno, col_id, f"bad band id {band_id!r} (use letters, digits, underscore)"
            )
        if band_id in ids:
            raise ParseError(lineno, col_id, f"duplicate band id {band_id!r}")
        feet = []
        for index, which in ((2, "start"), (3, "end")):
            if len(toks) <= index:
                raise ParseError(lineno, len(line) + 1, f"expected {which} disc")
            col, tok = toks[index]
            if not _INT.fullmatch(tok):
                raise ParseError(
                    lineno, col, f"{which} disc must be a decimal integer, got {tok!r}"
                )
            foot = int(tok)
            if not 1 <= foot <= d:
                raise ParseError(lineno, col, f"foot disc {foot} out of range 1..{d}")
            feet.append(foot)
        if len(toks) <= 4:
            raise ParseError(lineno, len(line) + 1, "expected ':'")
        col, tok = toks[4]
        if tok != ":":
            raise ParseError(lineno, col, f"expected ':', got {tok!r}")
        letters: list[Letter] = []
        for col, tok in toks[5:]:
            try:
                letter = parse_letter_token(tok)
            except ValueError as exc:
                raise ParseError(lineno, col, str(exc)) from None
            if letter.disc > d:
                raise ParseError(
                    lineno, col, f"letter disc {letter.disc} out of range 1..{d}"
                )
            letters.append(letter)
        ids.add(band_id)
        bands.append(Band(band_id, feet[0], feet[1], tuple(letters)))
    if d is None:
        raise ParseError(max(lineno, 1), 1, "missing 'discs' header")
    return RibbonCode(d, tuple(bands))


def serialize_ribbon_code(code: RibbonCode) -> str:
    """Canonical text for a valid code; parse of the result is identity."""
    diags = validate(code)
    if diags:
        raise ValueError("cannot serialize invalid code: " + diags[0])
    lines = [f"discs {code.d}"]
    for band in code.bands:
        line = f"band {band.id} {band.start_disc} {band.end_disc} :"
        if band.word:
            line += " " + format_word(band.word)
        lines.append(line)
    return "\n".join(lines) + "\n"
