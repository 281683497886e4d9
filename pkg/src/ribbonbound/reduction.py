"""The cancellation engine for band words under a disc partition.

Two kinds of moves shorten a band's class-mapped word without changing
the isotopy type of the doubled surface:

* ``free-reduce``: delete an adjacent pair of letters with equal class
  and opposite sign (words matter only up to homotopy);
* ``strip-start`` / ``strip-end``: delete the end-most letter when its
  class equals the class of the disc carrying that foot, any sign.  This
  is the combinatorial shadow of cancelling the singularity nearest a
  foot with a Whitney move.

A band is cancellable when the moves empty its word.  Moves are applied
in a fixed canonical order so traces are deterministic; order
independence of the verdict is checked separately by the oracle module
rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freegroup import Letter, Word, apply_class_map, format_word
from .model import Band, RibbonCode
from .partitions import DiscPartition

__all__ = [
    "FREE_REDUCE",
    "STRIP_START",
    "STRIP_END",
    "CancelStep",
    "CancelTrace",
    "cancel_band",
    "reduce_code",
    "replay_trace",
    "render_trace",
]

FREE_REDUCE = "free-reduce"
STRIP_START = "strip-start"
STRIP_END = "strip-end"


@dataclass(frozen=True)
class CancelStep:
    """One deletion; positions index the word state at the time of the step."""

    kind: str
    positions: tuple[int, ...]
    letters: tuple[Letter, ...]


@dataclass(frozen=True)
class CancelTrace:
    """The full cancellation record for one band under one partition."""

    band_id: str
    start_word: Word          # the band's word after class mapping
    steps: tuple[CancelStep, ...]
    final_word: Word
    cancellable: bool


def _free_reduce_recording(w: list[Letter], steps: list[CancelStep]) -> None:
    # Leftmost-first pair deletion; steps back up one position after a
    # deletion so a newly adjacent pair is caught.
    i = 0
    while i + 1 < len(w):
        a, b = w[i], w[i + 1]
        if a.disc == b.disc and a.sign == -b.sign:
            steps.append(CancelStep(FREE_REDUCE, (i, i + 1), (a, b)))
            del w[i : i + 2]
            i = max(i - 1, 0)
        else:
            i += 1


def cancel_band(band: Band, partition: DiscPartition) -> CancelTrace:
    """Run the canonical cancellation fixpoint on one band.

    Each round free-reduces to exhaustion, then strips at most one
    letter at the start foot and one at the end foot; rounds repeat
    until nothing fires.  The verdict is True exactly when the fixpoint
    is the empty word.
    """
    class_map = partition.class_map()
    start_class = class_map[band.start_disc]
    end_class = class_map[band.end_disc]
    start_word = apply_class_map(band.word, class_map)
    w = list(start_word)
    steps: list[CancelStep] = []
    changed = True
    while changed:
        changed = False
        _free_reduce_recording(w, steps)
        if w and w[0].disc == start_class:
            steps.append(CancelStep(STRIP_START, (0,), (w[0],)))
            del w[0]
            changed = True
        if w and w[-1].disc == end_class:
            steps.append(CancelStep(STRIP_END, (len(w) - 1,), (w[-1],)))
            del w[-1]
            changed = True
    final = tuple(w)
    return CancelTrace(band.id, start_word, tuple(steps), final, not final)


def cancel_verdict(word_ints: tuple[int, ...], start_class: int, end_class: int) -> bool:
    """Trace-free twin of ``cancel_band`` on a signed-integer word.

    Used by the partition search where only the verdict matters; it must
    and does apply the moves in the same canonical order.
    """
    w = list(word_ints)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(w):
            if w[i] == -w[i + 1]:
                del w[i : i + 2]
                i = max(i - 1, 0)
            else:
                i += 1
        if w and abs(w[0]) == start_class:
            del w[0]
            changed = True
        if w and abs(w[-1]) == end_class:
            del w[-1]
            changed = True
    return not w


def reduce_code(code: RibbonCode, partition: DiscPartition) -> list[CancelTrace]:
    """Cancel every band of the code; the code reduces fully when all do."""
    if partition.d != code.d:
        raise ValueError(
            f"partition of {partition.d} discs does not match code with {code.d}"
        )
    return [cancel_band(band, partition) for band in code.bands]


def replay_trace(trace: CancelTrace) -> Word:
    """Re-apply the recorded steps to the start word and return the result.

    Raises ValueError if any step's positions or letters disagree with
    the evolving word, so a returned value equal to ``trace.final_word``
    certifies the trace.
    """
    w = list(trace.start_word)
    for step in trace.steps:
        for pos, letter in zip(step.positions, step.letters):
            if not 0 <= pos < len(w):
                raise ValueError(f"step position {pos} outside word of length {len(w)}")
            if w[pos] != letter:
                raise ValueError(f"step letter {letter} does not match word at {pos}")
        for pos in sorted(step.positions, reverse=True):
            del w[pos]
    return tuple(w)


def render_trace(trace: CancelTrace) -> str:
    """One line per step, then a verdict line with the residual word."""
    lines = []
    for step in trace.steps:
        pos = ",".join(str(p) for p in step.positions)
        letters = ",".join(str(letter) for letter in step.letters)
        lines.append(f"{trace.band_id} {step.kind} pos={pos} letter={letters}")
    verdict = "cancellable" if trace.cancellable else "stuck"
    lines.append(
        f"{trace.band_id} verdict={verdict} residual={format_word(trace.final_word)}"
    )
    return "\n".join(lines)
