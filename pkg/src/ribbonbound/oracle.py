"""Independent brute-force validators and the random code generator.

Everything here re-derives results by a different route than the main
modules and shares nothing with them beyond the basic word types, on
purpose: words are handled as signed integers, partitions come from an
insertion recursion instead of the lexicographic block stream,
connectivity uses union-find instead of graph search, cancellability is
"some order of moves empties the word" instead of the canonical
fixpoint, and genus goes through the Euler characteristic of the
sphere-tube surface instead of the closed formula.  Agreement between
the two routes is what the test suite certifies.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .freegroup import Letter
from .model import Band, RibbonCode, stats
from .partitions import DiscPartition
from .reduction import cancel_band

__all__ = [
    "GenSpec",
    "random_code",
    "standard_corpus",
    "confluence_check",
    "confluence_sweep",
    "brute_refined",
    "euler_double_genus",
]

CONFLUENCE_MAX_LEN = 10
BRUTE_MAX_DISCS = 8


@dataclass(frozen=True)
class GenSpec:
    """Parameters for deterministic random code generation."""

    seed: int
    d: int
    b: int
    max_word_len: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.b < 0:
            raise ValueError(f"b must be >= 0, got {self.b}")
        if self.max_word_len < 0:
            raise ValueError(f"max_word_len must be >= 0, got {self.max_word_len}")


def random_code(spec: GenSpec) -> RibbonCode:
    """Deterministic pseudorandom code for a spec.

    Feet are uniform over discs, word lengths uniform in
    [0, max_word_len], letters uniform over discs and signs.  When a
    connected code is possible (b >= d - 1) draws repeat until one comes
    up; otherwise the disconnected code is returned as is.
    """
    rng = random.Random(spec.seed)
    while True:
        bands = []
        for i in range(spec.b):
            start = rng.randint(1, spec.d)
            end = rng.randint(1, spec.d)
            length = rng.randint(0, spec.max_word_len)
            word = tuple(
                Letter(rng.randint(1, spec.d), rng.choice((1, -1)))
                for _ in range(length)
            )
            bands.append(Band(f"B{i + 1}", start, end, word))
        code = RibbonCode(spec.d, tuple(bands))
        if spec.b < spec.d - 1 or stats(code).connected:
            return code


def standard_corpus(n: int = 1000) -> list[RibbonCode]:
    """The reference corpus: n connected codes with d <= 6, b <= 6, words <= 4."""
    codes = []
    for seed in range(n):
        d = seed % 6 + 1
        b = d - 1 + (seed // 6) % (8 - d)
        max_len = (seed // 36) % 5
        codes.append(random_code(GenSpec(seed=seed, d=d, b=b, max_word_len=max_len)))
    return codes


def _single_steps(
    word: tuple[int, ...], start_class: int, end_class: int
) -> list[tuple[int, ...]]:
    # Every word reachable by one move: one pair deletion anywhere, or
    # one strip at either foot.
    successors = []
    for i in range(len(word) - 1):
        if word[i] == -word[i + 1]:
            successors.append(word[:i] + word[i + 2 :])
    if word and abs(word[0]) == start_class:
        successors.append(word[1:])
    if word and abs(word[-1]) == end_class:
        successors.append(word[:-1])
    return successors


@lru_cache(maxsize=None)
def _reaches_empty(word: tuple[int, ...], start_class: int, end_class: int) -> bool:
    if not word:
        return True
    return any(
        _reaches_empty(nxt, start_class, end_class)
        for nxt in _single_steps(word, start_class, end_class)
    )


def _terminal_words(
    word: tuple[int, ...],
    start_class: int,
    end_class: int,
    memo: dict[tuple[int, ...], frozenset],
) -> frozenset:
    if word in memo:
        return memo[word]
    successors = _single_steps(word, start_class, end_class)
    if not successors:
        result = frozenset({word})
    else:
        result = frozenset().union(
            *(_terminal_words(nxt, start_class, end_class, memo) for nxt in successors)
        )
    memo[word] = result
    return result


def confluence_check(band: Band, partition: DiscPartition) -> bool:
    """Does every maximal move order agree with the canonical verdict?

    Explores all maximal sequences of single moves by memoized search
    and compares each terminal word against the verdict of
    ``cancel_band``.  Words longer than 10 letters are refused to keep
    the state space bounded (deletions only, so at most 2**len states).
    """
    if len(band.word) > CONFLUENCE_MAX_LEN:
        raise ValueError(
            f"confluence check limited to words of length <= {CONFLUENCE_MAX_LEN}, "
            f"got {len(band.word)}"
        )
    verdict = cancel_band(band, partition).cancellable
    class_map = partition.class_map()
    word = tuple(letter.sign * class_map[letter.disc] for letter in band.word)
    start_class = class_map[band.start_disc]
    end_class = class_map[band.end_disc]
    memo: dict[tuple[int, ...], frozenset] = {}
    terminals = _terminal_words(word, start_class, end_class, memo)
    if verdict:
        return all(len(t) == 0 for t in terminals)
    return all(len(t) > 0 for t in terminals)


def confluence_sweep(
    max_len: int = 4, num_classes: int = 3
) -> tuple[int, list[tuple[tuple[int, ...], int, int]]]:
    """Exhaustive confluence check over all small band instances.

    Sweeps every word up to ``max_len`` letters over ``num_classes``
    generators and every foot assignment, with the discrete partition so
    classes are the discs themselves.  Returns the number of instances
    checked and the failing (word, start, end) triples, empty on a full
    pass.
    """
    alphabet = [s * c for c in range(1, num_classes + 1) for s in (1, -1)]
    partition = DiscPartition.discrete(num_classes)
    failures = []
    checked = 0
    for length in range(max_len + 1):
        for ints in itertools.product(alphabet, repeat=length):
            word = tuple(Letter.from_int(v) for v in ints)
            for start in range(1, num_classes + 1):
                for end in range(1, num_classes + 1):
                    checked += 1
                    band = Band("W", start, end, word)
                    if not confluence_check(band, partition):
                        failures.append((ints, start, end))
    return checked, failures


def _every_partition(d: int) -> list[list[list[int]]]:
    # Insertion recursion: each element joins an existing block or opens
    # a new one.  Order and representation differ from the search-side
    # enumeration by design.
    parts: list[list[list[int]]] = [[[1]]]
    for x in range(2, d + 1):
        grown: list[list[list[int]]] = []
        for p in parts:
            for i in range(len(p)):
                q = [list(block) for block in p]
                q[i].append(x)
                grown.append(q)
            grown.append([list(block) for block in p] + [[x]])
        parts = grown
    return parts


def _connected_under(blocks: list[list[int]], code: RibbonCode) -> bool:
    label = {}
    for i, block in enumerate(blocks):
        for disc in block:
            label[disc] = i
    root = list(range(len(blocks)))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for band in code.bands:
        a, b = find(label[band.start_disc]), find(label[band.end_disc])
        if a != b:
            root[a] = b
    return len({find(i) for i in range(len(blocks))}) == 1


def euler_double_genus(spheres: int, tubes: int) -> int:
    """Genus of the connected closed surface made of spheres joined by tubes.

    Each tube removes two open discs and adds an annulus, so
    chi = 2*spheres - 2*tubes and the genus is 1 - chi/2.
    """
    if tubes < spheres - 1:
        raise ValueError(f"{tubes} tubes cannot connect {spheres} spheres")
    chi = 2 * spheres - 2 * tubes
    return (2 - chi) // 2


def brute_refined(code: RibbonCode) -> int:
    """Minimum certified genus bound, recomputed with no search shortcuts.

    Visits every partition, keeps those whose block graph is connected
    and whose bands can all be emptied by some move order, and takes the
    genus through the Euler characteristic of the tubed sphere surface.
    Must equal the genus bound of ``refined_bound``.
    """
    if code.d > BRUTE_MAX_DISCS:
        raise ValueError(
            f"brute-force sweep limited to d <= {BRUTE_MAX_DISCS}, got {code.d}"
        )
    b = len(code.bands)
    best_blocks = None
    for blocks in _every_partition(code.d):
        if not _connected_under(blocks, code):
            continue
        cls = {}
        for block in blocks:
            smallest = min(block)
            for disc in block:
                cls[disc] = smallest
        ok = True
        for band in code.bands:
            word = tuple(letter.sign * cls[letter.disc] for letter in band.word)
            if not _reaches_empty(word, cls[band.start_disc], cls[band.end_disc]):
                ok = False
                break
        if ok and (best_blocks is None or len(blocks) > best_blocks):
            best_blocks = len(blocks)
    assert best_blocks is not None  # the one-block partition always qualifies
    return euler_double_genus(code.d, b + (code.d - best_blocks))
