"""Color classes, colorings of cube powers, and the partition checker.

A proper K-coloring of Q_n^k is exactly a partition of {0,1}^n into K binary
codes of minimum distance at least k+1.  The checker tests the three defining
conditions (disjoint, covering, distance) and reports every failure with a
concrete witness; per-class statistics are computed either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .hamming import Automorphism, Params, apply_automorphism, check_word, hamming_distance

#: Sentinel minimum distance of a code with fewer than two words.
INFINITE_DISTANCE = math.inf


@dataclass(frozen=True)
class CodeClass:
    """One color class: a set of words of {0,1}^n."""

    words: frozenset[int]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            check_word(w, self.n)

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[int]:
        return sorted(self.words)


@dataclass(frozen=True)
class Coloring:
    """A full color assignment for Q_n^k, viewed as a list of code classes.

    classes[i] holds the words of color i+1.  Some classes may be empty while
    a search is in progress; validity requires them to partition {0,1}^n with
    per-class minimum distance >= k+1.
    """

    params: Params
    classes: tuple[CodeClass, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(self.classes))


def coloring_from_classes(params: Params, classes: list[list[int]] | list[frozenset[int]]) -> Coloring:
    """Convenience constructor from plain word collections."""
    return Coloring(params, tuple(CodeClass(frozenset(c), params.n) for c in classes))


def check_structure(col: Coloring) -> None:
    """Raise ValueError on malformed colorings (wrong n, wrong class count).

    Structural problems are reported as errors, not as verification
    violations: a verdict about a coloring only makes sense once the object
    itself is well-formed.
    """
    for i, c in enumerate(col.classes):
        if c.n != col.params.n:
            raise ValueError(f"class {i + 1} has n={c.n}, coloring has n={col.params.n}")
    if col.params.num_colors is not None and len(col.classes) != col.params.num_colors:
        raise ValueError(
            f"coloring declares {col.params.num_colors} colors but has {len(col.classes)} classes"
        )


def min_distance(c: CodeClass) -> int | float:
    """Minimum Hamming distance over distinct pairs; INFINITE_DISTANCE if |c| <= 1.

    The sentinel (never a magic finite number) keeps singleton and empty
    classes, which occur mid-search, unambiguous.
    """
    ws = c.sorted_words()
    if len(ws) <= 1:
        return INFINITE_DISTANCE
    return min(hamming_distance(u, v) for u, v in combinations(ws, 2))


@dataclass(frozen=True)
class ClassStats:
    """Size, minimum distance, and weight/distance histograms of one class.

    weight_distribution[w] counts words of weight w (length n+1);
    distance_distribution[d] counts unordered pairs at distance d (length n+1,
    index 0 unused).
    """

    size: int
    min_distance: int | float
    weight_distribution: tuple[int, ...]
    distance_distribution: tuple[int, ...]


def class_stats(c: CodeClass) -> ClassStats:
    n = c.n
    weights = [0] * (n + 1)
    for w in c.words:
        weights[w.bit_count()] += 1
    distances = [0] * (n + 1)
    ws = c.sorted_words()
    for u, v in combinations(ws, 2):
        distances[hamming_distance(u, v)] += 1
    return ClassStats(
        size=len(ws),
        min_distance=min_distance(c),
        weight_distribution=tuple(weights),
        distance_distribution=tuple(distances),
    )


@dataclass(frozen=True)
class Violation:
    """One concrete failure: which condition broke, on which words, in which classes.

    kind is one of "missing-word", "duplicate-word", "distance-violation".
    classes holds 1-based color indices.
    """

    kind: str
    words: tuple[int, ...]
    classes: tuple[int, ...] = ()


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[Violation, ...] = ()
    per_class: tuple[ClassStats, ...] = field(default_factory=tuple)


def verify_coloring(col: Coloring) -> VerifyReport:
    """Check that col partitions {0,1}^n into codes of minimum distance >= k+1.

    Checking is all-pairs per class, O(sum M_i^2): at desk scale (2^8 words)
    this is instant and trivially auditable.  Every violation carries its
    witness words; per-class stats are filled even for invalid colorings.
    """
    check_structure(col)
    n, k = col.params.n, col.params.k
    violations: list[Violation] = []

    first_seen: dict[int, int] = {}
    for idx, c in enumerate(col.classes, start=1):
        for w in c.sorted_words():
            if w in first_seen:
                violations.append(Violation("duplicate-word", (w,), (first_seen[w], idx)))
            else:
                first_seen[w] = idx

    for w in range(1 << n):
        if w not in first_seen:
            violations.append(Violation("missing-word", (w,)))

    for idx, c in enumerate(col.classes, start=1):
        for u, v in combinations(c.sorted_words(), 2):
            if hamming_distance(u, v) <= k:
                violations.append(Violation("distance-violation", (u, v), (idx,)))

    stats = tuple(class_stats(c) for c in col.classes)
    return VerifyReport(valid=not violations, violations=tuple(violations), per_class=stats)


def fingerprint(col: Coloring) -> bytes:
    """Canonical byte string invariant under automorphisms and color relabeling.

    Automorphisms preserve all pairwise distances, so each class's (size,
    distance distribution) pair is invariant; sorting the pairs removes the
    color labels.  Equal colorings-up-to-symmetry always get equal
    fingerprints; the converse is not claimed (this is an invariant, not a
    canonical form).
    """
    check_structure(col)
    entries = sorted(
        (s.size, s.distance_distribution) for s in (class_stats(c) for c in col.classes)
    )
    body = ";".join(f"{size}:" + ",".join(map(str, dd[1:])) for size, dd in entries)
    return f"n={col.params.n};k={col.params.k};{body}".encode()


def transform_coloring(col: Coloring, a: Automorphism) -> Coloring:
    """Apply an automorphism to every word, keeping class order."""
    if a.n != col.params.n:
        raise ValueError(f"automorphism is on n={a.n}, coloring on n={col.params.n}")
    classes = tuple(
        CodeClass(frozenset(apply_automorphism(w, a) for w in c.words), col.params.n)
        for c in col.classes
    )
    return Coloring(col.params, classes)
