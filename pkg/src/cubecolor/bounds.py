"""Lower bounds on the chromatic number of Q_n^k via maximum code sizes.

Every color class of a proper coloring of Q_n^k is a binary code of minimum
distance >= k+1, so at least ceil(2^n / A(n, k+1)) colors are needed, where
A(n, d) is the maximum size of an (n, M, d) code.  Known A(n, d) values ship
as a small cited table; small instances are computed exactly by branch and
bound (maximum independent set of the distance-< d conflict graph, with word
0 fixed in the code by translation symmetry).
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from functools import cache
from typing import NamedTuple

# Exact search is desk-scale only; beyond this the conflict graph and the
# search tree stop being laptop material.
MAX_EXACT_DIMENSION = 12
DEFAULT_NODE_BUDGET = 10**8

STATUS_EXACT = "exact"
STATUS_TIMEOUT = "timeout-lower-bound"

SOURCE_TABLE = "known-table"
SOURCE_EXACT = "exact-computation"


class UnknownCodeSizeError(ValueError):
    """A(n, d) is neither in the table nor computable at desk scale."""


class TableEntry(NamedTuple):
    value: int
    citation: str


@dataclass(frozen=True)
class KnownValueTable:
    """Known maximum code sizes A(n, d) with provenance."""

    entries: dict[tuple[int, int], TableEntry]

    def get(self, n: int, d: int) -> TableEntry | None:
        return self.entries.get((n, d))

    @classmethod
    def from_text(cls, text: str) -> KnownValueTable:
        """Parse the plain-text resource format: lines "n d value citation"."""
        entries: dict[tuple[int, int], TableEntry] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(None, 3)
            if len(parts) < 4:
                raise ValueError(f"line {lineno}: expected 'n d value citation', got {raw!r}")
            try:
                n, d, value = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            if value < 1:
                raise ValueError(f"line {lineno}: value must be positive")
            entries[(n, d)] = TableEntry(value, parts[3])
        return cls(entries)


@cache
def default_table() -> KnownValueTable:
    text = (
        importlib.resources.files(__package__).joinpath("data/known_code_sizes.txt").read_text()
    )
    return KnownValueTable.from_text(text)


class CodeSizeResult(NamedTuple):
    value: int
    status: str  # STATUS_EXACT or STATUS_TIMEOUT


def _branch_and_bound(n: int, d: int, budget: int) -> CodeSizeResult:
    """Maximum independent set search, no closed-form shortcuts.

    Candidates are branched in ascending integer order.  Word 0 is fixed in
    the code: translating any code by one of its own words preserves all
    distances, so some maximum code contains 0 and the remaining candidates
    are exactly the words of weight >= d.  A node is one include/exclude
    decision; exceeding the budget returns the best size found so far.
    """
    size = 1 << n
    adj = [0] * size
    for v in range(size):
        mask = 0
        for u in range(size):
            if u != v and (u ^ v).bit_count() < d:
                mask |= 1 << u
        adj[v] = mask

    pool0 = 0
    for u in range(1, size):
        if u.bit_count() >= d:
            pool0 |= 1 << u

    best = 1
    nodes = 0
    aborted = False

    def grow(chosen: int, pool: int) -> None:
        nonlocal best, nodes, aborted
        if chosen > best:
            best = chosen
        while pool:
            nodes += 1
            if nodes > budget:
                aborted = True
                return
            if chosen + pool.bit_count() <= best:
                return
            lsb = pool & -pool
            v = lsb.bit_length() - 1
            grow(chosen + 1, pool & ~adj[v] & ~lsb)
            if aborted:
                return
            pool ^= lsb

    grow(1, pool0)
    return CodeSizeResult(best, STATUS_TIMEOUT if aborted else STATUS_EXACT)


def exact_max_code_size(n: int, d: int, budget: int = DEFAULT_NODE_BUDGET) -> CodeSizeResult:
    """Largest M such that an (n, M, d) code exists, for desk-scale n.

    d = 1 admits the whole space and d = 2 the even-weight words, so those
    return in closed form; d > n forces a single word.  Everything else runs
    the branch-and-bound search under the given node budget.
    """
    if not 1 <= n <= MAX_EXACT_DIMENSION:
        raise ValueError(f"exact computation supports n in 1..{MAX_EXACT_DIMENSION}, got {n}")
    if d < 1:
        raise ValueError(f"minimum distance must be >= 1, got {d}")
    if budget < 1:
        raise ValueError("node budget must be positive")
    if d == 1:
        return CodeSizeResult(1 << n, STATUS_EXACT)
    if d == 2:
        return CodeSizeResult(1 << (n - 1), STATUS_EXACT)
    if d > n:
        return CodeSizeResult(1, STATUS_EXACT)
    return _branch_and_bound(n, d, budget)


def packing_lower_bound(n: int, k: int, max_code_size: int) -> int:
    """ceil(2^n / A) colors are needed when color classes have size <= A."""
    if max_code_size < 1:
        raise ValueError("max_code_size must be >= 1")
    return -((1 << n) // -max_code_size)


class ChromaticBound(NamedTuple):
    bound: int
    source: str  # SOURCE_TABLE or SOURCE_EXACT
    max_code_size: int


def chromatic_lower_bound(n: int, k: int, table: KnownValueTable | None = None) -> ChromaticBound:
    """Packing lower bound on the chromatic number of Q_n^k.

    A(n, k+1) is resolved from the known-value table first, then by exact
    computation.  If neither applies, UnknownCodeSizeError is raised: a
    silently weaker bound would be worse than no answer.
    """
    if table is None:
        table = default_table()
    d = k + 1
    entry = table.get(n, d)
    if entry is not None:
        return ChromaticBound(packing_lower_bound(n, k, entry.value), SOURCE_TABLE, entry.value)
    if d <= 2 or d > n:
        # Same closed forms as exact_max_code_size, valid for every n.
        value = (1 << n) if d == 1 else (1 << (n - 1)) if d == 2 else 1
        return ChromaticBound(packing_lower_bound(n, k, value), SOURCE_EXACT, value)
    if n <= MAX_EXACT_DIMENSION:
        value, status = exact_max_code_size(n, d)
        if status == STATUS_EXACT:
            return ChromaticBound(packing_lower_bound(n, k, value), SOURCE_EXACT, value)
    raise UnknownCodeSizeError(
        f"A({n},{d}) is unknown: not in the table and out of exact-search range"
    )
