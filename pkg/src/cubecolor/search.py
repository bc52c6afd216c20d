"""Heuristic construction of colorings: greedy, DSATUR, tabu search, lifting.

All heuristics work on Q_n^k through one shared neighbor table.  The tabu
search is a fixed-K conflict-minimization scheme in the TabuCol family; it is
bit-exactly reproducible from (params, config, init) because all randomness
comes from per-restart seeded generators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .coloring import Coloring, coloring_from_classes, verify_coloring
from .hamming import Params, neighbors_within

#: color_of entry for a vertex that has not been assigned yet.
UNASSIGNED = 0

#: Iterations between recounts of the incremental conflict tally in
#: self-check mode.
SELF_CHECK_PERIOD = 10_000

STRATEGY_DOUBLE = "double"
STRATEGY_FREEZE_SUBCUBE = "freeze-subcube"


@lru_cache(maxsize=32)
def _neighbor_table(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """neighbors of every vertex in Q_n^k, ascending; empty lists for k = 0."""
    if k == 0:
        return tuple(() for _ in range(1 << n))
    params = Params(n, k)
    return tuple(tuple(neighbors_within(v, params)) for v in range(1 << n))


@dataclass
class Assignment:
    """Search-time color assignment: color_of[v] in 1..K, or UNASSIGNED."""

    params: Params
    color_of: list[int]

    def __post_init__(self) -> None:
        if len(self.color_of) != self.params.num_words:
            raise ValueError(
                f"color_of has length {len(self.color_of)}, expected {self.params.num_words}"
            )
        limit = self.params.num_colors
        for v, c in enumerate(self.color_of):
            if c == UNASSIGNED:
                continue
            if c < 1 or (limit is not None and c > limit):
                raise ValueError(f"vertex {v} has color {c} outside 1..{limit}")

    def is_complete(self) -> bool:
        return UNASSIGNED not in self.color_of

    def to_coloring(self) -> Coloring:
        """Convert to a Coloring with one class per color 1..K."""
        if not self.is_complete():
            raise ValueError("assignment has unassigned vertices")
        num = self.params.num_colors
        if num is None:
            num = max(self.color_of, default=0)
        classes: list[list[int]] = [[] for _ in range(num)]
        for v, c in enumerate(self.color_of):
            classes[c - 1].append(v)
        params = replace(self.params, num_colors=num)
        return coloring_from_classes(params, classes)

    def copy(self) -> Assignment:
        return Assignment(self.params, list(self.color_of))


def assignment_from_coloring(col: Coloring) -> Assignment:
    """Inverse of Assignment.to_coloring for complete partitions."""
    color_of = [UNASSIGNED] * col.params.num_words
    for idx, c in enumerate(col.classes, start=1):
        for w in c.words:
            color_of[w] = idx
    params = replace(col.params, num_colors=col.params.num_colors or len(col.classes))
    return Assignment(params, color_of)


@dataclass(frozen=True)
class SearchConfig:
    """Tabu/restart knobs.

    Tenure follows the classic graph-coloring setting: a reverted (vertex,
    old-color) pair stays tabu for tabu_tenure_base + tabu_tenure_slope *
    current_conflicts iterations.  Restart r uses seed rng_seed + r; the best
    outcome across restarts wins, ties going to the earliest restart, so a
    parallel fan-out would return the same answer as the sequential loop.
    frozen vertices keep the color given by the initial assignment.
    """

    rng_seed: int = 0
    max_iterations: int = 100_000
    restarts: int = 0
    tabu_tenure_base: int = 7
    tabu_tenure_slope: float = 0.6
    frozen: frozenset[int] = field(default_factory=frozenset)
    self_check: bool = False

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.restarts < 0:
            raise ValueError("restarts must be nonnegative")
        if self.tabu_tenure_base < 0 or self.tabu_tenure_slope < 0:
            raise ValueError("tabu tenure parameters must be nonnegative")


@dataclass
class SearchOutcome:
    """Best assignment found plus the counters needed to reproduce it.

    conflicts is conflict_count(best).  seed_used is the seed of the restart
    that produced best, so rerunning with rng_seed=seed_used, restarts=0
    reproduces it bit-exactly.  restarts_used is the index of the last restart
    executed; iterations_used sums iterations over all executed restarts.
    """

    best: Assignment
    conflicts: int
    iterations_used: int
    restarts_used: int
    seed_used: int


def _count_conflicts(color_of: list[int], neighbors: tuple[tuple[int, ...], ...]) -> int:
    # Count each unordered pair once via u < v.
    total = 0
    for v, nb in enumerate(neighbors):
        cv = color_of[v]
        for u in nb:
            if u > v and color_of[u] == cv:
                total += 1
    return total


def conflict_count(a: Assignment) -> int:
    """Number of unordered same-color pairs at distance 1..k."""
    if not a.is_complete():
        raise ValueError("assignment has unassigned vertices")
    return _count_conflicts(a.color_of, _neighbor_table(a.params.n, a.params.k))


def greedy_color(params: Params, order: list[int] | None = None) -> Coloring:
    """First-fit coloring along the given vertex order (natural order if None).

    Always valid; uses at most 1 + (ball_size(n, k) - 1) colors since a vertex
    never needs more than its degree + 1.
    """
    size = params.num_words
    if order is None:
        order = list(range(size))
    if sorted(order) != list(range(size)):
        raise ValueError("order is not a permutation of the vertex set")
    neighbors = _neighbor_table(params.n, params.k)
    color_of = [UNASSIGNED] * size
    for v in order:
        used = {color_of[u] for u in neighbors[v] if color_of[u] != UNASSIGNED}
        c = 1
        while c in used:
            c += 1
        color_of[v] = c
    return Assignment(replace(params, num_colors=None), color_of).to_coloring()


def dsatur_color(params: Params) -> Coloring:
    """DSATUR: repeatedly color the vertex that sees the most distinct colors.

    Ties break by the larger number of uncolored neighbors, then by the
    smaller vertex value, making the run fully deterministic.
    """
    size = params.num_words
    neighbors = _neighbor_table(params.n, params.k)
    color_of = [UNASSIGNED] * size
    saturation: list[set[int]] = [set() for _ in range(size)]
    uncolored_degree = [len(nb) for nb in neighbors]

    for _ in range(size):
        best_v = -1
        best_key = None
        for v in range(size):
            if color_of[v] != UNASSIGNED:
                continue
            key = (len(saturation[v]), uncolored_degree[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        used = saturation[best_v]
        c = 1
        while c in used:
            c += 1
        color_of[best_v] = c
        for u in neighbors[best_v]:
            if color_of[u] == UNASSIGNED:
                saturation[u].add(c)
                uncolored_degree[u] -= 1
    return Assignment(replace(params, num_colors=None), color_of).to_coloring()


def _tabu_run(
    color_of: list[int],
    num_colors: int,
    neighbors: tuple[tuple[int, ...], ...],
    frozen: frozenset[int],
    rng: random.Random,
    config: SearchConfig,
) -> tuple[list[int], int, int]:
    """One tabu descent from color_of; returns (best_colors, best_conflicts, iters).

    Each iteration moves one conflicted, non-frozen vertex to the color that
    minimizes the resulting conflict count over non-tabu moves; a tabu move is
    admitted only if it would beat the best conflict count ever seen
    (aspiration).  Ties are broken uniformly at random from rng, which is the
    run's only source of randomness besides the initial assignment.  If every
    move is tabu and none aspirates, the best move ignoring tabu is taken so
    the search always progresses.
    """
    size = len(color_of)
    gamma = [[0] * (num_colors + 1) for _ in range(size)]
    for v in range(size):
        gv = gamma[v]
        for u in neighbors[v]:
            gv[color_of[u]] += 1
    conflicts = sum(gamma[v][color_of[v]] for v in range(size)) // 2

    best_conflicts = conflicts
    best_colors = list(color_of)
    tabu_until = [[0] * (num_colors + 1) for _ in range(size)]
    base, slope = config.tabu_tenure_base, config.tabu_tenure_slope

    it = 0
    while it < config.max_iterations and conflicts > 0:
        it += 1
        best_delta: int | None = None
        ties: list[tuple[int, int]] = []
        fb_delta: int | None = None
        fb_ties: list[tuple[int, int]] = []
        for v in range(size):
            if v in frozen:
                continue
            gv = gamma[v]
            cv = color_of[v]
            own = gv[cv]
            if own == 0:
                continue
            tv = tabu_until[v]
            for c in range(1, num_colors + 1):
                if c == cv:
                    continue
                delta = gv[c] - own
                if fb_delta is None or delta < fb_delta:
                    fb_delta = delta
                    fb_ties = [(v, c)]
                elif delta == fb_delta:
                    fb_ties.append((v, c))
                if tv[c] >= it and conflicts + delta >= best_conflicts:
                    continue
                if best_delta is None or delta < best_delta:
                    best_delta = delta
                    ties = [(v, c)]
                elif delta == best_delta:
                    ties.append((v, c))
        if not ties:
            if not fb_ties:
                break  # no movable vertex at all (e.g. K = 1 or everything frozen)
            best_delta, ties = fb_delta, fb_ties
        v, c = ties[0] if len(ties) == 1 else rng.choice(ties)

        old = color_of[v]
        tabu_until[v][old] = it + int(base + slope * conflicts)
        color_of[v] = c
        for u in neighbors[v]:
            gu = gamma[u]
            gu[old] -= 1
            gu[c] += 1
        conflicts += best_delta

        if conflicts < best_conflicts:
            best_conflicts = conflicts
            best_colors = list(color_of)

        if config.self_check and it % SELF_CHECK_PERIOD == 0:
            recount = _count_conflicts(color_of, neighbors)
            if recount != conflicts:
                raise AssertionError(
                    f"incremental conflict tally {conflicts} != recount {recount} at iteration {it}"
                )
    return best_colors, best_conflicts, it


def tabu_search(
    params: Params, config: SearchConfig | None = None, init: Assignment | None = None
) -> SearchOutcome:
    """Fixed-K tabu search minimizing the number of conflicting pairs.

    Restart r starts from init (r = 0, when given) or from uniform random
    colors drawn from random.Random(rng_seed + r); frozen vertices always keep
    init's colors.  Stops early when a restart reaches zero conflicts.
    Deterministic given (params, config, init).
    """
    if params.num_colors is None:
        raise ValueError("tabu_search needs params.num_colors")
    config = config or SearchConfig()
    num_colors = params.num_colors
    size = params.num_words

    for v in config.frozen:
        if not 0 <= v < size:
            raise ValueError(f"frozen vertex {v} out of range")
    if init is not None:
        if init.params.n != params.n or init.params.k != params.k:
            raise ValueError("init assignment is for different params")
        if not init.is_complete():
            raise ValueError("init assignment must be fully assigned")
        if any(c > num_colors for c in init.color_of):
            raise ValueError("init assignment uses colors above num_colors")
    elif config.frozen:
        raise ValueError("frozen vertices require an initial assignment")

    neighbors = _neighbor_table(params.n, params.k)
    best: SearchOutcome | None = None
    total_iters = 0
    restarts_used = 0

    for r in range(config.restarts + 1):
        seed_r = config.rng_seed + r
        rng = random.Random(seed_r)
        if init is not None and r == 0:
            colors = list(init.color_of)
        else:
            colors = [
                init.color_of[v] if init is not None and v in config.frozen
                else rng.randrange(1, num_colors + 1)
                for v in range(size)
            ]
        run_best, run_conflicts, iters = _tabu_run(
            colors, num_colors, neighbors, config.frozen, rng, config
        )
        total_iters += iters
        restarts_used = r
        if best is None or run_conflicts < best.conflicts:
            best = SearchOutcome(
                best=Assignment(params, run_best),
                conflicts=run_conflicts,
                iterations_used=total_iters,
                restarts_used=restarts_used,
                seed_used=seed_r,
            )
        if best.conflicts == 0:
            break

    assert best is not None
    best.iterations_used = total_iters
    best.restarts_used = restarts_used
    return best


def extend_to_higher_dim(
    base: Coloring,
    strategy: str,
    num_colors: int | None = None,
    config: SearchConfig | None = None,
) -> SearchOutcome:
    """Lift a valid coloring of Q_n^k to Q_{n+1}^k.

    "double" colors (a, x) with base's color of x offset by a * K_base: both
    copies reuse the base classes and cross-copy pairs land in disjoint color
    blocks, so the result is always valid with 2 * K_base colors.

    "freeze-subcube" keeps the lower copy fixed at base's colors and runs the
    tabu search over the 2^n new vertices with num_colors colors; the returned
    conflict count may be positive, there is no success guarantee.
    """
    report = verify_coloring(base)
    if not report.valid:
        raise ValueError("base coloring is not valid")
    n, k = base.params.n, base.params.k
    base_colors = assignment_from_coloring(base).color_of
    k_base = len(base.classes)
    size = 1 << n
    config = config or SearchConfig()

    if strategy == STRATEGY_DOUBLE:
        target = 2 * k_base
        if num_colors is not None and num_colors != target:
            raise ValueError(f"double strategy yields exactly {target} colors, got {num_colors}")
        params_out = Params(n + 1, k, target)
        color_of = [0] * (2 * size)
        for x in range(size):
            color_of[x] = base_colors[x]
            color_of[size + x] = base_colors[x] + k_base
        assignment = Assignment(params_out, color_of)
        return SearchOutcome(
            best=assignment,
            conflicts=conflict_count(assignment),
            iterations_used=0,
            restarts_used=0,
            seed_used=config.rng_seed,
        )

    if strategy == STRATEGY_FREEZE_SUBCUBE:
        if num_colors is None:
            raise ValueError("freeze-subcube needs a target color count")
        used = max((i + 1 for i, c in enumerate(base.classes) if c.words), default=0)
        if num_colors < used:
            raise ValueError(f"base coloring uses {used} colors, target {num_colors} is smaller")
        params_out = Params(n + 1, k, num_colors)
        rng = random.Random(config.rng_seed)
        color_of = list(base_colors) + [
            rng.randrange(1, num_colors + 1) for _ in range(size)
        ]
        init = Assignment(params_out, color_of)
        frozen_config = replace(config, frozen=frozenset(range(size)))
        return tabu_search(params_out, frozen_config, init)

    raise ValueError(f"unknown strategy {strategy!r}")
