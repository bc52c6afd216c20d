"""CNF encoding of "Q_n^k is K-colorable" plus DIMACS and model plumbing.

Variable var(v, c) = v*K + c is "vertex v has color c" for v in [0, 2^n) and
c in 1..K.  Clause emission order is fixed (at-least-one by vertex, conflict
clauses by (pair, color), optional at-most-one by vertex, symmetry units
last) so generated files are byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring, coloring_from_classes
from .hamming import Params, ball_size, neighbors_within

SYMMETRY_NONE = "none"
SYMMETRY_FIX_VERTEX_0 = "fix-vertex-0"
SYMMETRY_FIX_CLIQUE = "fix-clique"
SYMMETRIES = (SYMMETRY_NONE, SYMMETRY_FIX_VERTEX_0, SYMMETRY_FIX_CLIQUE)


class ModelDecodeError(ValueError):
    """A model leaves some vertex without a true color variable."""


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    comments: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(cl) for cl in self.clauses))
        object.__setattr__(self, "comments", tuple(self.comments))
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause")
            seen = set()
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")
                if -lit in seen:
                    raise ValueError(f"clause {cl} contains both {lit} and {-lit}")
                seen.add(lit)


@dataclass(frozen=True)
class EncodeOptions:
    at_most_one: bool = False
    symmetry: str = SYMMETRY_NONE

    def __post_init__(self) -> None:
        if self.symmetry not in SYMMETRIES:
            raise ValueError(f"symmetry must be one of {SYMMETRIES}, got {self.symmetry!r}")


def var_index(v: int, c: int, num_colors: int) -> int:
    """1-based CNF variable for "vertex v has color c", c in 1..num_colors."""
    return v * num_colors + c


def encode_coloring_cnf(params: Params, options: EncodeOptions | None = None) -> CnfFormula:
    """CNF satisfiable iff Q_n^k admits a proper num_colors-coloring.

    At-least-one clauses make every vertex colored; conflict clauses forbid a
    shared color on every pair at distance 1..k.  At-most-one clauses are
    redundant for satisfiability (decoding just picks the smallest true
    color), so they default off; some solvers still like them.  fix-clique
    pins the radius-floor(k/2) ball around vertex 0, which is a clique of
    Q_n^k, to colors 1, 2, ...
    """
    options = options or EncodeOptions()
    if params.num_colors is None:
        raise ValueError("encoding needs params.num_colors")
    if params.n > 16:
        raise ValueError("encoding supports n <= 16 (variable count must stay desk-scale)")
    n, k, num_colors = params.n, params.k, params.num_colors
    size = 1 << n

    clauses: list[tuple[int, ...]] = []
    for v in range(size):
        clauses.append(tuple(var_index(v, c, num_colors) for c in range(1, num_colors + 1)))

    for u in range(size):
        for v in neighbors_within(u, params) if k >= 1 else ():
            if v < u:
                continue
            for c in range(1, num_colors + 1):
                clauses.append((-var_index(u, c, num_colors), -var_index(v, c, num_colors)))

    if options.at_most_one:
        for v in range(size):
            for c1, c2 in combinations(range(1, num_colors + 1), 2):
                clauses.append((-var_index(v, c1, num_colors), -var_index(v, c2, num_colors)))

    if options.symmetry == SYMMETRY_FIX_VERTEX_0:
        clauses.append((var_index(0, 1, num_colors),))
    elif options.symmetry == SYMMETRY_FIX_CLIQUE:
        radius = k // 2
        clique = sorted(
            w for w in range(size) if w.bit_count() <= radius
        )  # pairwise distances <= 2*radius <= k
        if num_colors < len(clique):
            raise ValueError(
                f"fix-clique needs at least {len(clique)} colors, got {num_colors}"
            )
        for c, w in enumerate(clique, start=1):
            clauses.append((var_index(w, c, num_colors),))

    comments = (
        f"power-{k} coloring of the {n}-cube with {num_colors} colors",
        f"n={n} k={k} colors={num_colors} at_most_one={options.at_most_one}"
        f" symmetry={options.symmetry}",
        f"var(v,c) = v*{num_colors} + c, v in 0..{size - 1}, c in 1..{num_colors}",
    )
    return CnfFormula(num_vars=size * num_colors, clauses=tuple(clauses), comments=comments)


def expected_clause_count(params: Params, options: EncodeOptions | None = None) -> int:
    """Closed-form clause count, kept as an independent check on the encoder."""
    options = options or EncodeOptions()
    n, k, num_colors = params.n, params.k, params.num_colors
    size = 1 << n
    pairs = size * (ball_size(n, k) - 1) // 2
    total = size + num_colors * pairs
    if options.at_most_one:
        total += size * num_colors * (num_colors - 1) // 2
    if options.symmetry == SYMMETRY_FIX_VERTEX_0:
        total += 1
    elif options.symmetry == SYMMETRY_FIX_CLIQUE:
        total += ball_size(n, k // 2)
    return total


def write_dimacs(f: CnfFormula) -> str:
    """Standard DIMACS CNF text; byte-stable for a fixed formula."""
    lines = [f"c {c}" for c in f.comments]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for cl in f.clauses:
        lines.append(" ".join(str(lit) for lit in cl) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF; inverse of write_dimacs on its own output."""
    comments: list[str] = []
    num_vars: int | None = None
    num_clauses: int | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            if num_vars is None:
                comments.append(line[2:] if line.startswith("c ") else line[1:])
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line {raw!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValueError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        raise ValueError("trailing clause without terminating 0")
    if num_vars is None:
        raise ValueError("missing problem line")
    if num_clauses != len(clauses):
        raise ValueError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses), comments=tuple(comments))


def evaluate(f: CnfFormula, true_vars: set[int]) -> bool:
    """True iff every clause has a satisfied literal (variables absent from
    true_vars are false)."""
    return all(
        any((lit > 0) == (abs(lit) in true_vars) for lit in cl) for cl in f.clauses
    )


def coloring_to_model(col: Coloring) -> set[int]:
    """Canonical model of a coloring: exactly var(v, color(v)) is true."""
    num_colors = col.params.num_colors or len(col.classes)
    model: set[int] = set()
    for idx, cls in enumerate(col.classes, start=1):
        for w in cls.words:
            model.add(var_index(w, idx, num_colors))
    return model


def decode_model(true_vars: set[int], params: Params) -> Coloring:
    """Coloring whose color(v) is the smallest c with var(v, c) true.

    Raises ModelDecodeError when some vertex has no true color variable.
    """
    if params.num_colors is None:
        raise ValueError("decoding needs params.num_colors")
    num_colors = params.num_colors
    classes: list[list[int]] = [[] for _ in range(num_colors)]
    for v in range(params.num_words):
        for c in range(1, num_colors + 1):
            if var_index(v, c, num_colors) in true_vars:
                classes[c - 1].append(v)
                break
        else:
            raise ModelDecodeError(f"vertex {v} has no true color variable")
    return coloring_from_classes(params, classes)


def parse_solver_model(text: str) -> set[int]:
    """Read a model in the common solver output convention.

    Lines of signed integers terminated by 0; "v " prefixes are stripped;
    comment ("c") and status ("s") lines are ignored.  Positive literals
    become true variables, negatives are recorded as false by omission.
    """
    true_vars: set[int] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        if line.startswith("v"):
            line = line[1:].strip()
        for tok in line.split():
            lit = int(tok)
            if lit > 0:
                true_vars.add(lit)
    return true_vars
