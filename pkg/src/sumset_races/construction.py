"""Building interval sets whose h-fold sumset measures differ as prescribed.

Given an (n-1) x H table of integer targets d[i][h] and a positive
rational scale, the pipeline produces n interval unions A_1, ..., A_n with

    measure(hA_i) - measure(hA_{i+1}) = scale * d[i][h]

exactly, for every consecutive pair i and every fold count h up to H.

The route: back-substitute the targets into per-step gap increments,
lift those to nonnegative per-set gap multiplicities, carve calibrated
open gaps out of a fixed block, attach a two-block filler whose own
h-fold sums contribute identically for every set, and finally dilate.
Each carved gap of width class r survives thickening by [0, (h-1)*delta]
with exactly (r-h+1)*delta of its width for h <= r, which is what turns
gap multiplicities into controlled measure differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .intervals import Interval, IntervalUnion, Rational, as_fraction

__all__ = [
    "InternalCheckError",
    "DiffMatrix",
    "StepMatrix",
    "CarveMatrix",
    "ConstructionParams",
    "CarvedBlock",
    "solve_steps",
    "lift_steps",
    "choose_params",
    "filler_set",
    "carve",
    "thickened_measure",
    "assemble_set",
    "build_sets",
    "BuildResult",
    "DifferenceCheck",
    "TelescopeCheck",
    "DifferenceReport",
    "verify_differences",
]


class InternalCheckError(ArithmeticError):
    """An exact identity the construction relies on failed to hold."""


def _int_rows(rows: Iterable[Sequence[int]], what: str) -> tuple[tuple[int, ...], ...]:
    out = []
    for row in rows:
        clean = []
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{what} entries must be integers, got {v!r}")
            clean.append(v)
        out.append(tuple(clean))
    return tuple(out)


@dataclass(frozen=True)
class DiffMatrix:
    """Integer targets for the measure differences of consecutive sets.

    ``rows[i-1][h-1]`` is the target for measure(hA_i) - measure(hA_{i+1}),
    before scaling. n-1 rows of width H, with n >= 2 and H >= 2.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = _int_rows(self.rows, "difference table")
        if len(rows) < 1:
            raise ValueError("need at least one row (two sets)")
        width = len(rows[0])
        if width < 2:
            raise ValueError("need targets for at least folds 1 and 2")
        if any(len(r) != width for r in rows):
            raise ValueError("rows must all have the same width")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows) + 1

    @property
    def H(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class StepMatrix:
    """Per-step gap-count increments between consecutive sets, one row per pair."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = _int_rows(self.rows, "step table")
        if len(rows) < 1 or len(rows[0]) < 2 or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("step table must be rectangular, n-1 rows of width H >= 2")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows) + 1

    @property
    def H(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class CarveMatrix:
    """Nonnegative gap multiplicities, one row per set, one column per width class."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = _int_rows(self.rows, "carve table")
        if len(rows) < 2 or len(rows[0]) < 2 or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("carve table must be rectangular, n >= 2 rows of width H >= 2")
        if any(v < 0 for row in rows for v in row):
            raise ValueError("gap multiplicities must be nonnegative")
        if any(sum(row) == 0 for row in rows):
            raise ValueError("every set must carve at least one gap")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def H(self) -> int:
        return len(self.rows[0])

    @property
    def row_totals(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)


@dataclass(frozen=True)
class ConstructionParams:
    """Shared geometry for one build: gap unit delta, filler offset c, and eps.

    Invariants keep every piece strictly separated: eps in (0, 1/3),
    0 < delta < eps/(H-1), and c far enough right that the filler and the
    carved block never collide with the seed block [0, delta].
    """

    eps: Fraction
    delta: Fraction
    c: Fraction
    H: int
    n: int

    def __post_init__(self) -> None:
        eps = as_fraction(self.eps)
        delta = as_fraction(self.delta)
        c = as_fraction(self.c)
        if not isinstance(self.H, int) or self.H < 2:
            raise ValueError("fold horizon H must be an integer >= 2")
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError("set count n must be an integer >= 2")
        if not 0 < eps < Fraction(1, 3):
            raise ValueError(f"eps must lie strictly between 0 and 1/3, got {eps}")
        if not 0 < delta < eps / (self.H - 1):
            raise ValueError(f"delta must lie strictly between 0 and eps/(H-1), got {delta}")
        if not (self.H - 1) * delta + 3 < c:
            raise ValueError(f"offset c too small: need (H-1)*delta + 3 < c, got {c}")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "c", c)


def solve_steps(diffs: DiffMatrix) -> StepMatrix:
    """Solve sum_{r=h..H} (r-h+1)*x_r = d_h for each row by back-substitution.

    The system is upper triangular with unit diagonal, so the integer
    solution is unique; it is re-checked by direct substitution before
    being returned.
    """
    H = diffs.H
    rows = []
    for d in diffs.rows:
        x = [0] * H
        x[H - 1] = d[H - 1]
        x[H - 2] = d[H - 2] - 2 * d[H - 1]
        for r in range(H - 3, -1, -1):
            x[r] = d[r] - 2 * d[r + 1] + d[r + 2]
        rows.append(tuple(x))
    for x, d in zip(rows, diffs.rows):
        for h in range(1, H + 1):
            total = sum((r - h + 1) * x[r - 1] for r in range(h, H + 1))
            if total != d[h - 1]:
                raise InternalCheckError(
                    f"back-substitution failed: fold {h} gives {total}, wanted {d[h - 1]}"
                )
    return StepMatrix(tuple(rows))


def _lift_column(steps: Sequence[int]) -> list[int]:
    """Smallest nonnegative sequence whose successive differences are ``steps``."""
    partial = 0
    lowest = 0
    sums = []
    for s in steps:
        partial += s
        sums.append(partial)
        if partial < lowest:
            lowest = partial
    base = -lowest
    return [base] + [base + p for p in sums]


def lift_steps(steps: StepMatrix) -> CarveMatrix:
    """Lift step increments to nonnegative multiplicity rows with positive totals.

    Each width class lifts independently to its minimal nonnegative
    solution. If some set then carves nothing at all, every set gets one
    extra width-1 gap: a constant added to a whole column shifts no
    difference, and it guarantees every carved block is a proper subset
    of its base block.
    """
    n, H = steps.n, steps.H
    columns = [_lift_column([steps.rows[i][r] for i in range(n - 1)]) for r in range(H)]
    rows = [[columns[r][i] for r in range(H)] for i in range(n)]
    if any(sum(row) == 0 for row in rows):
        for row in rows:
            row[0] += 1
    for i in range(n - 1):
        for r in range(H):
            if rows[i + 1][r] - rows[i][r] != steps.rows[i][r]:
                raise InternalCheckError("lift does not reproduce its steps")
    return CarveMatrix(tuple(tuple(r) for r in rows))


def choose_params(H: int, n: int, max_gaps: int) -> ConstructionParams:
    """Fixed parameter recipe, with strict margin in every inequality.

    ``max_gaps`` is the largest total gap count any single set will carve;
    halving the feasibility bound keeps every carved gap strictly inside
    its block even in the extreme width class.
    """
    if not isinstance(H, int) or isinstance(H, bool) or H < 2:
        raise ValueError(f"fold horizon must be an integer >= 2, got {H!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"set count must be an integer >= 2, got {n!r}")
    if not isinstance(max_gaps, int) or isinstance(max_gaps, bool) or max_gaps < 1:
        raise ValueError(f"max gap count must be an integer >= 1, got {max_gaps!r}")
    eps = Fraction(1, 4)
    delta = Fraction(1, 2) * min(eps / (H - 1), (1 - 3 * eps) / (2 * H * max_gaps))
    c = (H - 1) * delta + 4
    return ConstructionParams(eps=eps, delta=delta, c=c, H=H, n=n)


def filler_set(eps: Rational) -> IntervalUnion:
    """The two blocks [0, 1-eps] and [2, 3-eps].

    Their h-fold sums collapse to the single interval [0, h*(3-eps)] for
    every h >= 3, so the filler contributes the same measure to every
    assembled set at every fold.
    """
    e = as_fraction(eps)
    if not 0 < e < Fraction(1, 3):
        raise ValueError(f"eps must lie strictly between 0 and 1/3, got {e}")
    return IntervalUnion([(0, 1 - e), (2, 3 - e)])


@dataclass(frozen=True)
class CarvedBlock:
    """The block [1+eps, 2-2eps] with calibrated open gaps removed.

    Gap j opens at anchor u_j = 1 + eps + 2*H*j*delta and has width
    r*delta, where r is its width class: the first counts[0] gaps are
    class 1, the next counts[1] class 2, and so on. Gaps are open on
    both sides, so every anchor stays in ``kept``.
    """

    counts: tuple[int, ...]
    anchors: tuple[Fraction, ...]
    gaps: tuple[Interval, ...]
    removed: IntervalUnion
    kept: IntervalUnion


def carve(counts: Sequence[int], params: ConstructionParams) -> CarvedBlock:
    """Carve ``counts[r-1]`` open gaps of width r*delta out of the base block."""
    (clean,) = _int_rows([counts], "gap count")
    if len(clean) != params.H:
        raise ValueError(f"need one gap count per width class 1..{params.H}")
    if any(v < 0 for v in clean):
        raise ValueError("gap counts must be nonnegative")
    total = sum(clean)
    if total == 0:
        raise ValueError("at least one gap must be carved")
    eps, delta, H = params.eps, params.delta, params.H
    if delta > (1 - 3 * eps) / (2 * H * total):
        raise ValueError(f"delta {delta} too coarse to place {total} gaps in the block")
    anchors = tuple(1 + eps + 2 * H * j * delta for j in range(total + 1))
    gaps = []
    j = 1
    for r, count in enumerate(clean, start=1):
        for _ in range(count):
            gaps.append(Interval(anchors[j], anchors[j] + r * delta))
            j += 1
    block_top = 2 - 2 * eps
    if gaps and gaps[-1].hi >= block_top:
        raise ValueError("params leave no room: the last gap would reach the block's end")
    base = IntervalUnion([(1 + eps, block_top)])
    removed = IntervalUnion(gaps)
    kept = base.subtract(removed)
    return CarvedBlock(
        counts=clean, anchors=anchors, gaps=tuple(gaps), removed=removed, kept=kept
    )


def thickened_measure(block: CarvedBlock, h: int, params: ConstructionParams) -> Fraction:
    """Exact measure of [0, (h-1)*delta] + kept, checked against its closed form.

    Thickening refills each gap of width class r < h completely and all
    but (r-h+1)*delta of each class-r gap with r >= h. The direct
    interval computation and the closed form must agree to the last bit;
    a mismatch raises, because every downstream guarantee leans on it.
    """
    if not isinstance(h, int) or isinstance(h, bool) or not 1 <= h <= params.H:
        raise ValueError(f"fold must lie in 1..{params.H}, got {h!r}")
    delta, eps = params.delta, params.eps
    smear = IntervalUnion([(0, (h - 1) * delta)])
    direct = (smear + block.kept).measure()
    residue = sum((r - h + 1) * cnt for r, cnt in enumerate(block.counts, start=1) if r >= h)
    closed = (h - 1) * delta + 1 - 3 * eps - delta * residue
    if direct != closed:
        raise InternalCheckError(
            f"thickened measure mismatch at fold {h}: direct {direct}, closed form {closed}"
        )
    return direct


def assemble_set(
    filler: IntervalUnion, carved: IntervalUnion, params: ConstructionParams
) -> IntervalUnion:
    """[0, delta] together with the filler and carved block shifted right by c."""
    if carved.is_empty:
        raise ValueError("carved block must be nonempty")
    lo, hi = carved.bounds()
    if lo < 1 + params.eps or hi > 2 - 2 * params.eps:
        raise ValueError("carved block must stay inside [1+eps, 2-2eps]")
    shifted = IntervalUnion([*filler.parts, *carved.parts]).translate(params.c)
    return IntervalUnion([Interval(Fraction(0), params.delta), *shifted.parts])


class BuildResult(NamedTuple):
    sets: tuple[IntervalUnion, ...]
    params: ConstructionParams
    carves: CarveMatrix


def build_sets(diffs: DiffMatrix, scale: Rational) -> BuildResult:
    """Full pipeline from difference targets to finished interval sets.

    The assembled sets are dilated by scale/delta, which turns the raw
    per-gap differences of delta * d[i][h] into scale * d[i][h] exactly.
    """
    theta = as_fraction(scale)
    if theta <= 0:
        raise ValueError(f"scale must be positive, got {theta}")
    steps = solve_steps(diffs)
    carves = lift_steps(steps)
    params = choose_params(diffs.H, diffs.n, max(carves.row_totals))
    filler = filler_set(params.eps)
    ratio = theta / params.delta
    sets = tuple(
        assemble_set(filler, carve(row, params).kept, params).dilate(ratio)
        for row in carves.rows
    )
    return BuildResult(sets=sets, params=params, carves=carves)


@dataclass(frozen=True)
class DifferenceCheck:
    """One recomputed consecutive difference against its scaled target."""

    pair: int  # 1-based: compares sets[pair-1] and sets[pair]
    h: int
    computed: Fraction
    target: Fraction

    @property
    def ok(self) -> bool:
        return self.computed == self.target


@dataclass(frozen=True)
class TelescopeCheck:
    """Pairwise difference recomputed as a sum of consecutive ones."""

    j: int
    k: int
    h: int
    ok: bool


@dataclass(frozen=True)
class DifferenceReport:
    checks: tuple[DifferenceCheck, ...]
    telescoping: tuple[TelescopeCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks) and all(t.ok for t in self.telescoping)


def verify_differences(
    sets: Sequence[IntervalUnion], diffs: DiffMatrix, scale: Rational
) -> DifferenceReport:
    """Recompute every h-fold measure difference and compare, exactly.

    Also confirms the telescoping identity: for any j < k the difference
    measure(hA_j) - measure(hA_k) equals the sum of the scaled targets of
    the consecutive pairs between them. Nothing here reuses the
    construction's internals; the folds are recomputed from the sets as
    given.
    """
    theta = as_fraction(scale)
    if len(sets) != diffs.n:
        raise ValueError(f"expected {diffs.n} sets, got {len(sets)}")
    H = diffs.H
    measures = [[s.hfold(h).measure() for h in range(1, H + 1)] for s in sets]
    checks = []
    for i in range(1, diffs.n):
        for h in range(1, H + 1):
            computed = measures[i - 1][h - 1] - measures[i][h - 1]
            target = theta * diffs.rows[i - 1][h - 1]
            checks.append(DifferenceCheck(pair=i, h=h, computed=computed, target=target))
    telescoping = []
    for j in range(1, diffs.n):
        for k in range(j + 1, diffs.n + 1):
            for h in range(1, H + 1):
                direct = measures[j - 1][h - 1] - measures[k - 1][h - 1]
                summed = theta * sum(diffs.rows[i - 1][h - 1] for i in range(j, k))
                telescoping.append(TelescopeCheck(j=j, k=k, h=h, ok=direct == summed))
    return DifferenceReport(checks=tuple(checks), telescoping=tuple(telescoping))
