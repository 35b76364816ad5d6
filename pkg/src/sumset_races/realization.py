"""Transport integer race witnesses onto the real line.

An integer set B becomes the union of blocks [b, b + width] with a width
small enough that blocks in every h-fold sumset up to the horizon stay
pairwise disjoint. The h-fold measure is then |hB| times h*width, so the
rank pattern of the measures matches the rank pattern of the sumset
sizes: whatever order race the integers run, the interval sets run too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .discrete import IntSet, as_int_set, dense_rank, hfold_ints
from .intervals import Interval, IntervalUnion

__all__ = [
    "RealizationPlan",
    "realize",
    "TauRaceCheck",
    "TauRaceReport",
    "verify_tau_race",
]


@dataclass(frozen=True)
class RealizationPlan:
    """Block width, fold horizon, and the integer sets that were realized."""

    width: Fraction
    horizon: int
    base_sets: tuple[IntSet, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise ValueError("horizon must be an integer >= 1")
        if not 0 < self.width <= Fraction(1, self.horizon + 1):
            raise ValueError("width must lie in (0, 1/(horizon+1)]")
        if not self.base_sets or any(not b for b in self.base_sets):
            raise ValueError("every base set must be nonempty")


def realize(
    base_sets: Sequence[Sequence[int]], horizon: int
) -> tuple[tuple[IntervalUnion, ...], RealizationPlan]:
    """Blow each integer up to a block of width 1/(horizon+1).

    Distinct integers in an h-fold sumset are at least 1 apart while the
    blocks have width h/(horizon+1) < 1 for h <= horizon, so the blocks
    never meet and each fold's measure is exactly |hB| * h * width.
    """
    if not isinstance(horizon, int) or isinstance(horizon, bool) or horizon < 1:
        raise ValueError(f"horizon must be a positive integer, got {horizon!r}")
    normalized = tuple(as_int_set(b) for b in base_sets)
    if not normalized:
        raise ValueError("need at least one base set")
    if any(not b for b in normalized):
        raise ValueError("base sets must be nonempty")
    width = Fraction(1, horizon + 1)
    sets = tuple(
        IntervalUnion(Interval(Fraction(b), b + width) for b in base) for base in normalized
    )
    return sets, RealizationPlan(width=width, horizon=horizon, base_sets=normalized)


@dataclass(frozen=True)
class TauRaceCheck:
    """Rank patterns of the h-fold measures versus the h-fold sumset sizes."""

    h: int
    measures: tuple[Fraction, ...]
    cardinalities: tuple[int, ...]
    measure_ranks: tuple[int, ...]
    cardinality_ranks: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.measure_ranks == self.cardinality_ranks


@dataclass(frozen=True)
class TauRaceReport:
    checks: tuple[TauRaceCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_tau_race(
    sets: Sequence[IntervalUnion], base_sets: Sequence[Sequence[int]], horizon: int
) -> TauRaceReport:
    """Check, fold by fold, that measures and sumset sizes rank identically.

    The measures come from the generic interval fold and the sizes from
    the integer fold; the two routes share no code, so agreement is a
    real cross-check and not an echo.
    """
    if len(sets) != len(base_sets):
        raise ValueError(f"got {len(sets)} interval sets for {len(base_sets)} base sets")
    normalized = [as_int_set(b) for b in base_sets]
    checks = []
    for h in range(1, horizon + 1):
        measures = tuple(s.hfold(h).measure() for s in sets)
        cards = tuple(len(hfold_ints(b, h)) for b in normalized)
        checks.append(
            TauRaceCheck(
                h=h,
                measures=measures,
                cardinalities=cards,
                measure_ranks=dense_rank(measures),
                cardinality_ranks=dense_rank(cards),
            )
        )
    return TauRaceReport(checks=tuple(checks))
