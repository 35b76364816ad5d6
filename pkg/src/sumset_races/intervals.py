"""Exact arithmetic on finite unions of closed rational intervals.

Every set handled by this package is a finite union of closed intervals
with rational endpoints, kept in canonical form: parts sorted by left
endpoint, overlapping or touching parts merged. Endpoints are
``fractions.Fraction``, so measures, Minkowski sums and dilations are
exact, and equality of canonical forms is equality of point sets. No
operation ever rounds.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[Fraction, int]

__all__ = [
    "Rational",
    "as_fraction",
    "Interval",
    "IntervalUnion",
    "grid_measure_oracle",
]


def as_fraction(value: Rational) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are refused outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with rational endpoints; lo == hi is a point."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo = as_fraction(self.lo)
        hi = as_fraction(self.hi)
        if lo > hi:
            raise ValueError(f"endpoints out of order: {lo} > {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


IntervalLike = Union[Interval, Sequence[Rational]]


def _as_interval(item: IntervalLike) -> Interval:
    if isinstance(item, Interval):
        return item
    lo, hi = item
    return Interval(lo, hi)


def _merge(intervals: Iterable[IntervalLike]) -> tuple[Interval, ...]:
    """Sort and merge; touching parts ([0,1] and [1,2]) collapse into one."""
    items = sorted((_as_interval(iv) for iv in intervals), key=lambda iv: (iv.lo, iv.hi))
    merged: list[Interval] = []
    for iv in items:
        if merged and iv.lo <= merged[-1].hi:
            if iv.hi > merged[-1].hi:
                merged[-1] = Interval(merged[-1].lo, iv.hi)
        else:
            merged.append(iv)
    return tuple(merged)


@dataclass(frozen=True, init=False)
class IntervalUnion:
    """Canonical finite union of disjoint closed intervals.

    The constructor accepts any iterable of ``Interval`` or ``(lo, hi)``
    pairs and canonicalizes it, so two unions compare equal exactly when
    they are the same point set. Construction is idempotent on already
    canonical input. ``IntervalUnion()`` is the empty set.
    """

    parts: tuple[Interval, ...]

    def __init__(self, intervals: Iterable[IntervalLike] = ()) -> None:
        object.__setattr__(self, "parts", _merge(intervals))

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def measure(self) -> Fraction:
        """Total length of the union (points contribute nothing)."""
        return sum((p.hi - p.lo for p in self.parts), Fraction(0))

    def bounds(self) -> tuple[Fraction, Fraction] | None:
        """Smallest and largest covered point, or None when empty."""
        if not self.parts:
            return None
        return self.parts[0].lo, self.parts[-1].hi

    def __contains__(self, x: Rational) -> bool:
        value = as_fraction(x)
        idx = bisect_right(self.parts, value, key=lambda p: p.lo)
        return idx > 0 and value <= self.parts[idx - 1].hi

    def translate(self, offset: Rational) -> "IntervalUnion":
        """Shift every part by the same amount."""
        t = as_fraction(offset)
        return IntervalUnion(Interval(p.lo + t, p.hi + t) for p in self.parts)

    def dilate(self, scale: Rational) -> "IntervalUnion":
        """Scale about the origin; measure scales by |scale| exactly."""
        s = as_fraction(scale)
        if self.is_empty:
            return self
        if s == 0:
            return IntervalUnion([Interval(Fraction(0), Fraction(0))])
        if s > 0:
            return IntervalUnion(Interval(p.lo * s, p.hi * s) for p in self.parts)
        return IntervalUnion(Interval(p.hi * s, p.lo * s) for p in self.parts)

    def __add__(self, other: "IntervalUnion") -> "IntervalUnion":
        """Minkowski sum: all pairwise part sums, re-canonicalized.

        Internally the endpoints are rescaled to a common denominator so
        the sort and merge run on plain integers; the result is exact.
        """
        if not isinstance(other, IntervalUnion):
            return NotImplemented
        if not self.parts or not other.parts:
            return IntervalUnion()
        scale = _common_denominator(self.parts, other.parts)
        left = _scaled_endpoints(self.parts, scale)
        right = _scaled_endpoints(other.parts, scale)
        pairs = [(alo + blo, ahi + bhi) for alo, ahi in left for blo, bhi in right]
        pairs.sort()
        merged: list[list[int]] = []
        for lo, hi in pairs:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        return _from_scaled(merged, scale)

    def hfold(self, h: int) -> "IntervalUnion":
        """h-fold Minkowski sum of the union with itself (h >= 1)."""
        if not isinstance(h, int) or isinstance(h, bool) or h < 1:
            raise ValueError(f"fold count must be a positive integer, got {h!r}")
        result = self
        for _ in range(h - 1):
            result = result + self
        return result

    def subtract(self, other: "IntervalUnion") -> "IntervalUnion":
        """Remove the interiors of ``other``'s parts, keeping all endpoints.

        The subtrahend is treated as a union of open intervals, so the
        result is again a closed union; single-point parts of ``other``
        remove nothing.
        """
        if not self.parts or not other.parts:
            return self
        pieces: list[Interval] = []
        for part in self.parts:
            cursor = part.lo
            for gap in other.parts:
                if gap.hi <= cursor:
                    continue
                if gap.lo > part.hi:
                    break
                if gap.lo >= cursor:
                    pieces.append(Interval(cursor, min(gap.lo, part.hi)))
                cursor = gap.hi
                if cursor > part.hi:
                    break
            if cursor <= part.hi:
                pieces.append(Interval(cursor, part.hi))
        return IntervalUnion(pieces)

    def __repr__(self) -> str:
        if not self.parts:
            return "IntervalUnion()"
        return "IntervalUnion(" + " | ".join(repr(p) for p in self.parts) + ")"


def _common_denominator(*part_groups: tuple[Interval, ...]) -> int:
    scale = 1
    for parts in part_groups:
        for p in parts:
            scale = math.lcm(scale, p.lo.denominator, p.hi.denominator)
    return scale


def _scaled_endpoints(parts: tuple[Interval, ...], scale: int) -> list[tuple[int, int]]:
    return [
        (p.lo.numerator * (scale // p.lo.denominator), p.hi.numerator * (scale // p.hi.denominator))
        for p in parts
    ]


def _from_scaled(pairs: list[list[int]], scale: int) -> IntervalUnion:
    # The integer pairs are already sorted and merged, so skip _merge.
    union = IntervalUnion.__new__(IntervalUnion)
    parts = tuple(Interval(Fraction(lo, scale), Fraction(hi, scale)) for lo, hi in pairs)
    object.__setattr__(union, "parts", parts)
    return union


def grid_measure_oracle(union: IntervalUnion, step: Rational) -> tuple[Fraction, Fraction]:
    """Bracket the measure by counting grid cells of width ``step``.

    Returns ``(inner, outer)`` where inner counts cells [k*step, (k+1)*step]
    fully inside the union and outer counts cells meeting it in positive
    length. Always inner <= measure <= outer, and the gap is at most
    2*step per part, which makes this an independent cross-check on
    ``measure`` rather than a reimplementation of it.
    """
    g = as_fraction(step)
    if g <= 0:
        raise ValueError(f"grid step must be positive, got {g}")
    inner_cells = 0
    outer_cells = 0
    prev_touch_last: int | None = None
    for part in union.parts:
        if part.lo == part.hi:
            continue
        first_full = math.ceil(part.lo / g)
        last_full = math.floor(part.hi / g) - 1
        if last_full >= first_full:
            inner_cells += last_full - first_full + 1
        first_touch = math.floor(part.lo / g)
        last_touch = math.ceil(part.hi / g) - 1
        if prev_touch_last is not None and first_touch <= prev_touch_last:
            first_touch = prev_touch_last + 1
        if last_touch >= first_touch:
            outer_cells += last_touch - first_touch + 1
            prev_touch_last = last_touch
    return g * inner_cells, g * outer_cells
