"""Exact arithmetic on finite unions of closed 1-D intervals.

Endpoints are Fractions, so fattening, merging, and Lebesgue measure are
exact.  Downstream checks assert equalities like 10/9 on the nose, which
is why nothing here ever rounds.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from ..errors import DomainError
from ..numeric import as_fraction

Span = Tuple[Fraction, Fraction]  # (start, length), length > 0


def _normalize(pairs: Iterable[tuple]) -> tuple[Span, ...]:
    spans = []
    for start, length in pairs:
        s, l = as_fraction(start), as_fraction(length)
        if l <= 0:
            raise DomainError(f"interval length must be positive, got {l}")
        spans.append((s, l))
    spans.sort()
    merged: list[list[Fraction]] = []
    for s, l in spans:
        if merged and s <= merged[-1][0] + merged[-1][1]:
            # touching counts as overlapping: closed intervals share the point
            end = max(merged[-1][0] + merged[-1][1], s + l)
            merged[-1][1] = end - merged[-1][0]
        else:
            merged.append([s, l])
    return tuple((s, l) for s, l in merged)


@dataclass(frozen=True)
class IntervalUnion:
    """Sorted, pairwise-disjoint closed intervals as (start, length) pairs."""

    intervals: Tuple[Span, ...]

    def __post_init__(self):
        prev_end = None
        for s, l in self.intervals:
            if l <= 0:
                raise DomainError("non-positive interval length")
            if prev_end is not None and s <= prev_end:
                raise DomainError("intervals not normalized; use from_pairs")
            prev_end = s + l

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> "IntervalUnion":
        """Build from (start, length) pairs, merging overlap and touching."""
        return cls(_normalize(pairs))

    @classmethod
    def from_endpoints(cls, spans: Iterable[tuple]) -> "IntervalUnion":
        """Build from (a, b) endpoint pairs with a < b."""
        return cls.from_pairs((a, as_fraction(b) - as_fraction(a)) for a, b in spans)

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return cls(())

    @property
    def count(self) -> int:
        return len(self.intervals)

    @property
    def measure(self) -> Fraction:
        return sum((l for _, l in self.intervals), Fraction(0))

    def starts(self) -> tuple[Fraction, ...]:
        return tuple(s for s, _ in self.intervals)

    def endpoints(self) -> tuple[Fraction, ...]:
        """All interval endpoints, left to right."""
        out = []
        for s, l in self.intervals:
            out.append(s)
            out.append(s + l)
        return tuple(out)

    def midpoints(self) -> tuple[Fraction, ...]:
        return tuple(s + l / 2 for s, l in self.intervals)

    def fatten(self, eps) -> "IntervalUnion":
        """Closed eps-neighborhood: each interval grows by eps on both sides."""
        e = as_fraction(eps)
        if e < 0:
            raise DomainError("eps must be nonnegative")
        if e == 0:
            return self
        return IntervalUnion.from_pairs((s - e, l + 2 * e) for s, l in self.intervals)

    def contains(self, x) -> bool:
        v = as_fraction(x)
        i = bisect_right(self.intervals, (v, Fraction(0)))
        if i < len(self.intervals) and self.intervals[i][0] == v:
            return True
        if i == 0:
            return False
        s, l = self.intervals[i - 1]
        return s <= v <= s + l

    def is_subset_of(self, other: "IntervalUnion") -> bool:
        """True when every interval here sits inside one interval of other."""
        other_starts = other.starts()
        for s, l in self.intervals:
            i = bisect_right(other_starts, s)
            if i == 0:
                return False
            os, ol = other.intervals[i - 1]
            if not (os <= s and s + l <= os + ol):
                return False
        return True

    def __iter__(self):
        return iter(self.intervals)
