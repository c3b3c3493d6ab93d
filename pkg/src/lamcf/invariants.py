"""Singularity data and the complete lamination invariant.

Singularity orders are positive half-integers k_i summing to 2g - 2;
they are stored doubled, as integers, so every sum and comparison stays
exact.  Each order corresponds to a polygon with 2k_i + 2 >= 3 sides and
hyperbolic area (2k_i) * pi.  The complete invariant pairs the boundary
expansion (a tail class) with the singularity data at a fixed level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .cf_core import CFKind, RegularCF, TailDecision, canonicalize, tail_equivalent
from .errors import (EmptyStream, GenusOutOfRange, GenusTooSmall,
                     InvalidDeltaForLevel, LevelMismatch, PartTooSmall,
                     SumMismatch)
from .hecke_surface import surface_invariants
from .legendre import LegendreStep

MAX_ENUMERATION_GENUS = 30


@dataclass(frozen=True)
class SingularityData:
    """Multiset of doubled singularity orders at a given genus."""

    doubled: tuple[int, ...]
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        parts = tuple(sorted(self.doubled, reverse=True))
        for part in parts:
            if part < 1:
                raise PartTooSmall(f"doubled order {part} < 1")
        target = 4 * self.genus - 4
        # genus 0 and 1 carry no singularities; only the empty multiset fits
        if parts or self.genus >= 2:
            if sum(parts) != target:
                raise SumMismatch(Fraction(sum(parts), 2), Fraction(target, 2))
        object.__setattr__(self, "doubled", parts)

    @classmethod
    def from_halves(cls, parts: Iterable, genus: int) -> "SingularityData":
        """Build from half-integer orders given as ints or Fractions."""
        doubled = []
        for part in parts:
            two = 2 * Fraction(part)
            if two.denominator != 1:
                raise PartTooSmall(f"order {part} is not a half-integer")
            doubled.append(int(two))
        return cls(tuple(doubled), genus)

    @property
    def halves(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def polygon_sizes(self) -> tuple[int, ...]:
        """Side counts 2k_i + 2, each at least 3."""
        return tuple(d + 2 for d in self.doubled)

    def __str__(self) -> str:
        return "(" + ", ".join(str(h) for h in self.halves) + ")"


def validate_delta(parts: Iterable, genus: int) -> SingularityData:
    """Check and normalize singularity orders for a surface of genus >= 2."""
    if genus < 2:
        raise GenusTooSmall(f"genus {genus} < 2")
    return SingularityData.from_halves(parts, genus)


def polygon_areas(delta: SingularityData) -> tuple[int, ...]:
    """Polygon areas as integer multiples of pi.

    A 2k+2-gon with all vertices on the boundary has area 2k * pi, which
    is exactly the doubled order, so the total is (4g - 4) * pi.
    """
    return delta.doubled


def _partitions_desc(n: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n with descending parts, largest first part first."""
    if n == 0:
        yield ()
        return
    top = n if cap is None else min(n, cap)
    for first in range(top, 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


def enumerate_delta(genus: int) -> list[SingularityData]:
    """Every admissible singularity datum at the genus, in a fixed order.

    The list enumerates the partitions of 4g - 4 with parts sorted
    descending, ordered lexicographically by those sorted parts.
    """
    if not 2 <= genus <= MAX_ENUMERATION_GENUS:
        raise GenusOutOfRange(
            f"genus {genus} outside 2..{MAX_ENUMERATION_GENUS}")
    return [SingularityData(parts, genus)
            for parts in _partitions_desc(4 * genus - 4)]


class InvariantDecision(Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not_equal"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class LaminationInvariant:
    """The pair (tail class, singularity data) at a fixed level."""

    theta: RegularCF
    delta: SingularityData
    level: int

    def __post_init__(self):
        object.__setattr__(self, "theta", canonicalize(self.theta))
        genus = surface_invariants(self.level).genus
        if self.delta.genus != genus:
            raise InvalidDeltaForLevel(
                f"data for genus {self.delta.genus} on a genus-{genus} surface")

    @property
    def approximate(self) -> bool:
        """True when theta is only a finite prefix of the expansion."""
        return self.theta.kind is CFKind.PREFIX


def invariant_equal(one: LaminationInvariant,
                    other: LaminationInvariant) -> InvariantDecision:
    """Three-valued equality of complete invariants on one surface.

    Singularity data is compared as an exact multiset; the tails through
    tail_equivalent, whose Unknown propagates when a bare prefix cannot
    settle the question.
    """
    if one.level != other.level:
        raise LevelMismatch(f"levels {one.level} and {other.level} differ")
    if one.delta != other.delta:
        return InvariantDecision.NOT_EQUAL
    tails = tail_equivalent(one.theta, other.theta)
    if tails is TailDecision.EQUIVALENT:
        return InvariantDecision.EQUAL
    if tails is TailDecision.NOT_EQUIVALENT:
        return InvariantDecision.NOT_EQUAL
    return InvariantDecision.UNKNOWN


def invariant_of_stream(steps: Sequence[LegendreStep],
                        delta: SingularityData,
                        level: int) -> LaminationInvariant:
    """Package a construction stream as an approximate invariant.

    The emitted terms become a bare-prefix theta; p0 is recovered from
    the first product matrix, whose top-left entry it is.
    """
    steps = list(steps)
    if not steps:
        raise EmptyStream("no steps emitted")
    if [s.k for s in steps] != list(range(1, len(steps) + 1)):
        raise ValueError("steps must be consecutive from k = 1")
    p0 = steps[0].gamma.a
    terms = (p0,) + tuple(s.term for s in steps)
    theta = RegularCF.prefix_only(terms)
    return LaminationInvariant(theta, delta, level)
