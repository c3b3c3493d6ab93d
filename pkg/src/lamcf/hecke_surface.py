"""Arithmetic invariants of the level-N modular surface.

The closed formulas for index, cusp count, elliptic point counts and
genus, plus an independent brute-force index count over the projective
line mod N used to cross-validate them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLevel, LevelTooLarge

BRUTE_FORCE_LIMIT = 10_000


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; levels stay desk-sized."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    out = n
    for p in _factorize(n):
        out = out // p * (p - 1)
    return out


def _divisors(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _symbol_minus_one(p: int) -> int:
    """Kronecker-style symbol (-1|p) with the p = 2 convention giving 0."""
    if p == 2:
        return 0
    return 1 if p % 4 == 1 else -1


def _symbol_minus_three(p: int) -> int:
    """(-3|p); zero at p = 3, -1 at p = 2, quadratic character otherwise."""
    if p == 3:
        return 0
    if p == 2:
        return -1
    return 1 if p % 3 == 1 else -1


@dataclass(frozen=True)
class SurfaceInvariants:
    """Index, cusp and elliptic counts, and genus at one level."""

    level: int
    index: int
    cusps: int
    elliptic2: int
    elliptic3: int
    genus: int

    def __post_init__(self):
        lhs = 12 * (self.genus - 1) + 3 * self.elliptic2 \
            + 4 * self.elliptic3 + 6 * self.cusps
        if lhs != self.index or self.genus < 0:
            raise ValueError(f"inconsistent surface data at level {self.level}")


def surface_invariants(level: int) -> SurfaceInvariants:
    """All arithmetic invariants of the surface at the given level."""
    if level < 1:
        raise InvalidLevel(f"level {level} < 1")
    factors = _factorize(level)
    index = level
    for p in factors:
        index = index // p * (p + 1)
    cusps = sum(euler_phi(math.gcd(d, level // d)) for d in _divisors(factors))
    if level % 4 == 0:
        elliptic2 = 0
    else:
        elliptic2 = math.prod(1 + _symbol_minus_one(p) for p in factors)
    if level % 9 == 0:
        elliptic3 = 0
    else:
        elliptic3 = math.prod(1 + _symbol_minus_three(p) for p in factors)
    genus = 1 + Fraction(index, 12) - Fraction(elliptic2, 4) \
        - Fraction(elliptic3, 3) - Fraction(cusps, 2)
    if genus.denominator != 1:
        raise ArithmeticError(f"non-integral genus at level {level}")
    return SurfaceInvariants(level, index, cusps, elliptic2, elliptic3,
                             int(genus))


def index_bruteforce(level: int) -> int:
    """Index by counting the projective line mod N, no closed formula.

    Counts pairs (c, d) mod N with gcd(c, d, N) = 1 and divides by the
    number of units, which is the exact orbit size because units act
    freely on such pairs.  Both counts come from enumeration.
    """
    if level < 1:
        raise InvalidLevel(f"level {level} < 1")
    if level > BRUTE_FORCE_LIMIT:
        raise LevelTooLarge(f"level {level} > {BRUTE_FORCE_LIMIT}")
    import numpy as np

    residues = np.arange(level, dtype=np.int64)
    units = int(np.count_nonzero(np.gcd(residues, level) == 1))
    total = 0
    chunk = max(1, 2_000_000 // level)
    for lo in range(0, level, chunk):
        grid = np.gcd.outer(residues[lo:lo + chunk], residues)
        total += int(np.count_nonzero(np.gcd(grid, level) == 1))
    if total % units:
        raise ArithmeticError("unit action failed to partition the pairs")
    return total // units
