"""Exact real quadratic surds (p + q*sqrt(D)) / r.

The representation is normalized at construction: square factors of the
radicand are folded into q, gcd(p, q, r) = 1 and r > 0.  Square
extraction trial-divides only up to a fixed bound, because the full
square kernel of a huge radicand is as hard as factoring it; D is
therefore square-free whenever its prime factors are small, but two
equal values may carry different (q, D) pairs.  Equality, ordering and
mixed-operand arithmetic are all representation independent, deciding
"same quadratic field" by a perfect-square test on D1*D2 instead of
trusting the radicands to be reduced.

A value that collapses to a rational is never represented here;
``surd_or_fraction`` returns a ``fractions.Fraction`` in that case.  All
arithmetic is exact; the only approximation entry point is ``approx``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# trial-division ceiling for square extraction at construction
SMALL_FACTOR_BOUND = 10_000


def squarefree_split(n: int, bound: int | None = None) -> tuple[int, int]:
    """Split n > 0 as s*s*d, pulling square factors out into s.

    With bound=None the split is exhaustive and d is square-free.  A
    finite bound stops trial division there and only folds a remaining
    perfect-square cofactor, so square factors built from primes above
    the bound can survive inside d.
    """
    if n < 1:
        raise ValueError("radicand must be positive")
    s, d = 1, n
    f = 2
    while f * f <= d and (bound is None or f <= bound):
        while d % (f * f) == 0:
            d //= f * f
            s *= f
        f += 1
    if d > 1:
        root = math.isqrt(d)
        if root * root == d:
            s, d = s * root, 1
    return s, d


def surd_or_fraction(p: int, q: int, r: int, D: int):
    """Build (p + q*sqrt(D))/r, collapsing to a Fraction when rational."""
    if r == 0:
        raise ZeroDivisionError("zero denominator")
    if q == 0 or D == 0:
        return Fraction(p, r)
    s, d = squarefree_split(D, SMALL_FACTOR_BOUND)
    if d == 1:
        return Fraction(p + q * s, r)
    return QuadSurd(p, q * s, r, d)


@dataclass(frozen=True, eq=False)
class QuadSurd:
    """A real quadratic irrational, kept in lowest normalized terms."""

    p: int
    q: int
    r: int
    D: int

    def __post_init__(self):
        if self.r == 0:
            raise ValueError("zero denominator")
        if self.q == 0:
            raise ValueError("q = 0 is rational; use Fraction")
        s, d = squarefree_split(self.D, SMALL_FACTOR_BOUND)
        if d == 1:
            raise ValueError("perfect-square radicand is rational; use Fraction")
        p, q, r = self.p, self.q * s, self.r
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "D", d)

    # -- identity -----------------------------------------------------

    def _signed_radical_square(self) -> Fraction:
        # sign(q) * (q*sqrt(D)/r)^2 pins the radical part of the value
        return Fraction(self.q * abs(self.q) * self.D, self.r * self.r)

    def __eq__(self, other):
        if isinstance(other, QuadSurd):
            return (Fraction(self.p, self.r) == Fraction(other.p, other.r)
                    and self._signed_radical_square()
                    == other._signed_radical_square())
        if isinstance(other, (int, Fraction)):
            return False  # the value is irrational
        return NotImplemented

    def __hash__(self):
        return hash((Fraction(self.p, self.r), self._signed_radical_square()))

    @classmethod
    def sqrt(cls, n: int) -> "QuadSurd":
        return cls(0, 1, 1, n)

    # -- exact queries ------------------------------------------------

    def sign(self) -> int:
        """Sign of the value, decided by integer arithmetic only."""
        if self.p >= 0 and self.q > 0:
            return 1
        if self.p <= 0 and self.q < 0:
            return -1
        # p and q have opposite signs: compare p^2 against q^2 D
        lhs, rhs = self.p * self.p, self.q * self.q * self.D
        if self.p > 0:
            return 1 if lhs > rhs else -1
        return 1 if lhs < rhs else -1

    def floor(self) -> int:
        # floor(q*sqrt(D)) is isqrt(q^2 D) for q > 0 and -isqrt-1 for q < 0;
        # the value is irrational, so the fractional part never vanishes.
        s = math.isqrt(self.q * self.q * self.D)
        t = s if self.q > 0 else -s - 1
        return (self.p + t) // self.r

    __floor__ = floor

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.p, -self.q, self.r, self.D)

    def approx(self, bits: int = 64) -> Fraction:
        """Rational approximation with absolute error below 2**-bits."""
        t = math.isqrt(self.q * self.q * self.D << (2 * bits))
        if self.q < 0:
            t = -t - 1
        return Fraction((self.p << bits) + t, self.r << bits)

    def __float__(self) -> float:
        return float(self.approx(96))

    # -- arithmetic ---------------------------------------------------

    def _unpack(self, other):
        """Other as a (p, q, r) triple over this surd's radicand.

        A surd with a different D is accepted when both generate the
        same field, i.e. D1*D2 is a perfect square; then sqrt(D2) =
        (u/D1)*sqrt(D1) with u = sqrt(D1*D2), and scaling by D1 clears
        the division.
        """
        if isinstance(other, QuadSurd):
            if other.D == self.D:
                return other.p, other.q, other.r
            u = math.isqrt(self.D * other.D)
            if u * u != self.D * other.D:
                raise ValueError("mixed radicands")
            return other.p * self.D, other.q * u, other.r * self.D
        if isinstance(other, int):
            return other, 0, 1
        if isinstance(other, Fraction):
            return other.numerator, 0, other.denominator
        return None

    def __add__(self, other):
        t = self._unpack(other)
        if t is None:
            return NotImplemented
        p2, q2, r2 = t
        return surd_or_fraction(self.p * r2 + p2 * self.r,
                                self.q * r2 + q2 * self.r,
                                self.r * r2, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.p, -self.q, self.r, self.D)

    def __sub__(self, other):
        t = self._unpack(other)
        if t is None:
            return NotImplemented
        p2, q2, r2 = t
        return surd_or_fraction(self.p * r2 - p2 * self.r,
                                self.q * r2 - q2 * self.r,
                                self.r * r2, self.D)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        t = self._unpack(other)
        if t is None:
            return NotImplemented
        p2, q2, r2 = t
        return surd_or_fraction(self.p * p2 + self.q * q2 * self.D,
                                self.p * q2 + self.q * p2,
                                self.r * r2, self.D)

    __rmul__ = __mul__

    def _reciprocal(self):
        # 1 / ((p + q sqrt D)/r) = r (p - q sqrt D) / (p^2 - q^2 D)
        norm = self.p * self.p - self.q * self.q * self.D
        return surd_or_fraction(self.r * self.p, -self.r * self.q, norm, self.D)

    def __truediv__(self, other):
        t = self._unpack(other)
        if t is None:
            return NotImplemented
        if isinstance(other, QuadSurd):
            return self * other._reciprocal()
        p2, _, r2 = t
        if p2 == 0:
            raise ZeroDivisionError("division by zero")
        return surd_or_fraction(self.p * r2, self.q * r2, self.r * p2, self.D)

    def __rtruediv__(self, other):
        return self._reciprocal() * other

    def __abs__(self):
        return self if self.sign() > 0 else -self

    def mobius_image(self, a: int, b: int, c: int, d: int):
        """Exact (a*x + b)/(c*x + d) at x = self; Fraction if it collapses."""
        np_, nq = a * self.p + b * self.r, a * self.q
        dp_, dq = c * self.p + d * self.r, c * self.q
        norm = dp_ * dp_ - dq * dq * self.D
        if norm == 0:
            raise ZeroDivisionError("Moebius denominator vanishes")
        return surd_or_fraction(np_ * dp_ - nq * dq * self.D,
                                nq * dp_ - np_ * dq,
                                norm, self.D)

    # -- comparisons --------------------------------------------------

    def _diff_sign(self, other) -> int:
        diff = self - other
        if diff is NotImplemented:
            raise TypeError(f"cannot compare QuadSurd with {type(other).__name__}")
        if isinstance(diff, Fraction):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __lt__(self, other):
        return self._diff_sign(other) < 0

    def __le__(self, other):
        return self._diff_sign(other) <= 0

    def __gt__(self, other):
        return self._diff_sign(other) > 0

    def __ge__(self, other):
        return self._diff_sign(other) >= 0

    def __str__(self) -> str:
        root = f"sqrt({self.D})"
        if self.q == -1:
            num = f"-{root}"
        elif self.q == 1:
            num = root
        else:
            num = f"{self.q}*{root}"
        if self.p:
            num = f"{self.p}{'+' if self.q > 0 else ''}{num}"
        if self.r == 1:
            return num
        return f"({num})/{self.r}"
