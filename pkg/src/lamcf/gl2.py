"""Unimodular 2x2 integer matrices acting on the hyperbolic plane.

Covers exact multiplication and inversion, the isometry trichotomy,
boundary fixed points, translation axes, congruence-subgroup membership
at a level, and decomposition into continued-fraction generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (IdentityMatrix, NotDecomposable, NotDeterminantOne,
                     NotHyperbolic, NotUnimodular, PoleAt)
from .surd import QuadSurd, surd_or_fraction


class _Infinity:
    """The boundary point at infinity (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class IntMat2:
    """Integer matrix (a b; c d) with determinant +1 or -1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise NotUnimodular(
                f"det {self.a * self.d - self.b * self.c} is not +/-1")

    @classmethod
    def identity(cls) -> "IntMat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, n: int) -> "IntMat2":
        """(1 n; 0 1), the leading translation factor."""
        return cls(1, n, 0, 1)

    @classmethod
    def cf_generator(cls, q: int) -> "IntMat2":
        """(0 1; 1 q), the basic continued-fraction generator."""
        return cls(0, 1, 1, q)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __mul__(self, other: "IntMat2") -> "IntMat2":
        if not isinstance(other, IntMat2):
            return NotImplemented
        return IntMat2(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def inverse(self) -> "IntMat2":
        det = self.det
        if det == 1:
            return IntMat2(self.d, -self.b, -self.c, self.a)
        return IntMat2(-self.d, self.b, self.c, -self.a)

    def __pow__(self, n: int) -> "IntMat2":
        base = self if n >= 0 else self.inverse()
        out = IntMat2.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate_by(self, g: "IntMat2") -> "IntMat2":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


class IsometryClass(Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


def classify(m: IntMat2) -> IsometryClass:
    """Isometry trichotomy by |trace| against 2; determinant must be +1."""
    if m.det != 1:
        raise NotDeterminantOne("classification needs det +1")
    t = abs(m.trace)
    if t > 2:
        return IsometryClass.HYPERBOLIC
    if t == 2:
        return IsometryClass.PARABOLIC
    return IsometryClass.ELLIPTIC


def fixed_points(m: IntMat2):
    """Boundary fixed points of m, exactly.

    Solutions of c x^2 + (d - a) x - b = 0.  With c = 0 the point at
    infinity is always fixed and the finite point (if any) is b/(d-a).
    Hyperbolic matrices give a pair of conjugate quadratic surds,
    parabolic ones a single rational (or infinity), elliptic ones fix
    nothing on the boundary.
    """
    if m.det != 1:
        raise NotDeterminantOne("fixed points need det +1")
    if (m.a, m.b, m.c, m.d) in ((1, 0, 0, 1), (-1, 0, 0, -1)):
        raise IdentityMatrix("identity fixes every boundary point")
    if m.c == 0:
        if m.a == m.d:
            return (INFINITY,)
        return (INFINITY, Fraction(m.b, m.d - m.a))
    disc = m.trace * m.trace - 4
    if disc < 0:
        return ()
    if disc == 0:
        return (Fraction(m.a - m.d, 2 * m.c),)
    lo = surd_or_fraction(m.a - m.d, -1, 2 * m.c, disc)
    hi = surd_or_fraction(m.a - m.d, 1, 2 * m.c, disc)
    if hi < lo:
        lo, hi = hi, lo
    return (lo, hi)


def _axis_length(trace: int) -> float:
    """Translation length 2*arccosh(|t|/2), stable for huge traces."""
    t = abs(trace)
    if t <= 2:
        raise NotHyperbolic(f"|trace| = {t} <= 2")
    if t < 2 ** 48:
        return 2.0 * math.acosh(t / 2.0)
    # 2*arccosh(t/2) = 2*log((t + sqrt(t^2 - 4)) / 2); the floor in isqrt
    # costs a relative error around 1/t^2, invisible at this size.
    return 2.0 * (math.log(t + math.isqrt(t * t - 4)) - math.log(2))


@dataclass(frozen=True)
class Axis:
    """Oriented-length-free geodesic axis of a hyperbolic matrix."""

    endpoints: tuple
    trace: int
    length: float


def axis_of(m: IntMat2) -> Axis:
    """Axis of a hyperbolic matrix: endpoint pair plus translation length."""
    if classify(m) is not IsometryClass.HYPERBOLIC:
        raise NotHyperbolic(f"{m} has |trace| <= 2")
    return Axis(fixed_points(m), m.trace, _axis_length(m.trace))


def in_hecke(m: IntMat2, level: int) -> bool:
    """Membership in the level subgroup: det +1 and c divisible by level."""
    if level < 1:
        raise ValueError("level must be >= 1")
    return m.det == 1 and m.c % level == 0


def _euclid_terms(num: int, den: int) -> list[int]:
    """Regular continued-fraction terms of num/den >= 0, den >= 1."""
    terms = []
    while den:
        q, rem = divmod(num, den)
        terms.append(q)
        num, den = den, rem
    return terms


def decompose_to_cf_generators(m: IntMat2) -> tuple[tuple[int, ...], int]:
    """Write m as (1 p0; 0 1) * prod (0 1; 1 q_i) with q_i >= 1, p0 >= 0.

    Returns (terms, p0).  The bottom row of such a product is a pair of
    consecutive continuant denominators, so the word is recovered by the
    Euclidean expansion of d/c read in reverse; the two expansions of a
    rational cover the trailing-1 ambiguity and at most one reconstructs
    the full matrix.
    """
    if m.c == 0:
        if m.a == 1 and m.d == 1 and m.b >= 0:
            return (), m.b
        raise NotDecomposable(f"{m} is not a nonnegative translation")
    if m.c < 0 or m.d < 1 or m.d < m.c:
        raise NotDecomposable(f"{m} has no positive-term generator word")
    expansion = _euclid_terms(m.d, m.c)
    candidates = [expansion]
    if expansion[-1] >= 2:
        candidates.append(expansion[:-1] + [expansion[-1] - 1, 1])
    for cand in candidates:
        word = cand[::-1]
        if any(w < 1 for w in word):
            continue
        prod = IntMat2.identity()
        for w in word:
            prod = prod * IntMat2.cf_generator(w)
        if prod.c != m.c or prod.d != m.d:
            continue
        rem = m.a - prod.a
        if rem % prod.c:
            continue
        p0 = rem // prod.c
        if p0 < 0 or prod.b + p0 * prod.d != m.b:
            continue
        return tuple(word), p0
    raise NotDecomposable(f"{m} is not a product of positive generators")


def mobius_apply(m: IntMat2, z):
    """(a z + b)/(c z + d) in the arithmetic of z (Fraction, float, complex).

    With det +1 this preserves the upper half-plane; a det -1 matrix sends
    it to the lower half-plane, which is fine for boundary evaluation.
    """
    if isinstance(z, int):
        z = Fraction(z)
    den = m.c * z + m.d
    if den == 0:
        raise PoleAt(z)
    return (m.a * z + m.b) / den
