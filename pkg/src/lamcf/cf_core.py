"""Regular continued fractions with exact evaluation and tail classes.

A fraction [p0, p1, p2, ...] has p0 >= 0 and every later term >= 1.  It
comes in three kinds: finite (a rational), eventually periodic (a real
quadratic irrational), and a bare prefix of an unknown infinite
expansion.  Everything here is exact integer arithmetic; the matrix form
of a fraction is the product

    (1 p0; 0 1) * (0 1; 1 p1) * ... * (0 1; 1 pn)

whose columns carry the convergents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (DepthExceeded, ImageNotPositive, InvalidTerm,
                     NegativeInput, PeriodNotFound)
from .gl2 import IntMat2
from .surd import QuadSurd, surd_or_fraction

DEFAULT_MAX_TERMS = 100_000


class CFKind(Enum):
    FINITE = "finite"
    PERIODIC = "periodic"
    PREFIX = "prefix"


class TailDecision(Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    UNKNOWN = "unknown"


def _check_terms(terms: Sequence[int], *, first_is_p0: bool, label: str):
    for i, t in enumerate(terms):
        if not isinstance(t, int):
            raise InvalidTerm(f"{label} term {t!r} is not an integer")
        floor_ = 0 if (first_is_p0 and i == 0) else 1
        if t < floor_:
            raise InvalidTerm(f"{label} term {t} below {floor_} at index {i}")


@dataclass(frozen=True)
class RegularCF:
    """A regular continued fraction of one of the three kinds."""

    kind: CFKind
    prefix: tuple[int, ...]
    period: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind is CFKind.PERIODIC:
            if not self.period:
                raise InvalidTerm("periodic fraction needs a nonempty period")
            _check_terms(self.prefix, first_is_p0=True, label="prefix")
            _check_terms(self.period, first_is_p0=False, label="period")
        else:
            if self.period is not None:
                raise InvalidTerm(f"{self.kind.value} fraction cannot carry a period")
            if not self.prefix:
                raise InvalidTerm("at least one term is required")
            _check_terms(self.prefix, first_is_p0=True, label="prefix")

    # -- constructors -------------------------------------------------

    @classmethod
    def finite(cls, terms: Iterable[int]) -> "RegularCF":
        return cls(CFKind.FINITE, tuple(terms))

    @classmethod
    def periodic(cls, prefix: Iterable[int], period: Iterable[int]) -> "RegularCF":
        return cls(CFKind.PERIODIC, tuple(prefix), tuple(period))

    @classmethod
    def prefix_only(cls, terms: Iterable[int]) -> "RegularCF":
        return cls(CFKind.PREFIX, tuple(terms))

    # -- term access --------------------------------------------------

    def first_terms(self, n: int, *, clamp: bool = False) -> tuple[int, ...]:
        """The first n terms; clamp=True truncates finite fractions quietly."""
        if n < 0:
            raise DepthExceeded("negative depth")
        if self.kind is CFKind.PERIODIC:
            out = list(self.prefix)
            while len(out) < n:
                out.extend(self.period)
            return tuple(out[:n])
        if n > len(self.prefix):
            if clamp and self.kind is CFKind.FINITE:
                return self.prefix
            raise DepthExceeded(f"only {len(self.prefix)} terms available")
        return self.prefix[:n]

    @property
    def is_canonical(self) -> bool:
        if self.kind is CFKind.FINITE:
            return len(self.prefix) == 1 or self.prefix[-1] >= 2
        if self.kind is CFKind.PREFIX:
            return True
        if _primitive_word(self.period) != self.period:
            return False
        return not (self.prefix and self.prefix[-1] == self.period[-1])

    def __str__(self) -> str:
        body = ", ".join(str(t) for t in self.prefix)
        if self.kind is CFKind.PERIODIC:
            per = ", ".join(str(t) for t in self.period)
            sep = ", " if self.prefix else ""
            return f"[{body}{sep}({per})]"
        if self.kind is CFKind.PREFIX:
            return f"[{body}, ...]"
        return f"[{body}]"


# ---------------------------------------------------------------------
# convergents


def _convergent_pair(terms: Sequence[int]) -> tuple[int, int, int, int]:
    """(h_n, h_{n-1}, k_n, k_{n-1}) for the given terms; empty gives (1,0,0,1)."""
    h, hp = 1, 0   # h_{-1}, h_{-2}
    k, kp = 0, 1   # k_{-1}, k_{-2}
    for t in terms:
        h, hp = t * h + hp, h
        k, kp = t * k + kp, k
    return h, hp, k, kp


def expand_rational(x) -> RegularCF:
    """Canonical finite expansion of a nonnegative rational."""
    x = Fraction(x)
    if x < 0:
        raise NegativeInput(f"{x} is negative")
    num, den = x.numerator, x.denominator
    terms = []
    while den:
        q, rem = divmod(num, den)
        terms.append(q)
        num, den = den, rem
    return RegularCF.finite(terms)


def eval_cf(cf: RegularCF, depth: int | None = None) -> Fraction:
    """Convergent h_depth / k_depth as an exact Fraction.

    depth=None means every available term; an eventually periodic
    fraction has no final term, so it requires an explicit depth.  Depths
    beyond the end of a finite fraction are clamped to its length.
    """
    if depth is None:
        if cf.kind is CFKind.PERIODIC:
            raise DepthExceeded("periodic fraction needs an explicit depth")
        n = len(cf.prefix)
    else:
        if depth < 0:
            raise DepthExceeded("negative depth")
        n = depth + 1
    terms = cf.first_terms(n, clamp=cf.kind is CFKind.FINITE)
    h, _, k, _ = _convergent_pair(terms)
    return Fraction(h, k)


def cf_to_matrix(cf: RegularCF, depth: int) -> IntMat2:
    """(1 p0; 0 1) * (0 1; 1 p1) * ... * (0 1; 1 p_depth), determinant (-1)^depth."""
    if depth < 0:
        raise DepthExceeded("negative depth")
    terms = cf.first_terms(depth + 1)
    m = IntMat2.translation(terms[0])
    for t in terms[1:]:
        m = m * IntMat2.cf_generator(t)
    return m


# ---------------------------------------------------------------------
# canonical forms


def _primitive_word(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for length in range(1, n + 1):
        if n % length == 0 and word[:length] * (n // length) == word:
            return word[:length]
    return word


def canonicalize(cf: RegularCF) -> RegularCF:
    """Unique normal form of a fraction.

    Finite: a trailing 1 folds into the previous term, so the last term
    is >= 2 unless the fraction is a single term.  Eventually periodic:
    the period is made primitive, then any prefix tail that matches the
    end of the period is absorbed by rotating the period, which makes the
    pre-period minimal.  Bare prefixes are already canonical.
    """
    if cf.kind is CFKind.FINITE:
        if len(cf.prefix) >= 2 and cf.prefix[-1] == 1:
            terms = cf.prefix[:-2] + (cf.prefix[-2] + 1,)
            return RegularCF.finite(terms)
        return cf
    if cf.kind is CFKind.PREFIX:
        return cf
    period = _primitive_word(cf.period)
    prefix = cf.prefix
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1:] + period[:-1]
    if prefix == cf.prefix and period == cf.period:
        return cf
    return RegularCF.periodic(prefix, period)


# ---------------------------------------------------------------------
# quadratic surds


def expand_surd(x: QuadSurd, max_terms: int = DEFAULT_MAX_TERMS) -> RegularCF:
    """Exact eventually periodic expansion of a positive quadratic surd.

    Runs the classical (P + sqrt(d))/Q recurrence with d = q^2 D and
    detects the period as the first repeated (P, Q) state, so the period
    comes from the recurrence itself rather than from truncation.
    """
    if x.sign() < 0:
        raise NegativeInput("surd must be positive")
    if x.q > 0:
        P, Q = x.p, x.r
    else:
        P, Q = -x.p, -x.r
    d = x.q * x.q * x.D
    if (d - P * P) % Q:
        P, d, Q = P * abs(Q), d * Q * Q, Q * abs(Q)
    sd = math.isqrt(d)
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    while len(terms) <= max_terms:
        state = (P, Q)
        if state in seen:
            cut = seen[state]
            return canonicalize(RegularCF.periodic(terms[:cut], terms[cut:]))
        seen[state] = len(terms)
        # exact floor((P + sqrt(d))/Q); sqrt(d) is irrational here
        a = (P + sd) // Q if Q > 0 else (-P - sd - 1) // (-Q)
        terms.append(a)
        P = a * Q - P
        Q = (d - P * P) // Q
    raise PeriodNotFound(max_terms)


def cf_value(cf: RegularCF):
    """Exact value: Fraction for finite input, QuadSurd for periodic.

    The purely periodic tail t of word w satisfies
    t = (h t + h')/(k t + k') with the convergents of w, a quadratic
    equation whose positive root is t; the prefix then acts on t as a
    Moebius map through its own convergent pair.
    """
    if cf.kind is CFKind.FINITE:
        return eval_cf(cf)
    if cf.kind is CFKind.PREFIX:
        raise ValueError("a bare prefix has no exact value")
    h, hp, k, kp = _convergent_pair(cf.period)
    A, B, C = k, kp - h, -hp
    disc = B * B - 4 * A * C
    t = surd_or_fraction(-B, 1, 2 * A, disc)
    if not isinstance(t, QuadSurd):
        raise ArithmeticError("periodic tail produced a rational value")
    if not cf.prefix:
        return t
    h, hp, k, kp = _convergent_pair(cf.prefix)
    theta = t.mobius_image(h, hp, k, kp)
    if not isinstance(theta, QuadSurd):
        raise ArithmeticError("periodic value collapsed to a rational")
    return theta


# ---------------------------------------------------------------------
# tail equivalence


def _rotations(word: tuple[int, ...]) -> set[tuple[int, ...]]:
    return {word[i:] + word[:i] for i in range(len(word))}


def _suffix_witness(prefix: tuple[int, ...], other: RegularCF) -> bool:
    """Does some nonempty suffix of prefix occur as a tail window of other?"""
    head = other.prefix
    per = other.period or ()
    reach = len(head) + len(per)
    stream = other.first_terms(reach + len(prefix) + len(per))
    for i in range(len(prefix)):
        suf = prefix[i:]
        for j in range(reach or 1):
            if stream[j:j + len(suf)] == suf:
                return True
    return False


def tail_equivalent(a: RegularCF, b: RegularCF) -> TailDecision:
    """Do a and b share a tail, i.e. lie in one GL(2,Z) class?

    Finite fractions are all mutually equivalent and never equivalent to
    an infinite one; a bare prefix stands for an infinite expansion, so
    against a finite fraction the kinds already refute.  For two periodic
    fractions the decision is exact: equivalent iff the primitive periods
    are cyclic rotations of each other.  Comparisons involving a bare
    prefix can never refute, so they return Equivalent on a witnessed
    common suffix and Unknown otherwise.
    """
    a, b = canonicalize(a), canonicalize(b)
    ka, kb = a.kind, b.kind
    if ka is CFKind.FINITE and kb is CFKind.FINITE:
        return TailDecision.EQUIVALENT
    if ka is CFKind.FINITE or kb is CFKind.FINITE:
        return TailDecision.NOT_EQUIVALENT
    if ka is CFKind.PERIODIC and kb is CFKind.PERIODIC:
        if b.period in _rotations(a.period):
            return TailDecision.EQUIVALENT
        return TailDecision.NOT_EQUIVALENT
    # at least one bare prefix from here on
    if ka is CFKind.PREFIX and kb is CFKind.PREFIX:
        n = 0
        while (n < len(a.prefix) and n < len(b.prefix)
               and a.prefix[-1 - n] == b.prefix[-1 - n]):
            n += 1
        return TailDecision.EQUIVALENT if n else TailDecision.UNKNOWN
    pref, per = (a, b) if ka is CFKind.PREFIX else (b, a)
    if _suffix_witness(pref.prefix, per):
        return TailDecision.EQUIVALENT
    return TailDecision.UNKNOWN


# ---------------------------------------------------------------------
# the boundary action


def apply_gl2(m: IntMat2, cf: RegularCF) -> RegularCF:
    """Push cf through x -> (a x + b)/(c x + d), exactly.

    The value is computed exactly (Fraction or QuadSurd), mapped, and
    re-expanded, so the result is canonical and, for infinite input,
    tail equivalent to it.  Images outside the nonnegative reals are
    refused.
    """
    if cf.kind is CFKind.PREFIX:
        raise ValueError("cannot apply a matrix to a bare prefix")
    if cf.kind is CFKind.FINITE:
        x = eval_cf(cf)
        den = m.c * x + m.d
        if den == 0:
            raise ImageNotPositive("image is the point at infinity")
        y = (m.a * x + m.b) / den
        if y < 0:
            raise ImageNotPositive(f"image {y} is negative")
        return expand_rational(y)
    theta = cf_value(cf)
    image = theta.mobius_image(m.a, m.b, m.c, m.d)
    if not isinstance(image, QuadSurd):
        raise ArithmeticError("unimodular image of an irrational is irrational")
    if image.sign() < 0:
        raise ImageNotPositive(f"image {image} is negative")
    return expand_surd(image)
