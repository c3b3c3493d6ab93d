"""Inductive construction of hyperbolic matrices from term sequences.

Appending a term x to the sequence multiplies the running product by
(0 1; 1 x), and the new trace is an affine function a*x + b of x whose
coefficients are read off the current matrix.  That makes it cheap to
search for the smallest next term whose trace passes a pluggable
predicate, stays above 2, and keeps the product hyperbolic at even
indices (those have determinant +1).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .cf_core import RegularCF, cf_to_matrix
from .errors import InvalidTerm, NoAdmissibleTerm, UnsupportedIndex
from .gl2 import IntMat2, _axis_length, in_hecke

DEFAULT_SEARCH_BOUND = 10 ** 6
SEARCH_BOUND_ENV = "LAMCF_SEARCH_BOUND"


def search_bound_from_env(default: int = DEFAULT_SEARCH_BOUND) -> int:
    """Default term-search bound, overridable via LAMCF_SEARCH_BOUND."""
    raw = os.environ.get(SEARCH_BOUND_ENV)
    if raw is None:
        return default
    try:
        bound = int(raw)
    except ValueError:
        raise ValueError(f"{SEARCH_BOUND_ENV}={raw!r} is not an integer") from None
    if bound < 1:
        raise ValueError(f"{SEARCH_BOUND_ENV} must be >= 1")
    return bound


def build_gamma(terms: Sequence[int], k: int) -> IntMat2:
    """Product matrix through index k; same convention as cf_to_matrix."""
    return cf_to_matrix(RegularCF.prefix_only(terms), k)


def trace_formula(terms: Sequence[int], k: int) -> int:
    """Closed-form trace of the index-k product, for k in 0..3."""
    if not 0 <= k <= 3:
        raise UnsupportedIndex(f"no closed form at index {k}")
    if len(terms) < k + 1:
        raise InvalidTerm(f"need {k + 1} terms, have {len(terms)}")
    p = list(terms[:4])
    if k == 0:
        return 2
    if k == 1:
        return p[0] + p[1]
    if k == 2:
        return 2 + p[0] * p[1] + p[1] * p[2]
    return (p[0] + p[1] + p[2] + p[3]
            + p[0] * p[1] * p[2] + p[1] * p[2] * p[3])


def trace_affine_coefficients(terms: Sequence[int], n: int) -> tuple[int, int]:
    """(a, b) with trace(product after appending x at index n+1) = a*x + b.

    Writing the index-n product as (A B; C D), a right factor (0 1; 1 x)
    gives trace B + C + D*x, so a = D and b = B + C.
    """
    g = build_gamma(terms, n)
    return g.d, g.b + g.c


@dataclass(frozen=True)
class TracePredicate:
    """Named admissibility test on the candidate trace."""

    name: str
    test: Callable[[int], bool]

    def __call__(self, trace: int) -> bool:
        return bool(self.test(trace))


PREDICATES = {
    "hyperbolic": TracePredicate("hyperbolic", lambda t: abs(t) > 2),
    "odd": TracePredicate("odd", lambda t: t % 2 == 1),
    "even": TracePredicate("even", lambda t: t % 2 == 0),
}

DEFAULT_PREDICATE = PREDICATES["hyperbolic"]

_MOD_SPEC = re.compile(r"^mod(\d+)=(\d+)$")


def parse_predicate(spec: str) -> TracePredicate:
    """Look up a named predicate; 'modM=R' tests trace = R (mod M)."""
    if spec in PREDICATES:
        return PREDICATES[spec]
    m = _MOD_SPEC.match(spec)
    if m:
        mod, res = int(m.group(1)), int(m.group(2))
        if mod < 1:
            raise ValueError("modulus must be >= 1")
        return TracePredicate(spec, lambda t: t % mod == res % mod)
    names = ", ".join(sorted(PREDICATES))
    raise ValueError(f"unknown predicate {spec!r}; use one of {names} or modM=R")


def select_next_term(terms: Sequence[int],
                     pred: TracePredicate = DEFAULT_PREDICATE,
                     search_bound: int = DEFAULT_SEARCH_BOUND) -> tuple[int, ...]:
    """Extend terms by the smallest admissible x in [1, search_bound].

    Admissible means the predicate holds on the new trace a*x + b and
    the trace itself exceeds 2, so the extended product is never
    trace-degenerate.
    """
    terms = tuple(terms)
    a, b = trace_affine_coefficients(terms, len(terms) - 1)
    for x in range(1, search_bound + 1):
        t = a * x + b
        if t > 2 and pred(t):
            return terms + (x,)
    raise NoAdmissibleTerm(search_bound, terms)


@dataclass(frozen=True)
class LegendreStep:
    """One emitted stage of the construction stream."""

    k: int
    term: int
    gamma: IntMat2
    trace: int
    in_gamma0N: bool
    axis_length: float | None

    @property
    def det(self) -> int:
        return self.gamma.det


def _step(terms: Sequence[int], k: int, level: int) -> LegendreStep:
    g = build_gamma(terms, k)
    t = g.trace
    length = _axis_length(t) if g.det == 1 and abs(t) > 2 else None
    return LegendreStep(k, terms[k], g, t, in_hecke(g, level), length)


def steps_from_terms(terms: Sequence[int], level: int = 1) -> list[LegendreStep]:
    """Replay a finished term sequence as the stream it came from."""
    terms = tuple(terms)
    if len(terms) < 2:
        raise InvalidTerm("need p0 plus at least one selected term")
    return [_step(terms, k, level) for k in range(1, len(terms))]


def legendre_stream(p0: int,
                    pred: TracePredicate = DEFAULT_PREDICATE,
                    steps: int = 1,
                    search_bound: int = DEFAULT_SEARCH_BOUND,
                    level: int = 1) -> Iterator[LegendreStep]:
    """Grow a term sequence step by step, yielding each stage.

    Every step selects the smallest admissible term, so the stream is
    deterministic given the predicate and bound.  When the search fails,
    NoAdmissibleTerm propagates after the earlier steps have already
    been yielded, so the partial stream is retained by the consumer.
    """
    if p0 < 0:
        raise InvalidTerm(f"p0 = {p0} is negative")
    terms: tuple[int, ...] = (p0,)
    for k in range(1, steps + 1):
        terms = select_next_term(terms, pred, search_bound)
        yield _step(terms, k, level)
