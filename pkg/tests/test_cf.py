"""Continued-fraction core: expansion, evaluation, canonical forms,
tail equivalence, and the unimodular action.

The surd expansions are cross-checked against sympy's independent
periodic-expansion routine; rational round-trips are exact.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.ntheory.continued_fraction import continued_fraction_periodic

from conftest import random_unimodular
from lamcf.cf_core import (CFKind, RegularCF, TailDecision, apply_gl2,
                           canonicalize, cf_to_matrix, cf_value, eval_cf,
                           expand_rational, expand_surd, tail_equivalent)
from lamcf.errors import (DepthExceeded, ImageNotPositive, InvalidTerm,
                          NegativeInput, PeriodNotFound)
from lamcf.gl2 import IntMat2
from lamcf.surd import QuadSurd

GOLDEN = RegularCF.periodic((), (1,))


def sympy_surd_cf(x: QuadSurd) -> RegularCF:
    """Independent expansion of (p + q*sqrt(D))/r via sympy."""
    assert x.q > 0
    terms = continued_fraction_periodic(x.p, x.r, x.q * x.q * x.D)
    if terms and isinstance(terms[-1], list):
        return RegularCF.periodic([int(t) for t in terms[:-1]],
                                  [int(t) for t in terms[-1]])
    return RegularCF.finite(int(t) for t in terms)


def positive_surds():
    return st.builds(
        QuadSurd,
        st.integers(-30, 30),
        st.integers(1, 20),
        st.integers(1, 20),
        st.sampled_from([2, 3, 5, 7, 10, 13, 61, 94]),
    ).filter(lambda x: x.sign() > 0)


term_lists = st.lists(st.integers(1, 12), min_size=1, max_size=8)


# -- construction and validation --------------------------------------


def test_term_validation():
    with pytest.raises(InvalidTerm):
        RegularCF.finite([3, 0, 2])  # inner terms must be >= 1
    with pytest.raises(InvalidTerm):
        RegularCF.finite([-1])
    with pytest.raises(InvalidTerm):
        RegularCF.periodic([1], [2, 0])
    with pytest.raises(InvalidTerm):
        RegularCF.periodic([1], [])  # a period cannot be empty
    RegularCF.finite([0])  # leading zero alone is fine
    RegularCF.periodic([], [1])


def test_first_terms_cycling_and_clamp():
    cf = RegularCF.periodic([3], [1, 2])
    assert cf.first_terms(6) == (3, 1, 2, 1, 2, 1)
    fin = RegularCF.finite([1, 2])
    assert fin.first_terms(2) == (1, 2)
    assert fin.first_terms(5, clamp=True) == (1, 2)
    with pytest.raises(DepthExceeded):
        fin.first_terms(3)


def test_str_forms():
    assert str(RegularCF.finite([3, 7, 16])) == "[3, 7, 16]"
    assert str(RegularCF.periodic([1], [2])) == "[1, (2)]"
    assert str(RegularCF.prefix_only([1, 2])) == "[1, 2, ...]"


# -- rational expansion -----------------------------------------------


def test_expand_rational_known():
    assert expand_rational(Fraction(355, 113)).prefix == (3, 7, 16)
    assert expand_rational(Fraction(0)).prefix == (0,)
    assert expand_rational(Fraction(7, 5)).prefix == (1, 2, 2)


def test_expand_rational_rejects_negative():
    with pytest.raises(NegativeInput):
        expand_rational(Fraction(-1, 2))


def test_expand_rational_exhaustive_small():
    # every reduced fraction with denominator <= 60 round-trips exactly
    for q in range(1, 61):
        for p in range(0, 2 * q):
            x = Fraction(p, q)
            cf = expand_rational(x)
            assert cf.kind is CFKind.FINITE
            assert cf.is_canonical
            assert eval_cf(cf) == x


@given(st.fractions(min_value=0, max_value=10**9))
def test_expand_rational_roundtrip(x):
    assert eval_cf(expand_rational(x)) == x


# -- evaluation and matrices ------------------------------------------


def test_eval_known():
    assert eval_cf(RegularCF.finite([1, 2, 2])) == Fraction(7, 5)
    assert eval_cf(RegularCF.finite([9]), 0) == 9
    assert eval_cf(GOLDEN, 5) == Fraction(13, 8)  # F7/F6


def test_eval_depth_rules():
    fin = RegularCF.finite([1, 2, 3])
    assert eval_cf(fin, 99) == eval_cf(fin)  # finite clamps
    with pytest.raises(DepthExceeded):
        eval_cf(GOLDEN)  # unbounded depth on an infinite fraction
    with pytest.raises(DepthExceeded):
        eval_cf(fin, -1)


def test_matrix_known():
    assert cf_to_matrix(RegularCF.finite([1, 2]), 1).as_tuple() == (1, 3, 1, 2)
    assert cf_to_matrix(RegularCF.finite([0]), 0).as_tuple() == (1, 0, 0, 1)
    m = cf_to_matrix(RegularCF.finite([1, 1, 1]), 2)
    assert m.as_tuple() == (2, 3, 1, 2)
    assert m.trace == 4


@given(term_lists)
def test_matrix_columns_are_convergents(terms):
    cf = RegularCF.finite(terms)
    n = len(terms) - 1
    m = cf_to_matrix(cf, n)
    assert Fraction(m.b, m.d) == eval_cf(cf, n)
    if n >= 1:
        assert Fraction(m.a, m.c) == eval_cf(cf, n - 1)
    assert m.det == (-1) ** n


@given(term_lists, st.integers(0, 20))
def test_matrix_det_parity_periodic(period, depth):
    m = cf_to_matrix(RegularCF.periodic([], period), depth)
    assert m.det == (-1) ** depth


# -- canonical forms --------------------------------------------------


def test_canonicalize_known():
    assert canonicalize(RegularCF.finite([3, 7, 15, 1])).prefix == (3, 7, 16)
    assert canonicalize(RegularCF.finite([2])).prefix == (2,)
    got = canonicalize(RegularCF.periodic([1], [2, 2]))
    assert (got.prefix, got.period) == ((1,), (2,))


def test_canonicalize_absorbs_phase():
    # [1, 2, (1, 2)] is the same stream as [1, (2, 1)] and [(1, 2)]
    got = canonicalize(RegularCF.periodic([1, 2], [1, 2]))
    assert (got.prefix, got.period) == ((), (1, 2))


def test_canonicalize_trailing_one_edge():
    assert canonicalize(RegularCF.finite([1])).prefix == (1,)
    assert canonicalize(RegularCF.finite([2, 1])).prefix == (3,)
    assert canonicalize(RegularCF.finite([0, 1])).prefix == (1,)


@given(term_lists)
def test_canonical_finite_value_preserved(terms):
    cf = RegularCF.finite(terms)
    got = canonicalize(cf)
    assert got.is_canonical
    assert eval_cf(got) == eval_cf(cf)
    assert canonicalize(got) == got  # idempotent


@given(term_lists, term_lists, st.integers(1, 3))
def test_canonical_periodic_stream_preserved(prefix, period, reps):
    cf = RegularCF.periodic(prefix, period * reps)
    got = canonicalize(cf)
    assert got.first_terms(40) == cf.first_terms(40)
    assert canonicalize(got) == got


# -- surd expansion ---------------------------------------------------


def test_expand_surd_known():
    root2 = expand_surd(QuadSurd.sqrt(2))
    assert (root2.prefix, root2.period) == ((1,), (2,))
    golden = expand_surd(QuadSurd(1, 1, 2, 5))
    assert (golden.prefix, golden.period) == ((), (1,))
    root3 = expand_surd(QuadSurd.sqrt(3))
    assert (root3.prefix, root3.period) == ((1,), (1, 2))


def test_expand_surd_rejects_nonpositive():
    with pytest.raises(NegativeInput):
        expand_surd(QuadSurd(-1, -1, 2, 5))


def test_expand_surd_budget():
    # sqrt(1726) has a long period; a tiny budget must fail loudly
    with pytest.raises(PeriodNotFound):
        expand_surd(QuadSurd.sqrt(1726), max_terms=5)


@settings(max_examples=120, deadline=None)
@given(positive_surds())
def test_expand_surd_matches_sympy(x):
    ours = canonicalize(expand_surd(x))
    theirs = canonicalize(sympy_surd_cf(x))
    assert ours == theirs


@settings(max_examples=120, deadline=None)
@given(positive_surds())
def test_expand_surd_value_roundtrip(x):
    assert cf_value(expand_surd(x)) == x  # exact, field equality


def test_cf_value_purely_periodic():
    assert cf_value(GOLDEN) == QuadSurd(1, 1, 2, 5)
    assert cf_value(RegularCF.periodic([1], [2])) == QuadSurd.sqrt(2)


def test_cf_value_finite_and_prefix():
    assert cf_value(RegularCF.finite([1, 2, 2])) == Fraction(7, 5)
    with pytest.raises(ValueError):
        cf_value(RegularCF.prefix_only([1, 2]))


# -- tail equivalence -------------------------------------------------


def test_tail_known_pairs():
    root2 = RegularCF.periodic([1], [2])
    one_plus = RegularCF.periodic([], [2])
    assert tail_equivalent(root2, one_plus) is TailDecision.EQUIVALENT
    assert tail_equivalent(GOLDEN, one_plus) is TailDecision.NOT_EQUIVALENT
    assert tail_equivalent(root2, root2) is TailDecision.EQUIVALENT


def test_tail_rotation_and_phase():
    a = RegularCF.periodic([5], [1, 2, 3])
    b = RegularCF.periodic([], [3, 1, 2])
    assert tail_equivalent(a, b) is TailDecision.EQUIVALENT
    c = RegularCF.periodic([], [3, 2, 1])  # reversed, not a rotation
    assert tail_equivalent(a, c) is TailDecision.NOT_EQUIVALENT


def test_tail_finite_cases():
    fin_a = RegularCF.finite([1, 2])
    fin_b = RegularCF.finite([9])
    assert tail_equivalent(fin_a, fin_b) is TailDecision.EQUIVALENT
    assert tail_equivalent(fin_a, GOLDEN) is TailDecision.NOT_EQUIVALENT
    assert tail_equivalent(
        fin_a, RegularCF.prefix_only([1, 2])) is TailDecision.NOT_EQUIVALENT


def test_tail_prefix_witnesses():
    a = RegularCF.prefix_only([7, 1, 2, 1, 2])
    b = RegularCF.prefix_only([9, 9, 1, 2, 1, 2])
    assert tail_equivalent(a, b) is TailDecision.EQUIVALENT  # shared suffix
    per = RegularCF.periodic([], [1, 2])
    assert tail_equivalent(a, per) is TailDecision.EQUIVALENT
    stranger = RegularCF.prefix_only([3, 4])
    assert tail_equivalent(a, stranger) is TailDecision.UNKNOWN
    assert tail_equivalent(stranger, per) is TailDecision.UNKNOWN


@given(term_lists, term_lists, term_lists)
def test_tail_shared_period_any_prefixes(pa, pb, period):
    a = RegularCF.periodic(pa, period)
    b = RegularCF.periodic(pb, period)
    assert tail_equivalent(a, b) is TailDecision.EQUIVALENT


# -- the unimodular action --------------------------------------------


def test_apply_identity():
    cf = RegularCF.periodic([2], [1, 3])
    assert apply_gl2(IntMat2.identity(), cf) == canonicalize(cf)


def test_apply_golden_fixed_tail():
    # (0 1; 1 1) sends the golden ratio to 1/(theta+1) = theta - 1
    img = apply_gl2(IntMat2(0, 1, 1, 1), GOLDEN)
    assert (img.prefix, img.period) == ((0, 2), (1,))
    assert tail_equivalent(img, GOLDEN) is TailDecision.EQUIVALENT


def test_apply_translation_shifts_head():
    img = apply_gl2(IntMat2(1, 5, 0, 1), RegularCF.periodic([1], [2]))
    assert (img.prefix, img.period) == ((6,), (2,))


def test_apply_finite():
    img = apply_gl2(IntMat2(2, 1, 1, 1), RegularCF.finite([1, 2]))
    # (2x+1)/(x+1) at x=3/2 is 8/5
    assert eval_cf(img) == Fraction(8, 5)


def test_apply_rejects_nonpositive_image():
    with pytest.raises(ImageNotPositive):
        apply_gl2(IntMat2(1, -3, 0, 1), RegularCF.finite([1, 2]))


def test_apply_prefix_only_rejected():
    with pytest.raises(ValueError):
        apply_gl2(IntMat2.identity(), RegularCF.prefix_only([1]))


@settings(max_examples=60)
@given(term_lists, st.randoms(use_true_random=False))
def test_apply_preserves_tail_class(period, pyrandom):
    cf = RegularCF.periodic([], period)
    m = random_unimodular(pyrandom, 6)
    try:
        img = apply_gl2(m, cf)
    except ImageNotPositive:
        return
    assert tail_equivalent(img, cf) is TailDecision.EQUIVALENT


@settings(max_examples=60)
@given(term_lists, st.randoms(use_true_random=False))
def test_apply_agrees_with_surd_action(period, pyrandom):
    cf = RegularCF.periodic([], period)
    m = random_unimodular(pyrandom, 6)
    value = cf_value(cf)
    image = value.mobius_image(m.a, m.b, m.c, m.d)
    try:
        img_cf = apply_gl2(m, cf)
    except ImageNotPositive:
        assert not (isinstance(image, QuadSurd) and image.sign() > 0
                    and image.floor() >= 0) or image < 1
        return
    assert cf_value(img_cf) == image
