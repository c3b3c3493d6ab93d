"""Stepwise construction streams: trace closed forms, the affine update
law, greedy term selection, and stream bookkeeping.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lamcf.errors import InvalidTerm, NoAdmissibleTerm, UnsupportedIndex
from lamcf.gl2 import in_hecke
from lamcf.legendre import (DEFAULT_SEARCH_BOUND, PREDICATES, LegendreStep,
                            TracePredicate, build_gamma, legendre_stream,
                            parse_predicate, search_bound_from_env,
                            select_next_term, steps_from_terms,
                            trace_affine_coefficients, trace_formula)

term_seqs = st.lists(st.integers(1, 9), min_size=4, max_size=10)
HYP = PREDICATES["hyperbolic"]


# -- closed forms -----------------------------------------------------


def test_trace_formula_small_cases():
    terms = [2, 3, 4, 5]
    assert trace_formula(terms, 0) == 2
    assert trace_formula(terms, 1) == 2 + 3
    assert trace_formula(terms, 2) == 2 + 2 * 3 + 3 * 4
    assert trace_formula(terms, 3) == 2 + 3 + 4 + 5 + 2 * 3 * 4 + 3 * 4 * 5


@given(term_seqs, st.integers(0, 3))
def test_trace_formula_matches_matrix(terms, k):
    assert trace_formula(terms, k) == build_gamma(terms, k).trace


def test_trace_formula_bounds():
    with pytest.raises(UnsupportedIndex):
        trace_formula([1, 2, 3, 4, 5], 4)
    with pytest.raises(InvalidTerm):
        trace_formula([1], 1)  # not enough terms for the index


@given(term_seqs, st.integers(1, 50))
def test_affine_law(terms, x):
    # appending x moves the trace along a line whose coefficients read
    # off the previous matrix
    n = len(terms) - 1
    a, b = trace_affine_coefficients(terms, n)
    assert build_gamma(terms + [x], n + 1).trace == a * x + b


@given(term_seqs)
def test_affine_coefficients_from_entries(terms):
    n = len(terms) - 1
    g = build_gamma(terms, n)
    assert trace_affine_coefficients(terms, n) == (g.d, g.b + g.c)


# -- predicates -------------------------------------------------------


def test_parse_predicate_names():
    assert parse_predicate("hyperbolic") is PREDICATES["hyperbolic"]
    assert parse_predicate("odd")(5) and not parse_predicate("odd")(4)
    assert parse_predicate("even")(4) and not parse_predicate("even")(5)
    p = parse_predicate("mod7=3")
    assert p(10) and p(3) and not p(7)
    with pytest.raises(ValueError):
        parse_predicate("prime")
    with pytest.raises(ValueError):
        parse_predicate("mod0=1")


def test_custom_predicate_object():
    sq = TracePredicate("square", lambda t: int(t**0.5) ** 2 == t)
    assert sq(49) and not sq(50)
    assert sq.name == "square"


# -- term selection ---------------------------------------------------


def test_select_minimal_admissible():
    # from [1, 1]: appending x gives trace 2 + 1*1 + 1*x = 3 + x > 2 for
    # any x >= 1, so the smallest admissible term is 1
    assert select_next_term((1, 1), HYP, 100) == (1, 1, 1)
    # from [1]: trace 1 + x must exceed 2, so x = 2
    assert select_next_term((1,), HYP, 100) == (1, 2)


def test_select_respects_predicate():
    got = select_next_term((2, 1), parse_predicate("mod5=0"), 1000)
    a, b = trace_affine_coefficients((2, 1), 1)
    t = a * got[-1] + b
    assert t % 5 == 0 and t > 2
    # nothing smaller works
    for x in range(1, got[-1]):
        tx = a * x + b
        assert tx <= 2 or tx % 5 != 0


def test_select_exhausts_bound():
    never = TracePredicate("never", lambda t: False)
    with pytest.raises(NoAdmissibleTerm) as info:
        select_next_term((1, 2), never, 37)
    assert info.value.search_bound == 37
    assert info.value.terms == (1, 2)


@given(term_seqs)
def test_select_minimality_property(terms):
    got = select_next_term(tuple(terms), HYP, 10_000)
    x = got[-1]
    a, b = trace_affine_coefficients(terms, len(terms) - 1)
    assert a * x + b > 2
    for smaller in range(1, x):
        assert a * smaller + b <= 2


# -- streams ----------------------------------------------------------


def test_stream_shape_and_numbering():
    steps = list(legendre_stream(1, HYP, 6, 1000, level=11))
    assert [s.k for s in steps] == [1, 2, 3, 4, 5, 6]
    for s in steps:
        assert s.det == (-1) ** s.k
        assert s.trace == s.gamma.trace
        assert abs(s.trace) > 2
        assert s.in_gamma0N == in_hecke(s.gamma, 11)
        if s.det == 1:
            assert s.axis_length is not None and s.axis_length > 0
        else:
            assert s.axis_length is None


def test_stream_traces_grow():
    steps = list(legendre_stream(1, HYP, 10, 1000))
    traces = [s.trace for s in steps]
    assert traces == sorted(traces)
    assert traces[0] == 3  # smallest admissible start from p0 = 1


def test_stream_rejects_negative_start():
    with pytest.raises(InvalidTerm):
        list(legendre_stream(-1, HYP, 3, 100))


def test_stream_partial_progress_in_error():
    # parity obstruction: after one step every reachable trace is even
    with pytest.raises(NoAdmissibleTerm) as info:
        list(legendre_stream(1, parse_predicate("odd"), 5, 500))
    assert len(info.value.terms) >= 2  # retains the progress made


def test_steps_from_terms_matches_stream():
    steps = list(legendre_stream(1, HYP, 5, 1000, level=7))
    terms = (1,) + tuple(s.term for s in steps)
    replay = steps_from_terms(terms, level=7)
    assert [s.gamma for s in replay] == [s.gamma for s in steps]
    assert [s.axis_length for s in replay] == [s.axis_length for s in steps]


def test_steps_from_terms_needs_two():
    with pytest.raises(InvalidTerm):
        steps_from_terms([3])


def test_search_bound_env(monkeypatch):
    monkeypatch.delenv("LAMCF_SEARCH_BOUND", raising=False)
    assert search_bound_from_env() == DEFAULT_SEARCH_BOUND
    monkeypatch.setenv("LAMCF_SEARCH_BOUND", "123")
    assert search_bound_from_env() == 123
    monkeypatch.setenv("LAMCF_SEARCH_BOUND", "junk")
    with pytest.raises(ValueError):
        search_bound_from_env()


def test_step_is_frozen():
    step = steps_from_terms([1, 2])[0]
    assert isinstance(step, LegendreStep)
    with pytest.raises(AttributeError):
        step.trace = 0
