"""Shared builders for the test suite.

Random matrices are built as words in the standard generators so every
sample is unimodular by construction, independent of the code under
test.
"""

from __future__ import annotations

import random

import pytest

from lamcf.gl2 import IntMat2

T = IntMat2(1, 1, 0, 1)
L = IntMat2(1, 0, 1, 1)
S = IntMat2(0, -1, 1, 0)


def word_matrix(letters: str) -> IntMat2:
    """Product of T, L, S generators, left to right."""
    m = IntMat2.identity()
    for ch in letters:
        m = m * {"T": T, "L": L, "S": S}[ch]
    return m


def random_unimodular(rng: random.Random, length: int = 8) -> IntMat2:
    word = "".join(rng.choice("TLS") for _ in range(length))
    m = word_matrix(word)
    if rng.random() < 0.5:
        m = m.inverse()
    return m


def random_hyperbolic(rng: random.Random, length: int = 6) -> IntMat2:
    """Positive word containing both T and L: trace >= 3, det +1."""
    while True:
        word = "".join(rng.choice("TL") for _ in range(length))
        if "T" in word and "L" in word:
            return word_matrix(word)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)


# hypothesis strategies built on the same generators

from hypothesis import strategies as st  # noqa: E402


def _positive_word(pairs) -> IntMat2:
    m = IntMat2.identity()
    for a, b in pairs:
        m = m * T**a * L**b
    return m


# alternating positive powers of T and L: always det +1, trace >= 3
hyperbolic_matrices = st.lists(
    st.tuples(st.integers(1, 3), st.integers(1, 3)),
    min_size=1, max_size=4).map(_positive_word)

unimodular_matrices = st.text(alphabet="TLS", min_size=0,
                              max_size=8).map(word_matrix)
