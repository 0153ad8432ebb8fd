from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidalg.errors import ArityMismatch, FieldMismatch, NotHomogeneous, ZeroPolynomial
from braidalg.freealg import (
    DEG_ZERO,
    Grading,
    Parity,
    Polynomial,
    gens,
    grade_parity,
    match_linear_power,
    mdeg,
    multiply,
    words_of_length,
)
from braidalg.scalars import QQ
from braidalg.textio import parse_poly

from conftest import F5, nonzero_fractions, polys

x1, x2 = gens()


def P(text, field=QQ):
    return parse_poly(text, field)


def brute_product(f, g):
    # distribute by hand over all term pairs
    out = {}
    for (u, a), (v, b) in product(f.terms.items(), g.terms.items()):
        out[u + v] = out.get(u + v, 0) + a * b
    return Polynomial(out, f.nvars, f.field)


def test_multiplication_is_concatenation():
    assert multiply(x1, x2) == Polynomial.word((1, 2))
    assert x1 * x2 != x2 * x1
    assert (x1 + x2) * (x1 - x2) == P("x1^2 - x1*x2 + x2*x1 - x2^2")
    assert (x1 + x2) ** 2 == P("x1^2 + x1*x2 + x2*x1 + x2^2")


def test_zero_and_constants():
    z = Polynomial.zero()
    assert z.deg == DEG_ZERO
    assert Polynomial.const(3).deg == 0
    assert (x1 - x1).is_zero()
    assert x1 + 0 == x1
    assert 2 * x1 == x1.scale(2)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        x1 + Polynomial.gen(1, 2, F5)


@given(polys(), polys(), polys())
def test_product_matches_distribution(f, g, h):
    assert f * g == brute_product(f, g)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)


@given(polys(), polys())
def test_degree_is_additive(f, g):
    if f.is_zero() or g.is_zero():
        assert (f * g).deg == DEG_ZERO
    else:
        assert (f * g).deg == f.deg + g.deg


@given(polys(), polys())
def test_multidegree_components_convolve(f, g):
    fc, gc = f.mdeg_components(), g.mdeg_components()
    expected = {tuple(i + j for i, j in zip(a, b)) for a in fc for b in gc}
    # every component of fg comes from a pair; cancellation can only remove some
    assert set((f * g).mdeg_components()) <= expected
    if f.is_homogeneous() and len(fc) == 1 and len(gc) == 1 and not (f * g).is_zero():
        assert set((f * g).mdeg_components()) == expected


def test_mdeg_and_words():
    assert mdeg((1, 2, 1, 1), 2) == (3, 1)
    assert list(words_of_length(2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert P("x1*x2 + 3*x2 + 2").highest_part() == P("x1*x2")


@pytest.mark.parametrize(
    "text,grading,expected",
    [
        ("x1 + x2*x1*x2", Grading.WORD_LENGTH, Parity.ODD),
        ("x1*x2 + 4", Grading.WORD_LENGTH, Parity.EVEN),
        ("x1 + x2^2", Grading.WORD_LENGTH, Parity.MIXED),
        ("x1 + x2^2", Grading.X2_DEGREE, Parity.EVEN),
        ("x2 + x1*x2*x1", Grading.X2_DEGREE, Parity.ODD),
        ("x2 + x1", Grading.X2_DEGREE, Parity.MIXED),
    ],
)
def test_grade_parity(text, grading, expected):
    assert grade_parity(P(text), grading) is expected


def test_grade_parity_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        grade_parity(Polynomial.zero())


@given(
    alpha=nonzero_fractions,
    a=st.sampled_from([0, 1]),
    b=st.fractions(min_value=-5, max_value=5, max_denominator=4),
    r=st.integers(1, 6),
)
def test_match_linear_power_round_trip(alpha, a, b, r):
    if a == 0:
        b = Fraction(1)
    h = (x1.scale(a) + x2.scale(b)) ** r * alpha
    assert match_linear_power(h) == (alpha, a, b, r)


@pytest.mark.parametrize(
    "text",
    ["x1*x2 - x2*x1", "x1*x2", "x1^2 + x2^2", "x1*x2*x1", "x1^2 + x1*x2 + x2*x1"],
)
def test_match_linear_power_rejects(text):
    assert match_linear_power(P(text)) is None


def test_match_linear_power_input_errors():
    with pytest.raises(ZeroPolynomial):
        match_linear_power(Polynomial.zero())
    with pytest.raises(NotHomogeneous):
        match_linear_power(P("x1 + x2^2"))
    with pytest.raises(ArityMismatch):
        match_linear_power(Polynomial.gen(1, 3))


def test_substitute():
    f = P("x1*x2 + 2*x2")
    assert f.substitute((x2, x1)) == P("x2*x1 + 2*x1")
    assert f.substitute((x1 + x2, x2)) == P("x1*x2 + x2^2 + 2*x2")


@given(polys(), polys(), polys(), polys())
def test_substitution_is_a_homomorphism(f, g, a, b):
    images = (a, b)
    assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)
    assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)


def test_prime_field_polynomials():
    f = P("3*x1 + 4*x2", F5)
    assert f + f == P("x1 + 3*x2", F5)
    assert f.scale(2) == P("x1 + 3*x2", F5)
