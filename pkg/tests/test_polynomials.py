from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from closure_lab.errors import DimensionMismatchError, PreconditionError
from closure_lab.polynomials import (
    GREVLEX,
    LEX,
    Polynomial,
    exact_quotient,
    normal_form,
    term_order,
)
from helpers import random_nonzero_polynomial, random_polynomial


def P(dim, terms):
    return Polynomial(dim, {e: Fraction(c) for e, c in terms.items()})


def test_zero_coefficients_are_dropped():
    poly = P(2, {(1, 0): 0, (0, 1): 2})
    assert poly.terms == {(0, 1): Fraction(2)}
    assert P(2, {(1, 0): 0}).is_zero


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        Polynomial(2, {(1, 0, 0): Fraction(1)})
    with pytest.raises(DimensionMismatchError):
        P(2, {(1, 0): 1}) + Polynomial(3, {(0, 0, 0): Fraction(1)})
    with pytest.raises(PreconditionError):
        Polynomial(2, {(-1, 0): Fraction(1)})


def test_grevlex_prefers_higher_degree_then_reverse_tail():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    assert (x + y).leading_term(GREVLEX)[0] == (1, 0)
    f = x * x + x * y * y
    assert f.leading_term(GREVLEX)[0] == (1, 2)
    # same degree: x^2 beats x*y beats y^2
    g = P(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    ordered = [e for e, _ in g.sorted_terms(GREVLEX)]
    assert ordered == [(2, 0), (1, 1), (0, 2)]


def test_lex_ignores_degree():
    f = P(2, {(1, 0): 1, (0, 5): 1})
    assert f.leading_term(LEX)[0] == (1, 0)
    assert f.leading_term(GREVLEX)[0] == (0, 5)


def test_term_order_lookup():
    assert term_order("lex") == LEX
    with pytest.raises(PreconditionError):
        term_order("weird")


def test_arithmetic_basics():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - x).is_zero
    assert x ** 0 == Polynomial.one(2)
    assert x.scale(Fraction(3, 2)).terms == {(1, 0): Fraction(3, 2)}


def test_division_worked_examples():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    r, q = normal_form(x * x * y, [x * x], GREVLEX)
    assert r.is_zero and q == [y]
    r, q = normal_form(x * x - y * y, [x - y], GREVLEX)
    assert r.is_zero and q == [x + y]
    r, q = normal_form(y, [x], GREVLEX)
    assert r == y and q == [Polynomial.zero(2)]


def test_division_rejects_zero_divisor():
    with pytest.raises(PreconditionError):
        normal_form(Polynomial.one(2), [Polynomial.zero(2)], GREVLEX)


def test_exact_quotient():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    product = (x + y) * (x * x - y)
    assert exact_quotient(product, x + y) == x * x - y
    with pytest.raises(PreconditionError):
        exact_quotient(x + Polynomial.one(2), y)


@given(st.integers(0, 10_000))
def test_division_identity_on_random_inputs(seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 3)
    f = random_polynomial(rng, dim)
    divisors = [random_nonzero_polynomial(rng, dim) for _ in range(rng.randint(1, 3))]
    order = GREVLEX if rng.random() < 0.7 else LEX
    remainder, quotients = normal_form(f, divisors, order)
    total = remainder
    for quotient, divisor in zip(quotients, divisors):
        total += quotient * divisor
    assert total == f
    leads = [g.leading_term(order)[0] for g in divisors]
    for exps in remainder.terms:
        for lead in leads:
            assert not all(a <= b for a, b in zip(lead, exps))
