from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from closure_lab.errors import PreconditionError
from closure_lab.groebner import PolyIdeal, poly_ideal_sum, to_poly_ideal
from closure_lab.integrality import (
    NO,
    YES,
    IntegralityCertificate,
    MembershipProof,
    NotUpTo,
    ReductionWitness,
    TriState,
    bareiss_determinant,
    cofactor_determinant,
    cramer_certificate,
    is_integral_element,
    is_integral_ideal,
    monomial_certificate,
    reduction_number,
    unknown,
)
from closure_lab.lab import random_monomial_ideal, witness_pair
from closure_lab.monomials import ideal_sum, minimalize, unit_ideal, zero_ideal
from closure_lab.newton import closure
from closure_lab.parsing import parse_polynomial
from closure_lab.polynomials import Polynomial
from helpers import mono, random_nonzero_polynomial


def P(text, variables=("x", "y")):
    return parse_polynomial(text, list(variables))


J22 = mono(2, (2, 0), (0, 2))
I22 = mono(2, (2, 0), (1, 1), (0, 2))


# -- reduction numbers ---------------------------------------------------------


def test_reduction_number_worked_examples():
    assert reduction_number(J22, I22, 10) == ReductionWitness(1, True)
    assert reduction_number(J22, J22, 10) == ReductionWitness(0, True)
    assert reduction_number(J22, mono(2, (1, 0), (0, 1)), 10) == NotUpTo(10)


def test_reduction_number_requires_containment():
    with pytest.raises(PreconditionError):
        reduction_number(mono(2, (1, 0)), mono(2, (2, 0)), 5)
    with pytest.raises(PreconditionError):
        reduction_number(
            PolyIdeal(2, (P("x"),)), PolyIdeal(2, (P("x^2"),)), 5
        )


def test_reduction_number_general_path_matches_monomial_path():
    witness = reduction_number(to_poly_ideal(J22), to_poly_ideal(I22), 10)
    assert isinstance(witness, ReductionWitness) and witness.k == 1


def test_reduction_number_mixed_inputs_promote_to_general():
    witness = reduction_number(J22, to_poly_ideal(I22), 10)
    assert isinstance(witness, ReductionWitness) and witness.k == 1


def test_reduction_number_zero_ideals():
    assert reduction_number(zero_ideal(2), zero_ideal(2), 3) == ReductionWitness(0, True)


# -- integrality of ideals -----------------------------------------------------


def test_is_integral_ideal_witness_family_d3():
    pair = witness_pair(3)
    assert is_integral_ideal(pair.j_ideal, pair.i_ideal) == YES


def test_is_integral_ideal_trivial_and_negative():
    assert is_integral_ideal(J22, J22) == YES
    assert is_integral_ideal(J22, mono(2, (1, 0), (0, 1))) == NO
    assert is_integral_ideal(unit_ideal(2), mono(2, (1, 0))) == YES


def test_is_integral_ideal_general_path():
    j_poly = PolyIdeal(2, (P("x^2"), P("y^2")))
    i_poly = PolyIdeal(2, (P("x*y"),))
    assert is_integral_ideal(j_poly, i_poly, 10) == YES
    hard = PolyIdeal(2, (P("x"),))
    verdict = is_integral_ideal(j_poly, hard, 3)
    assert verdict == unknown(3)


# -- integrality of elements ---------------------------------------------------


def test_is_integral_element_monomial_cases():
    # x_i^(d-1) x_d over (x_i^d, x_d^d) with d = 2
    assert is_integral_element(P("x*y"), J22) == YES
    assert is_integral_element(P("x^2"), J22) == YES  # already inside
    assert is_integral_element(P("x"), J22) == NO


def test_is_integral_element_general_yes():
    # both terms lie in the closure, and the reduction search confirms it
    assert is_integral_element(P("x^2 + x*y"), J22, 10) == YES


def test_is_integral_element_outside_closure_is_unknown():
    # x + y has order 1 while every element integral over (x^2, y^2) has
    # order >= 2, so no equation exists; the general path cannot refute and
    # honestly reports unknown at the cap.
    verdict = is_integral_element(P("x + y"), J22, 3)
    assert verdict == unknown(3)


def test_is_integral_element_degenerate_ideals():
    assert is_integral_element(P("x + y"), unit_ideal(2)) == YES
    assert is_integral_element(P("x"), zero_ideal(2)) == NO
    with pytest.raises(PreconditionError):
        is_integral_element(Polynomial.zero(2), J22)


def test_tri_state_validation():
    with pytest.raises(PreconditionError):
        TriState("maybe")
    with pytest.raises(PreconditionError):
        TriState("yes", k_max=3)
    assert unknown(4).is_unknown and unknown(4).k_max == 4


def test_tri_state_monotone_in_k_max():
    j_poly = PolyIdeal(2, (P("x^2"), P("y^2")))
    f = P("x^2 + x*y")
    first_yes = None
    for cap in (1, 2, 4, 8):
        verdict = is_integral_element(f, j_poly, cap)
        if first_yes is not None:
            assert verdict == YES
        elif verdict == YES:
            first_yes = cap


# -- monomial certificates -------------------------------------------------------


def test_monomial_certificate_worked_examples():
    cert = monomial_certificate((1, 1), J22)
    assert cert.degree == 2
    assert cert.coefficients[0].is_zero
    assert cert.coefficients[1] == P("-x^2*y^2")
    assert cert.verify(J22)

    inside = monomial_certificate((2, 0), J22)
    assert inside.degree == 1
    assert inside.coefficients == (P("-x^2"),)
    assert inside.verify(J22)

    divisible = monomial_certificate((2, 1), mono(2, (2, 0)))
    assert divisible.degree == 1
    assert divisible.coefficients == (P("-x^2*y"),)
    assert divisible.verify(mono(2, (2, 0)))


def test_monomial_certificate_requires_integrality():
    with pytest.raises(PreconditionError):
        monomial_certificate((1, 0), J22)


@given(st.integers(0, 5_000))
@settings(max_examples=60, deadline=None)
def test_monomial_certificates_verify_on_sampled_members(seed):
    rng = random.Random(seed)
    dim = rng.choice((2, 3))
    ideal = random_monomial_ideal(rng, dim, min_gens=2, max_gens=4, max_exp=4)
    closed = closure(ideal)
    member = closed.gens[rng.randrange(len(closed.gens))]
    cert = monomial_certificate(member, ideal)
    assert cert.verify(ideal)
    assert cert.element == Polynomial.monomial(dim, member)


# -- determinant routes ----------------------------------------------------------


@given(st.integers(0, 3_000))
@settings(max_examples=30, deadline=None)
def test_bareiss_matches_cofactor_expansion(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    matrix = [
        [random_nonzero_polynomial(rng, 2, max_terms=2, max_exp=2) for _ in range(n)]
        for _ in range(n)
    ]
    assert bareiss_determinant(matrix) == cofactor_determinant(matrix)


def test_bareiss_handles_zero_pivots():
    zero = Polynomial.zero(2)
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    matrix = [[zero, x], [y, zero]]
    assert bareiss_determinant(matrix) == -(x * y)
    singular = [[zero, zero], [x, y]]
    assert bareiss_determinant(singular).is_zero


# -- determinant-trick certificates ----------------------------------------------


def test_cramer_certificate_square_pair_case():
    f = P("x*y")
    j_poly = to_poly_ideal(J22)
    i_poly = poly_ideal_sum(j_poly, PolyIdeal(2, (f,)))
    witness = reduction_number(j_poly, i_poly, 10)
    assert isinstance(witness, ReductionWitness) and witness.k == 1
    cert = cramer_certificate(f, j_poly, i_poly, witness.k)
    assert cert.degree == 3
    assert cert.verify(J22)
    # matches the hand expansion t^3 - x^2 y^2 t
    assert cert.coefficients[0].is_zero
    assert cert.coefficients[1] == P("-x^2*y^2")
    assert cert.coefficients[2].is_zero


def test_cramer_certificate_trivial_cases():
    j_poly = to_poly_ideal(J22)
    cert = cramer_certificate(P("x^2"), j_poly, j_poly, 0)
    assert cert.degree == 1
    assert cert.coefficients == (P("-x^2"),)
    assert cert.verify(J22)

    single = PolyIdeal(2, (P("x^2"),))
    cert = cramer_certificate(P("x^2"), single, single, 0)
    assert cert.degree == 1
    assert cert.coefficients == (P("-x^2"),)
    assert cert.verify(single)


def test_cramer_certificate_checks_preconditions():
    j_poly = to_poly_ideal(J22)
    i_poly = poly_ideal_sum(j_poly, PolyIdeal(2, (P("x*y"),)))
    with pytest.raises(PreconditionError):
        cramer_certificate(P("x"), j_poly, i_poly, 1)  # x not in I
    with pytest.raises(PreconditionError):
        cramer_certificate(P("x*y"), j_poly, i_poly, 0)  # k=0 is not a reduction


def test_cramer_certificate_general_coefficients():
    j_poly = PolyIdeal(2, (P("x^2"), P("y^2")))
    f = P("x^2 + x*y")
    i_poly = poly_ideal_sum(j_poly, PolyIdeal(2, (f,)))
    witness = reduction_number(j_poly, i_poly, 10)
    assert isinstance(witness, ReductionWitness)
    cert = cramer_certificate(f, j_poly, i_poly, witness.k)
    assert cert.verify(j_poly)


# -- the reduction/integrality equivalence ---------------------------------------


@given(st.integers(0, 50_000))
@settings(max_examples=60, deadline=None)
def test_integrality_decision_matches_reduction_search(seed):
    rng = random.Random(seed)
    dim = rng.choice((2, 3))
    base = random_monomial_ideal(rng, dim, min_gens=2, max_gens=4, max_exp=4)
    extras = [tuple(rng.randint(0, 5) for _ in range(dim)) for _ in range(rng.randint(0, 2))]
    bigger = ideal_sum(base, minimalize(dim, extras)) if extras else base
    decided = is_integral_ideal(base, bigger)
    searched = reduction_number(base, bigger, 10)
    assert decided in (YES, NO)
    assert decided.is_yes == isinstance(searched, ReductionWitness)


@given(st.integers(0, 5_000))
@settings(max_examples=30, deadline=None)
def test_closure_is_a_reduction(seed):
    rng = random.Random(seed)
    dim = rng.choice((2, 3))
    ideal = random_monomial_ideal(rng, dim, min_gens=2, max_gens=4, max_exp=4)
    witness = reduction_number(ideal, closure(ideal), 10)
    assert isinstance(witness, ReductionWitness)


@given(st.integers(0, 5_000))
@settings(max_examples=25, deadline=None)
def test_reduction_number_respects_degree_sum_bound(seed):
    rng = random.Random(seed)
    dim = rng.choice((2, 3))
    ideal = random_monomial_ideal(rng, dim, min_gens=2, max_gens=3, max_exp=4)
    closed = closure(ideal)
    member = closed.gens[rng.randrange(len(closed.gens))]
    extended = ideal_sum(ideal, minimalize(dim, [member]))
    witness = reduction_number(ideal, extended, 30)
    assert isinstance(witness, ReductionWitness)
    # one certificate of degree 1 per generator already inside, plus the
    # extracted degree for the adjoined monomial, plus one
    degrees = len(ideal.gens) + monomial_certificate(member, ideal).degree
    assert witness.k <= degrees + 1


# -- certificate plumbing ---------------------------------------------------------


def test_certificate_verify_rejects_damage():
    cert = monomial_certificate((1, 1), J22)
    broken = IntegralityCertificate(
        cert.element, cert.degree, (P("0"), P("-x^2*y")), cert.proofs
    )
    assert not broken.verify(J22)
    wrong_power = IntegralityCertificate(
        cert.element,
        cert.degree,
        cert.coefficients,
        (MembershipProof(2, (), ()), cert.proofs[1]),
    )
    assert not wrong_power.verify(J22)


def test_membership_proof_empty_sum_is_zero():
    proof = MembershipProof(1, (), ())
    assert proof.evaluates_to(Polynomial.zero(2))
    assert not proof.evaluates_to(Polynomial.one(2))


def test_certificate_scale_root():
    cert = monomial_certificate((1, 1), J22)
    scaled = cert.scale_root(Fraction(-3, 2))
    assert scaled.element == P("-3/2*x*y")
    assert scaled.verify(J22)
    with pytest.raises(PreconditionError):
        cert.scale_root(0)
