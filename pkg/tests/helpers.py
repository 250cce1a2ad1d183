"""Shared test utilities: tiny constructors and independent oracles.

The oracles here deliberately re-derive answers from first principles
(divisibility scans, scaling, cofactor expansion) so library paths are
checked against something they do not share code with.
"""

from __future__ import annotations

import random
from fractions import Fraction

from closure_lab.monomials import MonomialIdeal, ideal_power, minimalize
from closure_lab.polynomials import Polynomial


def mono(dim, *gens) -> MonomialIdeal:
    return minimalize(dim, gens)


def brute_contains(ideal: MonomialIdeal, m) -> bool:
    """Independent divisibility scan."""
    for g in ideal.gens:
        if all(g[i] <= m[i] for i in range(len(m))):
            return True
    return False


def scaling_closure_member(ideal: MonomialIdeal, m, n_limit: int = 6) -> bool:
    """Brute-force oracle: x^m is integral over J iff (x^m)^n lies in J^n for
    some n; checked for n up to n_limit by plain divisibility."""
    for n in range(1, n_limit + 1):
        target = tuple(n * c for c in m)
        power = ideal_power(ideal, n)
        if any(all(g[i] <= target[i] for i in range(len(target))) for g in power.gens):
            return True
    return False


def iterated_product(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-fold product computed the slow, definitional way."""
    from closure_lab.monomials import ideal_product, unit_ideal

    result = unit_ideal(ideal.dim)
    for _ in range(n):
        result = ideal_product(result, ideal)
    return result


def random_polynomial(
    rng: random.Random, dim: int, max_terms: int = 4, max_exp: int = 3
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(dim))
        numerator = rng.randint(-4, 4)
        if numerator == 0:
            numerator = 1
        terms[exps] = Fraction(numerator, rng.randint(1, 3))
    return Polynomial(dim, terms)


def random_nonzero_polynomial(rng: random.Random, dim: int, **kwargs) -> Polynomial:
    while True:
        poly = random_polynomial(rng, dim, **kwargs)
        if not poly.is_zero:
            return poly
