"""Exact arithmetic on monomials and monomial ideals.

A monomial x^a is identified with its exponent vector a, a tuple of
nonnegative integers whose length is the ambient variable count. A monomial
ideal is identified with the antichain of its minimal generators under
componentwise <=; the zero ideal is the empty antichain and the unit ideal
is the single all-zeros vector.

All values are immutable and every operation is a pure function of its
inputs, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .config import DEFAULT_GENERATOR_CAP
from .errors import DimensionMismatchError, InstanceTooLargeError, PreconditionError

ExponentVector = tuple  # concretely tuple[int, ...]; length = ambient dimension


def as_exponent_vector(coords: Iterable[int], dim: int) -> ExponentVector:
    """Validate and freeze an exponent vector of the given ambient dimension."""
    vec = tuple(int(c) for c in coords)
    if len(vec) != dim:
        raise DimensionMismatchError(f"expected {dim} exponents, got {len(vec)}")
    if any(c < 0 for c in vec):
        raise PreconditionError(f"exponents must be nonnegative, got {vec}")
    return vec


def divides(g: ExponentVector, m: ExponentVector) -> bool:
    """True iff x^g divides x^m, i.e. g <= m componentwise."""
    return all(a <= b for a, b in zip(g, m))


def vector_sum(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def total_degree(a: ExponentVector) -> int:
    return sum(a)


def _minimal_vectors(vectors: Iterable[ExponentVector]) -> list[ExponentVector]:
    """The <=-minimal elements of a set of vectors (sorted, deduplicated)."""
    # Sorting by total degree means a vector can only be dominated by an
    # earlier survivor, so one forward pass suffices.
    pending = sorted(set(vectors), key=lambda v: (total_degree(v), v))
    kept: list[ExponentVector] = []
    for v in pending:
        if not any(divides(g, v) for g in kept):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonically represented by its minimal generators.

    The constructor accepts any generating set: it validates dimensions,
    deduplicates, drops non-minimal generators and stores the antichain in
    descending lexicographic order, so equal ideals compare equal.
    """

    dim: int
    gens: tuple[ExponentVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise PreconditionError(f"ambient dimension must be >= 1, got {self.dim}")
        vecs = [as_exponent_vector(v, self.dim) for v in self.gens]
        minimal = tuple(sorted(_minimal_vectors(vecs), reverse=True))
        object.__setattr__(self, "gens", minimal)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def zero_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ())


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ((0,) * dim,))


def minimalize(dim: int, vectors: Iterable[ExponentVector]) -> MonomialIdeal:
    """The ideal generated by ``vectors``, reduced to its minimal antichain."""
    return MonomialIdeal(dim, tuple(tuple(v) for v in vectors))


def _check_same_dim(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"ideal dimensions differ: {a.dim} vs {b.dim}")


def contains_monomial(ideal: MonomialIdeal, m: ExponentVector) -> bool:
    """True iff x^m lies in the ideal, i.e. some generator divides m."""
    m = as_exponent_vector(m, ideal.dim)
    return any(divides(g, m) for g in ideal.gens)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    return MonomialIdeal(a.dim, a.gens + b.gens)


def ideal_product(
    a: MonomialIdeal, b: MonomialIdeal, generator_cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    """The product ideal, minimalized; the cap bounds the minimalized size."""
    _check_same_dim(a, b)
    if a.is_zero or b.is_zero:
        return zero_ideal(a.dim)
    pairwise = {vector_sum(g, h) for g in a.gens for h in b.gens}
    result = MonomialIdeal(a.dim, tuple(pairwise))
    if len(result.gens) > generator_cap:
        raise InstanceTooLargeError(
            f"product has {len(result.gens)} minimal generators, cap is {generator_cap}"
        )
    return result


@lru_cache(maxsize=4096)
def ideal_power(
    a: MonomialIdeal, n: int, generator_cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    """The n-th power, with A^0 the unit ideal; computed by binary powering.

    Binary powering with minimalization at each product equals the n-fold
    product because monomial ideal multiplication is associative and the
    minimal-generator representation is canonical.
    """
    if n < 0:
        raise PreconditionError(f"exponent must be nonnegative, got {n}")
    if n == 0:
        return unit_ideal(a.dim)
    result: MonomialIdeal | None = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else ideal_product(result, base, generator_cap)
        n >>= 1
        if n:
            base = ideal_product(base, base, generator_cap)
    assert result is not None
    return result


def ideal_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff b is a subideal of a (every generator of b lies in a)."""
    _check_same_dim(a, b)
    return all(contains_monomial(a, g) for g in b.gens)
