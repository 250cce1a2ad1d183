from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from closure_lab.errors import PreconditionError
from closure_lab.simplex import Feasible, Infeasible, dominating_combination


def check_feasible(result, vertices, point):
    assert isinstance(result, Feasible)
    lams = result.lambdas
    assert len(lams) == len(vertices)
    assert all(lam >= 0 for lam in lams)
    assert sum(lams, Fraction(0)) == 1
    for j in range(len(point)):
        combo = sum((lam * v[j] for lam, v in zip(lams, vertices)), Fraction(0))
        assert combo <= point[j]


def check_infeasible(result, vertices, point):
    assert isinstance(result, Infeasible)
    w = result.functional
    assert all(value >= 0 for value in w)
    for v in vertices:
        assert sum((x * c for x, c in zip(w, v)), Fraction(0)) >= 1
    assert sum((x * c for x, c in zip(w, point)), Fraction(0)) < 1


def test_midpoint_certificate():
    result = dominating_combination([(2, 0), (0, 2)], (1, 1))
    check_feasible(result, [(2, 0), (0, 2)], (1, 1))
    assert result.lambdas == (Fraction(1, 2), Fraction(1, 2))


def test_infeasible_point_gets_separating_functional():
    result = dominating_combination([(2, 0), (0, 2)], (1, 0))
    check_infeasible(result, [(2, 0), (0, 2)], (1, 0))


def test_single_vertex_translation():
    result = dominating_combination([(1, 0)], (1, 5))
    check_feasible(result, [(1, 0)], (1, 5))
    assert result.lambdas == (Fraction(1),)


def test_zero_vertex_makes_everything_feasible():
    result = dominating_combination([(0, 0), (9, 9)], (0, 0))
    check_feasible(result, [(0, 0), (9, 9)], (0, 0))


def test_empty_vertex_list_is_infeasible():
    result = dominating_combination([], (1, 1))
    assert isinstance(result, Infeasible)


def test_negative_point_rejected():
    with pytest.raises(PreconditionError):
        dominating_combination([(1, 0)], (-1, 0))


points3 = st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))


@given(st.lists(points3, min_size=1, max_size=5), points3)
def test_outcome_is_always_exactly_verifiable(vertices, point):
    result = dominating_combination(vertices, point)
    if isinstance(result, Feasible):
        check_feasible(result, vertices, point)
    else:
        check_infeasible(result, vertices, point)


@given(st.lists(points3, min_size=1, max_size=4), points3)
def test_dominated_vertices_never_change_the_answer(vertices, point):
    padded = vertices + [tuple(c + 1 for c in vertices[0])]
    plain = isinstance(dominating_combination(vertices, point), Feasible)
    noisy = isinstance(dominating_combination(padded, point), Feasible)
    assert plain == noisy
