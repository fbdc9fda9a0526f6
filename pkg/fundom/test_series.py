""" Tests for the exact polynomials and the generating series, see
fundom.series.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import pytest

from .paving import closed_form
from .series import (
    DEFAULT_ORDER,
    BiSeries,
    Monomial,
    RationalFn,
    Term,
    coefficients,
    corollary_expression,
    diagonal_function,
    direct_series,
    evaluate_at_one,
    expand_rational,
    fold,
    generating_function,
    poly_doc,
    poly_text,
    q_poly,
    series_equal,
    shape_violations,
    symmetric_expression,
    t_poly,
    to_t,
)


# ==============================================================================
# Polynomials
# ==============================================================================

def test_q_poly_and_helpers():
    p = q_poly([1, 1, 4, 1])
    assert p == q_poly({0: 1, 1: 1, 2: 4, 3: 1})
    assert coefficients(to_t(p)) == [1, 0, 1, 0, 4, 0, 1]
    assert evaluate_at_one(p) == 7
    assert poly_text(to_t(p)) == "1 + t^2 + 4t^4 + t^6"
    assert poly_text(p) == "1 + q + 4q^2 + q^3"
    assert poly_doc(p) == dict(q=[1, 1, 4, 1], t=[1, 0, 1, 0, 4, 0, 1],
                               text="1 + t^2 + 4t^4 + t^6")


def test_arithmetic():
    p = q_poly([1, 1])
    assert coefficients(p * p) == [1, 2, 1]
    assert coefficients(p - p) == []
    assert poly_text(q_poly({})) == "0"
    assert poly_text(t_poly({1: -2, 3: 1})) == "-2t + t^3"


def test_negative_exponent():
    with pytest.raises(ValueError):
        q_poly({-1: 1})
    with pytest.raises(ValueError):
        to_t(t_poly([1]))


# ==============================================================================
# Expansion
# ==============================================================================

def test_geometric_expansion():
    f = RationalFn((Term(1, Monomial(1, T1=1), (Monomial(1, T1=1),)),))
    s = expand_rational(f, 3)
    assert s.indices() == [(1, 0), (2, 0), (3, 0)]
    assert all(coefficients(s.coefficient(k, 0)) == [1] for k in (1, 2, 3))

    f = RationalFn((Term(-1, Monomial(2, t=1, T2=1), (Monomial(3, t=2, T2=1),)),))
    s = expand_rational(f, 2)
    assert coefficients(s.coefficient(0, 1)) == [0, -2]
    assert coefficients(s.coefficient(0, 2)) == [0, 0, 0, -6]


def test_zero_degree_factor():
    f = RationalFn((Term(1, Monomial(1), (Monomial(1, t=2),)),))
    with pytest.raises(ValueError):
        expand_rational(f, 4)


def test_generating_function_coefficients():
    order = 8
    s = expand_rational(generating_function(), order)
    for a in range(1, order):
        for b in range(a, order - a + 1):
            assert s.coefficient(a, b) == to_t(closed_form((a, b)))
    assert all(a <= b for a, b in s.indices())
    d = expand_rational(diagonal_function(), order)
    assert all(a == b for a, b in d.indices())
    assert d.coefficient(2, 2) == to_t(closed_form((2, 2)))


def test_symmetric_expression_matches_direct():
    left = expand_rational(symmetric_expression(), DEFAULT_ORDER)
    right = direct_series(DEFAULT_ORDER)
    result = series_equal(left, right)
    assert result.equal, result
    assert left == right


def test_corollary_expression_is_folded():
    left = expand_rational(corollary_expression(), DEFAULT_ORDER)
    direct = direct_series(DEFAULT_ORDER)
    assert series_equal(left, fold(direct)).equal
    result = series_equal(left, direct)
    assert not result.equal
    assert result.index == (1, 2)
    assert result.left == 2 * to_t(closed_form((1, 2)))
    assert result.right == to_t(closed_form((1, 2)))


# ==============================================================================
# Series
# ==============================================================================

def test_direct_series():
    s = direct_series(2)
    assert s.indices() == [(1, 1)]
    assert coefficients(s.coefficient(1, 1)) == [1, 0, 1, 0, 4, 0, 1]
    assert s.coefficient(0, 2).is_zero
    assert shape_violations(direct_series(10)) == []
    with pytest.raises(ValueError):
        direct_series(1)


def test_fold():
    s = direct_series(5)
    folded = fold(s)
    assert folded.coefficient(2, 3) == 2 * s.coefficient(2, 3)
    assert folded.coefficient(2, 2) == s.coefficient(2, 2)
    assert folded.coefficient(3, 2).is_zero


def test_series_equal_checks_order():
    with pytest.raises(ValueError):
        series_equal(direct_series(3), direct_series(4))
    assert series_equal(direct_series(3), direct_series(4), order=3).equal
    with pytest.raises(ValueError):
        series_equal(direct_series(3), direct_series(4), order=4)


def test_bi_series_bounds():
    with pytest.raises(ValueError):
        BiSeries(2, {(2, 1): t_poly([1])})
    with pytest.raises(ValueError):
        BiSeries(2, {(-1, 1): t_poly([1])})
    assert BiSeries(2, {(1, 1): t_poly([])}).indices() == []


def test_expansion_examples():
    x = Monomial(1, T1=1, T2=1)
    y = Monomial(1, T2=1)
    s = expand_rational(RationalFn((Term(1, Monomial(1), (x,)),)), 4)
    assert s.indices() == [(0, 0), (1, 1), (2, 2)]
    s = expand_rational(RationalFn((Term(1, x, (y, x)),)), 4)
    assert s.indices() == [(1, 1), (1, 2), (1, 3), (2, 2)]
    assert all(coefficients(s.coefficient(*k)) == [1] for k in s.indices())
    s = expand_rational(corollary_expression(), 4)
    assert coefficients(s.coefficient(1, 1)) == [1, 0, 1, 0, 4, 0, 1]


def test_expansion_is_additive():
    f = symmetric_expression()
    joint = expand_rational(f, 6)
    parts = [expand_rational(RationalFn((term,)), 6) for term in f.terms]
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    assert series_equal(joint, total).equal
    assert shape_violations(joint) == []


def test_direct_series_properties():
    s = direct_series(8)
    for (a, b), p in s.coeffs.items():
        assert s.coefficient(b, a) == p
        assert min(coefficients(p)) >= 0
    assert s.coefficient(2, 1) == to_t(q_poly([1, 1, 3, 4, 1]))


def test_series_equal_reports_perturbation():
    a = direct_series(4)
    assert series_equal(a, a).equal
    coeffs = dict(a.coeffs)
    coeffs[(2, 2)] = coeffs[(2, 2)] + t_poly([0, 1])
    result = series_equal(a, BiSeries(4, coeffs))
    assert not result.equal
    assert result.index == (2, 2)
    assert result.right - result.left == t_poly([0, 1])
