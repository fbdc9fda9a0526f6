""" Tests for the paving of F_gamma and the Poincare polynomial, see
fundom.paving.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import pytest

from .family import hexagon_membership
from .paving import (
    COMPLEMENT_LABELS,
    TRIANGLE_LABELS,
    cell_dimension,
    closed_form,
    complement_exponent,
    complement_region,
    complement_sum_bruteforce,
    complement_sum_closed,
    complement_total,
    fundamental_fixed_points,
    poincare_pipeline,
    region_sum_bruteforce,
    region_sum_closed,
    triangle_points,
    triangle_region,
    triangle_total,
    v_overlap_point,
    v_partition,
    v_region,
)
from .series import coefficients, evaluate_at_one, q_poly, to_t
from .weyl import RootValuation

SORTED_PAIRS = [(a, b) for b in range(1, 11) for a in range(1, b + 1)]


# ==============================================================================
# Poincare polynomial
# ==============================================================================

@pytest.mark.parametrize("a, b", SORTED_PAIRS)
def test_pipeline_equals_closed_form(a, b):
    assert poincare_pipeline((a, b)) == closed_form((a, b))


@pytest.mark.parametrize("vals, q_coeffs", [
    ((1, 1), [1, 1, 4, 1]),
    ((1, 2), [1, 1, 3, 4, 1]),
    ((2, 2), [1, 1, 2, 2, 8, 4, 1]),
])
def test_closed_form_values(vals, q_coeffs):
    p = closed_form(vals)
    assert coefficients(p) == q_coeffs
    assert coefficients(to_t(p))[::2] == q_coeffs


def test_pipeline_halves():
    assert coefficients(triangle_total((1, 2))) == [1, 1, 5, 7, 1]
    assert coefficients(complement_total((1, 2))) == [0, 0, 2, 3]
    assert poincare_pipeline((1, 2), bruteforce=True) == closed_form((1, 2))


def test_swapped_valuations():
    assert closed_form((2, 1)) == closed_form((1, 2))
    assert poincare_pipeline(RootValuation((5, 2))) == closed_form((2, 5))
    with pytest.raises(ValueError):
        triangle_total((2, 1))


@pytest.mark.parametrize("a, b", SORTED_PAIRS)
def test_euler_characteristic(a, b):
    p = closed_form((a, b))
    assert evaluate_at_one(p) == len(fundamental_fixed_points((a, b)))
    assert p.degree() == 2 * a + b
    assert p.LC() == 1


@pytest.mark.parametrize("vals, count", [((1, 1), 7), ((1, 2), 10),
                                         ((2, 2), 19)])
def test_fixed_point_counts(vals, count):
    assert len(fundamental_fixed_points(vals)) == count


# ==============================================================================
# Regions
# ==============================================================================

@pytest.mark.parametrize("a, b", SORTED_PAIRS)
def test_region_sums(a, b):
    for label in TRIANGLE_LABELS:
        assert (region_sum_bruteforce((a, b), label)
                == region_sum_closed((a, b), label))
    for label in COMPLEMENT_LABELS:
        assert (complement_sum_bruteforce((a, b), label)
                == complement_sum_closed((a, b), label))


@pytest.mark.parametrize("a, b", SORTED_PAIRS)
def test_partitions_are_total(a, b):
    rv = RootValuation((a, b))
    L = 2 * a + b
    pts = triangle_points(rv)
    assert len(pts) == (L + 1) * (L + 2) // 2
    seen = {label: 0 for label in TRIANGLE_LABELS}
    for mu in pts:
        seen[triangle_region(rv, mu)] += 1
        outside = complement_region(rv, mu) is not None
        assert outside != hexagon_membership(rv, mu)
    assert sum(seen.values()) == len(pts)


@pytest.mark.parametrize("vals, mu, dim", [
    ((1, 2), (3, 1, 0), 2),
    ((1, 2), (3, 0, 1), 1),
    ((1, 2), (4, 0, 0), 0),
    ((1, 2), (0, 0, 4), 3),
    ((1, 1), (1, 1, 1), 2),
])
def test_cell_dimension(vals, mu, dim):
    assert cell_dimension(vals, mu) == dim


def test_region_examples():
    assert triangle_region((1, 2), (4, 0, 0)) == 'R4p'
    assert triangle_region((1, 2), (0, 4, 0)) == 'R1'
    assert triangle_region((1, 2), (0, 0, 4)) == 'R1p'
    assert complement_region((1, 2), (4, 0, 0)) == 'T1'
    assert complement_region((1, 2), (3, 1, 0)) == 'T1p'
    assert complement_region((1, 2), (2, 2, 0)) is None


def test_region_errors():
    with pytest.raises(ValueError):
        triangle_region((1, 2), (5, 0, 0))
    with pytest.raises(ValueError):
        triangle_region((1, 2), (5, -1, 0))
    with pytest.raises(ValueError):
        cell_dimension((2, 1), (4, 0, 0))
    with pytest.raises(ValueError):
        region_sum_closed((1, 2), 'R9')
    with pytest.raises(ValueError):
        complement_exponent((1, 2), (4, 0, 0), 'R1')


def test_single_region_contribution():
    # R3 for n = (1, 2): points with mu_2, mu_3 >= 1
    assert region_sum_closed((1, 2), 'R3') == q_poly({2: 3, 3: 2, 4: 1})


# ==============================================================================
# Nonstandard paving
# ==============================================================================

@pytest.mark.parametrize("a, b", SORTED_PAIRS)
def test_v_partition_covers(a, b):
    labels, overlap = v_partition((a, b))
    assert list(labels) == fundamental_fixed_points((a, b))
    assert len(overlap) <= 1
    point = v_overlap_point((a, b))
    assert overlap == ([] if point is None else [point])


def test_v_examples():
    labels, overlap = v_partition((1, 2))
    assert len(labels) == 10
    assert overlap == []
    assert v_overlap_point((1, 4)) == (0, 3, 3)
    assert v_region((1, 4), (0, 3, 3)) == 'V1'
    assert v_region((2, 2), (4, 1, 1)) == 'V3'


def test_v_region_outside():
    with pytest.raises(ValueError):
        v_region((1, 2), (4, 0, 0))
