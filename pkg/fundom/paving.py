""" Affine paving of the GL_3 fundamental domain and its Poincare polynomial.

For n = (n_1, n_2) with a = n_1 <= b = n_2 and L = 2a + b the fixed points of
the Schubert variety Sch(L,0,0) form the triangle {mu >= 0, sum mu = L}. The
Iwahori cell of mu meets the affine Springer fiber in an affine space of
dimension

    min(a, mu_2) + min(a, mu_3) + min(b, f(mu_2 - mu_3)),

with f(x) = x for x >= 0 and f(x) = |x| - 1 for x < 0 (sign(0) = 1). The
triangle is cut into seven regions R1, ..., R4p, each with a closed-form
contribution. Removing the four regions T1, T2, T3, T1p of the complement of
the hexagon gives the Poincare polynomial of F_gamma, which must agree with
the closed formula

    sum_{i=1}^{a} i (q^{2i-1} + q^{2i-2}) + sum_{e=2a}^{a+b-1} (2a+1) q^e
      + sum_{e=a+b}^{L-1} 4 (L-e) q^e + q^L.

All polynomials are in q = t^2 (sympy Poly over ZZ, see `fundom.series`).

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import logging
from collections import Counter
from functools import lru_cache

from .family import hexagon_membership
from .series import q_poly
from .util import PartitionError, as_coweight, level, nonnegative_points
from .weyl import RootValuation

logger = logging.getLogger(__name__)


TRIANGLE_LABELS = ('R1', 'R1p', 'R2', 'R2p', 'R3', 'R4', 'R4p')
COMPLEMENT_LABELS = ('T1', 'T2', 'T3', 'T1p')
V_LABELS = ('V1', 'V1p', 'V2', 'V3')

# Conventions recorded in output metadata
SIGN_ZERO = 1
V_PRIORITY = 'V1'
V_TIE = 'V3'


# ==============================================================================
# Input handling
# ==============================================================================

def as_valuation(rv):
    """Accept a RootValuation or a pair (n_1, n_2)."""
    if not isinstance(rv, RootValuation):
        rv = RootValuation(tuple(rv))
    if rv.d != 3:
        raise ValueError("Invalid arg `rv`, the paving is computed for GL_3")
    return rv


def sorted_valuation(rv):
    """Return (rv with n_1 <= n_2, swapped flag).

    F_{n_2,n_1} and F_{n_1,n_2} share their Poincare polynomial.

    """
    rv = as_valuation(rv)
    if rv.is_sorted:
        return rv, False
    return rv.swapped(), True


def _params(rv):
    rv = as_valuation(rv)
    a, b = rv.simple_vals
    if a > b:
        raise ValueError(
            "Invalid arg `rv`, the regions assume n_1 <= n_2, got {}"
            .format(rv.simple_vals)
        )
    return a, b, 2 * a + b


def _triangle_point(rv, mu):
    a, b, L = _params(rv)
    mu = as_coweight(mu, 3)
    if min(mu) < 0 or level(mu) != L:
        raise ValueError(
            "Invalid arg `mu`, {} is not a fixed point of Sch({},0,0)"
            .format(mu, L)
        )
    return mu


def _f(x):
    # |x| + (sign(x) - 1)/2 with sign(0) = 1
    return x if x >= 0 else -x - 1


# ==============================================================================
# Triangle
# ==============================================================================

def triangle_points(rv):
    """Fixed points of Sch(2n_1+n_2, 0, 0), lexicographically sorted."""
    a, b, L = _params(rv)
    return nonnegative_points(L, 3)


def cell_dimension(rv, mu):
    """Dimension of the affine cell C(mu) meeting the affine Springer fiber.

    Parameters
    ----------
    rv : RootValuation or pair
        n_1 <= n_2.

    mu : sequence of int
        A fixed point of the triangle.

    Returns
    -------
    dim : int

    Raises
    ------
    ValueError
        If `mu` is outside the triangle.

    """
    a, b, L = _params(rv)
    mu = _triangle_point(rv, mu)
    return min(a, mu[1]) + min(a, mu[2]) + min(b, _f(mu[1] - mu[2]))


def _triangle_matches(a, b, L, mu):
    m1, m2, m3 = mu
    return [
        label for label, hit in (
            ('R1', m2 - m3 > b),
            ('R1p', m3 - m2 > b),
            ('R2', m2 - m3 <= b and m3 < a and m2 > a),
            ('R2p', m3 - m2 <= b and m2 < a and m3 > a),
            ('R3', m2 >= a and m3 >= a),
            ('R4', m2 <= a and m3 <= a and b < m1 <= a + b),
            ('R4p', m2 < a and m3 < a and a + b < m1 <= L),
        ) if hit
    ]


def triangle_region(rv, mu):
    """The region R1, R1p, R2, R2p, R3, R4 or R4p containing `mu`.

    Raises
    ------
    PartitionError
        If zero or several of the seven predicates hold.

    """
    a, b, L = _params(rv)
    mu = _triangle_point(rv, mu)
    hits = _triangle_matches(a, b, L, mu)
    if len(hits) != 1:
        raise PartitionError(
            "Triangle point {} of {} matches {}".format(mu, rv, hits or "none"))
    return hits[0]


@lru_cache(maxsize=256)
def _triangle_sums(rv):
    counts = {label: Counter() for label in TRIANGLE_LABELS}
    for mu in triangle_points(rv):
        counts[triangle_region(rv, mu)][cell_dimension(rv, mu)] += 1
    return counts


def region_sum_bruteforce(rv, label):
    """Sum of q^dim C(mu) over the triangle points of one region."""
    rv = as_valuation(rv)
    _params(rv)
    if label not in TRIANGLE_LABELS:
        raise ValueError("Invalid arg `label` {!r}".format(label))
    return q_poly(_triangle_sums(rv)[label])


def region_sum_closed(rv, label):
    """Closed-form contribution of one triangle region.

    Parameters
    ----------
    rv : RootValuation or pair
        n_1 <= n_2.

    label : str
        One of `TRIANGLE_LABELS`.

    Returns
    -------
    poly : sympy.Poly
        Polynomial in q.

    """
    a, b, L = _params(rv)
    c = Counter()
    if label in ('R1', 'R1p'):
        for j in range(1, a + 1):
            c[L - j] += 2 * j
    elif label in ('R2', 'R2p'):
        shift = 0 if label == 'R2' else -1
        for e in range(2 * a + 1, a + b + 1):
            c[e + shift] += a
        for i in range(1, a):
            c[a + b + i + shift] += a - i
    elif label == 'R3':
        for i in range(b + 1):
            c[2 * a + i] += b + 1 - i
    elif label == 'R4':
        c[2 * a] += a
        for i in range(a):
            c[a + i] += i + 1
    elif label == 'R4p':
        for i in range(a):
            for k in range(i + 1):
                c[i + k] += 1
    else:
        raise ValueError("Invalid arg `label` {!r}".format(label))
    return q_poly(c)


def triangle_total(rv, bruteforce=False):
    """Poincare polynomial of the affine Springer fiber inside Sch(L,0,0)."""
    total = q_poly({})
    for label in TRIANGLE_LABELS:
        if bruteforce:
            total += region_sum_bruteforce(rv, label)
        else:
            total += region_sum_closed(rv, label)
    return total


# ==============================================================================
# Complement of the hexagon
# ==============================================================================

def complement_region(rv, mu):
    """The region T1, T2, T3 or T1p containing `mu`, None on the hexagon.

    Raises
    ------
    PartitionError
        On a double match, or if the hexagon test disagrees with the regions.

    """
    a, b, L = _params(rv)
    mu = _triangle_point(rv, mu)
    m1, m2, m3 = mu
    hits = [label for label, hit in (
        ('T1', m1 >= a + b + 1),
        ('T2', m2 >= a + b + 1),
        ('T3', m3 >= a + b + 1),
        ('T1p', 2 * a + 1 <= m1 <= a + b),
    ) if hit]
    if len(hits) > 1:
        raise PartitionError(
            "Triangle point {} of {} matches {}".format(mu, rv, hits))
    inside = hexagon_membership(as_valuation(rv), mu)
    if inside == bool(hits):
        raise PartitionError(
            "Point {} of {}: hexagon test and complement regions disagree"
            .format(mu, rv)
        )
    return hits[0] if hits else None


def complement_exponent(rv, mu, label):
    """Cell dimension used for a complement point of region `label`."""
    a, b, L = _params(rv)
    m1, m2, m3 = _triangle_point(rv, mu)
    if label in ('T1', 'T1p'):
        return 2 * a + _f(m2 - m3)
    if label == 'T2':
        return a + b + m3
    if label == 'T3':
        return a + b + m2
    raise ValueError("Invalid arg `label` {!r}".format(label))


def complement_sum_bruteforce(rv, label):
    """Pointwise sum of q^exponent over one complement region."""
    rv = as_valuation(rv)
    if label not in COMPLEMENT_LABELS:
        raise ValueError("Invalid arg `label` {!r}".format(label))
    c = Counter(complement_exponent(rv, mu, label)
                for mu in triangle_points(rv)
                if complement_region(rv, mu) == label)
    return q_poly(c)


def complement_sum_closed(rv, label):
    """Closed-form contribution of one complement region."""
    a, b, L = _params(rv)
    c = Counter()
    if label in ('T1', 'T1p'):
        lo, hi = (0, a) if label == 'T1' else (a, b)
        for i in range(lo, hi):
            for k in range(i + 1):
                c[2 * a + k] += 1
    elif label in ('T2', 'T3'):
        for j in range(1, a + 1):
            c[L - j] += j
    else:
        raise ValueError("Invalid arg `label` {!r}".format(label))
    return q_poly(c)


def complement_total(rv, bruteforce=False):
    total = q_poly({})
    for label in COMPLEMENT_LABELS:
        if bruteforce:
            total += complement_sum_bruteforce(rv, label)
        else:
            total += complement_sum_closed(rv, label)
    return total


# ==============================================================================
# Poincare polynomial
# ==============================================================================

def poincare_pipeline(rv, bruteforce=False):
    """Triangle contributions minus complement contributions, in q.

    Parameters
    ----------
    rv : RootValuation or pair
        n_1 > n_2 is normalised by swapping.

    bruteforce : bool, optional
        Sum the cell dimensions point by point instead of the closed region
        formulas. Default False.

    Returns
    -------
    poly : sympy.Poly
        Polynomial in q; see `fundom.series.to_t` for the t form.

    """
    rv, swapped = sorted_valuation(rv)
    poly = triangle_total(rv, bruteforce) - complement_total(rv, bruteforce)
    logger.debug("pipeline %s (swapped=%s): %s", rv, swapped, poly)
    return poly


def closed_form(rv):
    """Closed formula for the Poincare polynomial of F_gamma, in q.

    n_1 > n_2 is normalised by swapping.

    """
    rv, _ = sorted_valuation(rv)
    a, b = rv.simple_vals
    L = 2 * a + b
    c = Counter()
    for i in range(1, a + 1):
        c[2 * i - 1] += i
        c[2 * i - 2] += i
    for e in range(2 * a, a + b):
        c[e] += 2 * a + 1
    for e in range(a + b, L):
        c[e] += 4 * (L - e)
    c[L] += 1
    return q_poly(c)


def fundamental_fixed_points(rv):
    """Fixed points of F_gamma (hexagon box), lexicographically sorted."""
    a, b, L = _params(rv)
    return [mu for mu in triangle_points(rv)
            if mu[0] <= 2 * a and mu[1] <= a + b and mu[2] <= a + b]


# ==============================================================================
# Nonstandard paving
# ==============================================================================

def _v_matches(a, b, mu):
    m1, m2, m3 = mu
    p1, p2, p3 = m1 - a, m2 - b, m3 - b
    gap = b - a
    return [label for label, hit in (
        ('V1', p1 <= p2 and p1 <= p3),
        ('V1p', p1 >= p2 and p1 >= p3 and m2 <= gap and m3 <= gap),
        ('V2', p2 < p1 and p2 < p3 and m3 > gap),
        # the ray p2 == p3 < p1 beyond gap is covered by V3
        ('V3', p3 < p1 and p3 <= p2 and m2 > gap),
    ) if hit]


def v_region(rv, mu):
    """The piece V1, V1p, V2 or V3 of the nonstandard paving containing `mu`.

    A point matching both V1 and V1p is assigned V1.

    Raises
    ------
    ValueError
        If `mu` is not a fixed point of F_gamma.

    PartitionError
        If no piece contains `mu`.

    """
    a, b, L = _params(rv)
    mu = _triangle_point(rv, mu)
    if not hexagon_membership(as_valuation(rv), mu):
        raise ValueError("Invalid arg `mu`, {} is not in F_gamma".format(mu))
    hits = _v_matches(a, b, mu)
    if not hits:
        raise PartitionError("Point {} of {} in no V-region".format(mu, rv))
    if len(hits) > 1 and set(hits) != {'V1', 'V1p'}:
        raise PartitionError(
            "Point {} of {} matches {}".format(mu, rv, hits))
    return hits[0]


def v_partition(rv):
    """V-labels of all fixed points of F_gamma and the V1/V1p overlap.

    Returns
    -------
    labels : dict
        mu -> label, in lexicographic order of mu.

    overlap : list
        Points matching both V1 and V1p.

    """
    a, b, L = _params(rv)
    labels = {}
    overlap = []
    for mu in fundamental_fixed_points(rv):
        labels[mu] = v_region(rv, mu)
        if set(_v_matches(a, b, mu)) == {'V1', 'V1p'}:
            overlap.append(mu)
    return labels, overlap


def v_overlap_point(rv):
    """The point of V1 and V1p: (0, 3n_1, 3n_1) when n_2 = 4n_1, else None.

    Both pieces contain mu only if mu_1 - n_1 = mu_2 - n_2 = mu_3 - n_2, and
    mu_1 >= 0 together with mu_2 <= n_2 - n_1 forces n_2 = 4n_1.

    """
    a, b, L = _params(rv)
    if b != 4 * a:
        return None
    return (0, 3 * a, 3 * a)
