""" Exact polynomials and the bivariate generating series of the Poincare
polynomials.

Poincare polynomials are `sympy.Poly` objects with integer coefficients, in
q or, after the substitution q = t^2, in t. The generating series

    sum_{n_1, n_2 >= 1} P_{(n_1,n_2)}(t) T_1^{n_1} T_2^{n_2}

is handled as a `BiSeries` truncated at total T-degree N. Rational functions
are kept as sums of simple fractions c t^a T_1^b T_2^c / prod (1 - m_k) with
monomials m_k of positive T-degree, and are expanded with geometric series in
the sparse ring Z[t, T_1, T_2].

Two expressions are provided. `corollary_expression` is the displayed
2 {B} - [D], whose expansion only involves n_1 <= n_2 and equals the folded
series (P_{a,b} + P_{b,a} above the diagonal). `symmetric_expression` is
B(T_1,T_2) + B(T_2,T_1) - D, whose expansion equals the full symmetric series.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import logging
from dataclasses import dataclass
from types import MappingProxyType

import sympy
from sympy import ZZ, Poly
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)

Q = sympy.Symbol('q')
T = sympy.Symbol('t')

# Sparse ring of the expansions: exponent tuples are (t, T1, T2)
SERIES_RING, _t, _T1, _T2 = ring("t,T1,T2", ZZ)

DEFAULT_ORDER = 12


# ==============================================================================
# Polynomials
# ==============================================================================

def _from_exponents(coeffs, gen):
    rep = {(int(k),): int(c) for k, c in coeffs.items() if c}
    if not rep:
        return Poly(0, gen, domain=ZZ)
    if min(k for (k,) in rep) < 0:
        raise ValueError("Negative exponent in {}".format(dict(coeffs)))
    return Poly.from_dict(rep, gen, domain=ZZ)


def q_poly(coeffs):
    """Integer polynomial in q from a dict exponent -> coefficient or a list.

    A list is read as ascending coefficients.

    """
    if not isinstance(coeffs, dict):
        coeffs = dict(enumerate(coeffs))
    return _from_exponents(coeffs, Q)


def t_poly(coeffs):
    """Integer polynomial in t, arguments as for `q_poly`."""
    if not isinstance(coeffs, dict):
        coeffs = dict(enumerate(coeffs))
    return _from_exponents(coeffs, T)


def coefficients(p):
    """Ascending list of int coefficients; [] for the zero polynomial."""
    if p.is_zero:
        return []
    return [int(c) for c in reversed(p.all_coeffs())]


def to_t(p):
    """Substitute q = t^2."""
    if p.gens != (Q,):
        raise ValueError("Invalid arg `p`, expected a polynomial in q")
    return _from_exponents({2 * k: c for k, c in enumerate(coefficients(p))}, T)


def evaluate_at_one(p):
    """Sum of the coefficients."""
    return sum(coefficients(p))


def poly_text(p):
    """Human readable form, e.g. ``'1 + t^2 + 4t^4 + t^6'``."""
    var = str(p.gens[0])
    parts = []
    for k, c in enumerate(coefficients(p)):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = (str(mag) if mag != 1 else "") + var
            if k > 1:
                body += "^{}".format(k)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def poly_doc(p):
    """JSON form of a q-polynomial: q and t coefficient lists and text."""
    pt = to_t(p)
    return dict(q=coefficients(p), t=coefficients(pt), text=poly_text(pt))


# ==============================================================================
# Rational functions
# ==============================================================================

@dataclass(frozen=True)
class Monomial:
    """coeff * t^t * T1^T1 * T2^T2."""

    coeff: int
    t: int = 0
    T1: int = 0
    T2: int = 0

    def __post_init__(self):
        if min(self.t, self.T1, self.T2) < 0:
            raise ValueError("Invalid monomial, negative exponent")

    @property
    def T_degree(self):
        return self.T1 + self.T2

    def swapped(self):
        return Monomial(self.coeff, self.t, self.T2, self.T1)

    def as_ring(self):
        return SERIES_RING.from_dict({(self.t, self.T1, self.T2): self.coeff})


@dataclass(frozen=True)
class Term:
    """sign * numerator / prod over the denominator of (1 - factor)."""

    sign: int
    numerator: Monomial
    denominator: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("Invalid arg `sign`, must be 1 or -1")
        object.__setattr__(self, 'denominator', tuple(self.denominator))

    def swapped(self):
        return Term(self.sign, self.numerator.swapped(),
                    tuple(m.swapped() for m in self.denominator))

    def negated(self):
        return Term(-self.sign, self.numerator, self.denominator)


@dataclass(frozen=True)
class RationalFn:
    """A signed sum of simple fractions."""

    terms: tuple

    def __add__(self, other):
        return RationalFn(tuple(self.terms) + tuple(other.terms))

    def __neg__(self):
        return RationalFn(tuple(term.negated() for term in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k):
        """k f for a positive integer k, as k copies of every term."""
        if k < 1:
            raise ValueError("Invalid arg `k`, must be positive")
        return RationalFn(tuple(self.terms) * k)

    def swapped(self):
        """Exchange T1 and T2."""
        return RationalFn(tuple(term.swapped() for term in self.terms))


def _m(coeff, t=0, T1=0, T2=0):
    return Monomial(coeff, t, T1, T2)


def _term(numerator, *factors, sign=1):
    return Term(sign, numerator, tuple(factors))


def generating_function():
    """B: the sum over n_1 <= n_2 of P_n T1^{n_1} T2^{n_2}.

    With x = T1 T2 and y = T2 the coefficient of x^a y^k is P_{(a, a+k)}.

    """
    y, ty = _m(1, T2=1), _m(1, t=2, T2=1)
    x, t4x, t6x = _m(1, T1=1, T2=1), _m(1, t=4, T1=1, T2=1), _m(1, t=6, T1=1, T2=1)
    return RationalFn((
        _term(_m(1, t=2, T1=1, T2=1), y, x, t4x, t4x),
        _term(_m(1, T1=1, T2=1), y, x, t4x, t4x),
        _term(_m(3, t=4, T1=1, T2=2), y, ty, t4x, t4x),
        _term(_m(1, t=8, T1=2, T2=3), y, ty, t4x, t4x, sign=-1),
        _term(_m(4, t=4, T1=1, T2=1), ty, t4x, t4x, t6x),
        _term(_m(1, t=6, T1=1, T2=1), ty, t6x),
    ))


def diagonal_function():
    """D: the sum of P_{(a,a)} (T1 T2)^a."""
    x, t4x, t6x = _m(1, T1=1, T2=1), _m(1, t=4, T1=1, T2=1), _m(1, t=6, T1=1, T2=1)
    return RationalFn((
        _term(_m(1, t=2, T1=1, T2=1), x, t4x, t4x),
        _term(_m(1, T1=1, T2=1), x, t4x, t4x),
        _term(_m(4, t=4, T1=1, T2=1), t4x, t4x, t6x),
        _term(_m(1, t=6, T1=1, T2=1), t6x),
    ))


def corollary_expression():
    """The displayed rational function 2 B - D (folded series)."""
    return generating_function().scaled(2) - diagonal_function()


def symmetric_expression():
    """B(T1,T2) + B(T2,T1) - D, the full symmetric generating series."""
    b = generating_function()
    return b + b.swapped() - diagonal_function()


# ==============================================================================
# Series
# ==============================================================================

@dataclass(frozen=True, eq=False)
class BiSeries:
    """Series in T1, T2 truncated at total degree `order`.

    Coefficients are t-polynomials keyed by (n_1, n_2); absent keys are zero.

    """

    order: int
    coeffs: MappingProxyType

    def __post_init__(self):
        clean = {}
        for (n1, n2), p in sorted(self.coeffs.items()):
            if n1 < 0 or n2 < 0 or n1 + n2 > self.order:
                raise ValueError(
                    "Index ({}, {}) outside the truncation {}"
                    .format(n1, n2, self.order)
                )
            if not p.is_zero:
                clean[(n1, n2)] = p
        object.__setattr__(self, 'coeffs', MappingProxyType(clean))

    def coefficient(self, n1, n2):
        return self.coeffs.get((n1, n2), t_poly({}))

    def indices(self):
        return list(self.coeffs)

    def __add__(self, other):
        if self.order != other.order:
            raise ValueError(
                "Truncation mismatch: {} and {}".format(self.order, other.order))
        coeffs = dict(self.coeffs)
        for key, p in other.coeffs.items():
            coeffs[key] = coeffs[key] + p if key in coeffs else p
        return BiSeries(self.order, coeffs)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return series_equal(self, other).equal

    __hash__ = None


def _geometric(factor, order):
    """1 / (1 - factor) truncated at T-degree `order`, as a ring element."""
    terms = {}
    for j in range(order // factor.T_degree + 1):
        terms[(j * factor.t, j * factor.T1, j * factor.T2)] = factor.coeff ** j
    return SERIES_RING.from_dict(terms)


def _truncate(p, order):
    return SERIES_RING.from_dict(
        {m: c for m, c in p.items() if m[1] + m[2] <= order})


def _from_ring(p, order):
    grouped = {}
    for (et, e1, e2), c in p.items():
        grouped.setdefault((e1, e2), {})[et] = int(c)
    return BiSeries(order, {k: t_poly(v) for k, v in grouped.items()})


def expand_term(term, order):
    """Expansion of one simple fraction as a ring element."""
    for factor in term.denominator:
        if factor.T_degree < 1:
            raise ValueError(
                "Invalid denominator factor {}, needs positive T-degree"
                .format(factor)
            )
    if term.numerator.T_degree > order:
        return SERIES_RING.zero
    p = term.numerator.as_ring()
    for factor in term.denominator:
        p = _truncate(p * _geometric(factor, order), order)
    return p if term.sign > 0 else -p


def expand_rational(f, order=DEFAULT_ORDER):
    """Expand a RationalFn up to total T-degree `order`.

    Parameters
    ----------
    f : RationalFn

    order : int, optional
        Truncation order N, default 12.

    Returns
    -------
    series : BiSeries

    Raises
    ------
    ValueError
        If a denominator factor has zero T-degree.

    """
    if order < 0:
        raise ValueError("Invalid arg `order`, must be nonnegative")
    total = SERIES_RING.zero
    n = len(f.terms)
    for i, term in enumerate(f.terms, start=1):
        logger.info("expanding term %d/%d", i, n)
        total += expand_term(term, order)
    return _from_ring(total, order)


def direct_series(order=DEFAULT_ORDER):
    """The series with c[n_1][n_2] = closed_form of the sorted pair, in t."""
    from .paving import closed_form

    if order < 2:
        raise ValueError("Invalid arg `order`, must be at least 2")
    coeffs = {}
    for n1 in range(1, order):
        for n2 in range(1, order - n1 + 1):
            coeffs[(n1, n2)] = to_t(closed_form((n1, n2)))
    return BiSeries(order, coeffs)


def fold(series):
    """c[a][b] + c[b][a] above the diagonal, c[a][a] on it, zero below."""
    coeffs = {}
    for (n1, n2), p in series.coeffs.items():
        if n1 > n2:
            key = (n2, n1)
        else:
            key = (n1, n2)
        coeffs[key] = coeffs[key] + p if key in coeffs else p
    return BiSeries(series.order, coeffs)


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of `series_equal`; on mismatch the smallest differing index."""

    equal: bool
    index: tuple = None
    left: Poly = None
    right: Poly = None


def series_equal(a, b, order=None):
    """Coefficient-wise comparison of two series.

    Parameters
    ----------
    a, b : BiSeries

    order : int, optional
        Compare up to this total degree. By default the orders must match.

    Returns
    -------
    result : SeriesComparison

    """
    if order is None:
        if a.order != b.order:
            raise ValueError(
                "Truncation mismatch: {} and {}".format(a.order, b.order))
        order = a.order
    elif order > min(a.order, b.order):
        raise ValueError("Invalid arg `order`, beyond a truncation")
    keys = sorted(k for k in set(a.coeffs) | set(b.coeffs) if sum(k) <= order)
    for key in keys:
        left, right = a.coefficient(*key), b.coefficient(*key)
        if left != right:
            return SeriesComparison(False, key, left, right)
    return SeriesComparison(True)


def shape_violations(series):
    """Indices whose coefficient does not end in t^{4 min + 2 max} with 1."""
    bad = []
    for (n1, n2), p in series.coeffs.items():
        if n1 < 1 or n2 < 1:
            continue
        top = 4 * min(n1, n2) + 2 * max(n1, n2)
        if p.degree() != top or p.LC() != 1:
            bad.append((n1, n2))
    return bad
