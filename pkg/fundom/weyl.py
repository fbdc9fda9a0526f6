""" Root data of GL_d: root valuations, the symmetric Weyl group and its
action on coweights.

An element gamma of t(O) in minimal form enters every computation of this
package only through the valuations of the simple roots,
n_i = val(alpha_i(gamma)). The valuation of a general root alpha_{i,j} is the
minimum of the simple valuations on the interval [min(i,j), max(i,j)-1].

Indices are 1-based in every public function. Coweights are tuples of ints;
Weyl elements are permutations in one-line notation.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from sympy.combinatorics import Permutation, SymmetricGroup

from .util import as_coweight


MAX_RANK = 9


@dataclass(frozen=True)
class RootValuation:
    """Valuations (n_1, ..., n_{d-1}) of the simple roots at gamma.

    Parameters
    ----------
    simple_vals : tuple of int
        Positive valuations of the simple roots; the rank is
        ``len(simple_vals) + 1``.

    """

    simple_vals: tuple

    def __post_init__(self):
        vals = tuple(self.simple_vals)
        if len(vals) < 1:
            raise ValueError("Invalid arg `simple_vals`, rank must be >= 2")
        if len(vals) + 1 > MAX_RANK:
            raise ValueError(
                "Invalid arg `simple_vals`, rank must be <= {}".format(MAX_RANK))
        for n in vals:
            if isinstance(n, bool) or int(n) != n or n < 1:
                raise ValueError(
                    "Invalid arg `simple_vals`, valuations must be positive "
                    "integers, got {!r}".format(vals)
                )
        object.__setattr__(self, 'simple_vals', tuple(int(n) for n in vals))

    @property
    def d(self):
        return len(self.simple_vals) + 1

    @property
    def is_sorted(self):
        return all(a <= b for a, b in zip(self.simple_vals,
                                           self.simple_vals[1:]))

    @cached_property
    def matrix(self):
        return valuation_matrix(self)

    def val(self, i, j):
        """Valuation of the root alpha_{i,j}, 1-based, i != j."""
        if i == j:
            raise ValueError("Invalid root, `i` and `j` must differ")
        return int(self.matrix[i - 1, j - 1])

    def swapped(self):
        """The valuation read through the diagram automorphism."""
        return RootValuation(self.simple_vals[::-1])

    def __str__(self):
        return "n=({})".format(",".join(str(n) for n in self.simple_vals))


def valuation_matrix(rv):
    """Full valuation matrix of a root valuation.

    Parameters
    ----------
    rv : RootValuation

    Returns
    -------
    v : ndarray
        Read-only int64 array of shape (d,d) with ``v[i-1,j-1]`` the valuation
        of alpha_{i,j}. The diagonal carries no root and is set to 0.

    """
    d = rv.d
    n = rv.simple_vals
    v = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        for j in range(i + 1, d):
            v[i, j] = v[j, i] = min(n[i:j])
    v.setflags(write=False)
    return v


def positive_roots(d):
    """Pairs (i, j), i < j, of the roots e_i - e_j positive for B."""
    return [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]


# ==============================================================================
# Weyl group
# ==============================================================================

@dataclass(frozen=True, order=True)
class WeylElem:
    """A permutation w of {1, ..., d} in one-line notation (w(1), ..., w(d)).

    The group law is that of `sympy.combinatorics.Permutation`, reached
    through `permutation`; sympy works 0-based and composes left to right.

    """

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(i) for i in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(
                "Invalid arg `perm`, not a permutation: {!r}".format(self.perm))
        object.__setattr__(self, 'perm', perm)

    @classmethod
    def from_permutation(cls, p):
        """The Weyl element of a sympy permutation of {0, ..., d-1}."""
        return cls(tuple(i + 1 for i in p.array_form))

    @cached_property
    def permutation(self):
        return Permutation([i - 1 for i in self.perm])

    @property
    def d(self):
        return len(self.perm)

    @property
    def length(self):
        """Number of inversions."""
        return self.permutation.inversions()

    def __call__(self, i):
        return self.perm[i - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __str__(self):
        return one_line(self)


def identity(d):
    return WeylElem.from_permutation(Permutation(list(range(d))))


def longest_element(d):
    return WeylElem.from_permutation(Permutation(list(range(d - 1, -1, -1))))


def simple_reflection(d, k):
    """The transposition s_k = (k k+1), 1 <= k <= d-1."""
    if not 1 <= k <= d - 1:
        raise ValueError(
            "Invalid arg `k`, simple reflection index must be in [1, {}]"
            .format(d - 1)
        )
    return WeylElem.from_permutation(Permutation(k - 1, k, size=d))


def compose(w1, w2):
    """The product w1 w2, acting as (w1 w2)(i) = w1(w2(i))."""
    if w1.d != w2.d:
        raise ValueError("Rank mismatch: {} and {}".format(w1.d, w2.d))
    # sympy's p*q applies p first
    return WeylElem.from_permutation(w2.permutation * w1.permutation)


def inverse(w):
    return WeylElem.from_permutation(~w.permutation)


@lru_cache(maxsize=None)
def all_weyl(d):
    """All elements of the Weyl group of GL_d, lexicographic in one-line form."""
    return tuple(sorted(WeylElem.from_permutation(p)
                        for p in SymmetricGroup(d).generate()))


def one_line(w):
    """One-line notation string, e.g. ``'132'``; comma separated above rank 9."""
    if w.d <= 9:
        return "".join(str(i) for i in w.perm)
    return ",".join(str(i) for i in w.perm)


def from_one_line(text):
    """Inverse of `one_line`."""
    text = text.strip()
    if "," in text:
        return WeylElem(tuple(int(c) for c in text.split(",")))
    return WeylElem(tuple(int(c) for c in text))


def weyl_apply(w, mu):
    """Act on a coweight by permuting coordinates, (w.mu)_{w(i)} = mu_i.

    Raises
    ------
    ValueError
        If the ranks of `w` and `mu` differ.

    """
    mu = as_coweight(mu)
    if len(mu) != w.d:
        raise ValueError(
            "Rank mismatch: Weyl element of rank {} applied to a coweight "
            "of length {}".format(w.d, len(mu))
        )
    back = (~w.permutation).array_form
    return tuple(mu[back[i]] for i in range(w.d))


def root_valuation(rv, i, j):
    """val(alpha_{i,j}(gamma)), the entry v[i,j] of the valuation matrix."""
    return rv.val(i, j)
