""" Utilities shared by the fundom modules.

Exceptions for violated invariants, lattice-window enumeration and the small
coweight helpers used everywhere else in the package.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import itertools
import numpy as np


# ==============================================================================
# Exceptions
# ==============================================================================

class OrthogonalityError(RuntimeError):
    """An adjacency of a family is not a nonnegative multiple of its coroot."""


class ClassificationError(RuntimeError):
    """A point falls in zero or several Arthur-Kottwitz regions."""


class PartitionError(RuntimeError):
    """Paving predicates leave a gap or cover a point twice."""


# ==============================================================================
# Coweights
# ==============================================================================

def as_coweight(mu, d=None, name='mu'):
    """Validate and convert a coweight into a tuple of python ints.

    Parameters
    ----------
    mu : sequence of int
        Integer coordinates.

    d : int, optional
        Expected length. Not checked if None.

    name : str, optional
        Argument name used in the error message.

    Returns
    -------
    mu : tuple of int

    Raises
    ------
    ValueError
        If the length does not match `d` or a coordinate is not integral.

    """
    coords = tuple(mu)
    if d is not None and len(coords) != d:
        raise ValueError(
            "Invalid arg `{}`, expected {} coordinates, got {}"
            .format(name, d, len(coords))
        )
    out = []
    for c in coords:
        if isinstance(c, (bool, np.bool_)) or int(c) != c:
            raise ValueError(
                "Invalid arg `{}`, coordinates must be integers".format(name))
        out.append(int(c))
    return tuple(out)


def level(mu):
    """Coordinate sum of a coweight."""
    return sum(mu)


def lex_sorted(points):
    """Points as tuples in lexicographic order, duplicates removed."""
    return sorted(set(tuple(int(c) for c in p) for p in points))


# ==============================================================================
# Lattice windows
# ==============================================================================

def level_points(lvl, d, bound):
    """All integer points of a given level with coordinates in [-bound, bound].

    The points are returned lexicographically sorted.

    Parameters
    ----------
    lvl : int
        Coordinate sum.

    d : int
        Number of coordinates, at least 1.

    bound : int
        Bound for the absolute value of every coordinate.

    Returns
    -------
    points : list of tuple

    """
    if d < 1:
        raise ValueError("Invalid arg `d`, must be positive")
    if bound < 0:
        return []
    rng = range(-bound, bound + 1)
    out = []
    for head in itertools.product(rng, repeat=d - 1):
        last = lvl - sum(head)
        if -bound <= last <= bound:
            out.append(head + (last,))
    return out


def level_points_array(lvl, bound):
    """Level points of rank 3 as an (N,3) int64 array in lexicographic order.

    Vectorised counterpart of `level_points` used by the window classifiers.

    """
    if bound < 0:
        return np.empty((0, 3), dtype=np.int64)
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    x1, x2 = np.meshgrid(rng, rng, indexing='ij')
    x1 = x1.ravel()
    x2 = x2.ravel()
    x3 = lvl - x1 - x2
    keep = np.abs(x3) <= bound
    return np.column_stack((x1[keep], x2[keep], x3[keep]))


def nonnegative_points(lvl, d):
    """All points with nonnegative coordinates summing to `lvl`, sorted."""
    if lvl < 0:
        return []
    out = []
    for head in itertools.product(range(lvl + 1), repeat=d - 1):
        rest = lvl - sum(head)
        if rest >= 0:
            out.append(head + (rest,))
    return out
