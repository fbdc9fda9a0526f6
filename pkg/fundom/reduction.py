""" Arthur-Kottwitz partition of the plane a_T^G for GL_3, at the level of
fixed points.

The regular family D_0 is perturbed by a small dominant xi before the
partition is taken: the vertex attached to B' = w'.B is H_{B'}(x_0) + w'.xi.
Since B' = sigma.B^- = (sigma w_0).B, the perturbation of the vertex of sigma
puts 2j - d - 1 on the coordinate sigma(j). Everything is computed in scaled
integers: a point mu of level l is sent to

    S (d mu - l (1, ..., 1))

and the vertex of sigma to S (d H_sigma - l_0 (1, ..., 1)) + xi_sigma, where l_0
is the level of D_0. With S larger than every xi contribution, no lattice
point lies on a wall and each point belongs to exactly one of the 13 regions:

Full
    the point lies in the perturbed hexagon D_0;
Maximal(A)
    the point lies beyond the face D_0^{P_A} (varpi_A larger than on the
    face) and its Levi component lies within the projection of that face;
Borel(sigma)
    the point lies in the cone at the vertex of sigma, i.e.
    alpha(x) >= alpha(lambda_sigma) for every root alpha positive for
    sigma.B^-.

The perturbation pushes every face of D_0 outward, so fixed points on the
boundary of the hexagon classify as Full.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .family import FaceFunctional, maximal_parabolics, regular_vertex
from .util import ClassificationError, as_coweight, level, level_points_array
from .weyl import RootValuation, WeylElem, all_weyl, one_line

logger = logging.getLogger(__name__)

# Recorded in output metadata: side of D_0's boundary receiving fixed points
BOUNDARY_CONVENTION = "outward"


# ==============================================================================
# Labels
# ==============================================================================

@dataclass(frozen=True)
class ParabolicLabel:
    """A parabolic subgroup containing T, as used to index the regions R_P.

    Parameters
    ----------
    kind : {'full', 'maximal', 'borel'}

    block : frozenset of int, optional
        The block A of a maximal parabolic P_A.

    perm : WeylElem, optional
        sigma for the Borel sigma.B^-.

    """

    kind: str
    block: frozenset = field(default_factory=frozenset)
    perm: WeylElem = None

    def __post_init__(self):
        if self.kind not in ('full', 'maximal', 'borel'):
            raise ValueError("Invalid label kind `{}`".format(self.kind))
        object.__setattr__(self, 'block', frozenset(self.block))
        if self.kind == 'maximal' and not 1 <= len(self.block) <= 2:
            raise ValueError("Invalid arg `block` for a maximal parabolic")
        if self.kind == 'borel' and not isinstance(self.perm, WeylElem):
            raise ValueError("Invalid arg `perm` for a Borel label")

    @property
    def face(self):
        """The face functional of a maximal label."""
        if self.kind != 'maximal':
            raise ValueError("Label {} is not maximal".format(self))
        return FaceFunctional(self.block, 3)

    def __str__(self):
        if self.kind == 'full':
            return "Full"
        if self.kind == 'maximal':
            return "Maximal({})".format(self.face)
        return "Borel({})".format(one_line(self.perm))


FULL = ParabolicLabel('full')


def all_labels():
    """The 13 labels of GL_3: Full, the six maximal, the six Borel."""
    labels = [FULL]
    labels.extend(ParabolicLabel('maximal', face.block)
                  for face in maximal_parabolics(3))
    labels.extend(ParabolicLabel('borel', perm=w) for w in all_weyl(3))
    return labels


LABELS = all_labels()
LABEL_INDEX = {label: i for i, label in enumerate(LABELS)}


def levi_level(label, mu):
    """The component nu in Lambda_M of a fixed point of the stratum S_P.

    Full gives the level, Maximal(A) the pair (sum over A, sum over the
    complement), Borel the coweight itself.

    """
    mu = as_coweight(mu, 3)
    if label.kind == 'full':
        return (level(mu),)
    if label.kind == 'maximal':
        inside = sum(mu[i - 1] for i in label.block)
        return (inside, level(mu) - inside)
    return mu


# ==============================================================================
# Tie break
# ==============================================================================

def xi_offset(sigma):
    """Perturbation w'.xi attached to sigma.B^-, (xi_sigma)_{sigma(j)} = 2j-d-1."""
    d = sigma.d
    out = [0] * d
    for j in range(1, d + 1):
        out[sigma(j) - 1] = 2 * j - d - 1
    return tuple(out)


# Scaled values at or above this bound are compared in Python integers
INT64_LIMIT = 2 ** 62


def point_array(points):
    """(N,3) array of integer points: int64 when they fit, else Python ints."""
    if isinstance(points, np.ndarray) and points.dtype.kind in 'iu':
        return points.reshape(-1, 3).astype(np.int64)
    pts = np.asarray(points, dtype=object).reshape(-1, 3)
    if all(abs(int(c)) < INT64_LIMIT for c in pts.flat):
        return pts.astype(np.int64)
    return _exact(pts)


def _exact(pts):
    return np.array([[int(c) for c in row] for row in pts],
                    dtype=object).reshape(-1, 3)


def _magnitude(pts):
    if pts.dtype == object:
        return max((abs(int(c)) for c in pts.flat), default=0)
    return int(np.abs(pts).max(initial=0))


@dataclass(frozen=True, eq=False)
class TieBreak:
    """Scaled-integer realisation of the xi-perturbed family D_0.

    Parameters
    ----------
    rv : RootValuation
        Rank 3.

    scale : int
        Global scale S; must exceed every xi contribution, i.e. S > 2(d-1).

    """

    rv: RootValuation
    scale: int

    def __post_init__(self):
        if self.rv.d != 3:
            raise ValueError("Invalid arg `rv`, the partition is for GL_3")
        if int(self.scale) != self.scale or self.scale <= 2 * (self.rv.d - 1):
            raise ValueError(
                "Invalid arg `scale`, must be an integer > {}"
                .format(2 * (self.rv.d - 1))
            )

    @classmethod
    def default(cls, rv, points=()):
        """Scale S = 2 d (max coordinate magnitude + 1) over points and D_0."""
        magnitude = max(
            _magnitude(point_array(points)),
            max(abs(c) for w in all_weyl(3) for c in regular_vertex(rv, w)),
        )
        return cls(rv, 2 * 3 * (magnitude + 1))

    @property
    def base_level(self):
        return sum(sum(self.rv.val(i, j) for j in range(i + 1, 4))
                   for i in range(1, 4))

    @cached_property
    def vertices(self):
        """Scaled perturbed vertices, dict sigma -> tuple of int."""
        lvl = self.base_level
        return {
            w: tuple(self.scale * (3 * h - lvl) + e
                     for h, e in zip(regular_vertex(self.rv, w), xi_offset(w)))
            for w in all_weyl(3)
        }

    def scaled(self, points):
        """Points mapped to S (3 mu - l (1, 1, 1)).

        The result is int64 while every value the partition compares stays
        below `INT64_LIMIT`, and holds Python ints otherwise.

        """
        pts = point_array(points)
        bound = max(_magnitude(pts), self.base_level) + 1
        if pts.dtype != object and 12 * self.scale * bound >= INT64_LIMIT:
            pts = _exact(pts)
        return self.scale * (3 * pts - pts.sum(axis=1, keepdims=True))

    def _inside(self, face):
        for w in all_weyl(3):
            if face.contains(w):
                yield w

    def face_bound(self, face):
        w = next(self._inside(face))
        return int(sum(self.vertices[w][i - 1] for i in face.block))

    def region_mask(self, label, x):
        """Boolean mask of the rows of scaled points `x` lying in R_label."""
        if label.kind == 'full':
            mask = np.ones(len(x), dtype=bool)
            for face in maximal_parabolics(3):
                cols = [i - 1 for i in sorted(face.block)]
                mask &= x[:, cols].sum(axis=1) < self.face_bound(face)
            return mask

        if label.kind == 'maximal':
            face = label.face
            cols = [i - 1 for i in sorted(face.block)]
            mask = x[:, cols].sum(axis=1) > self.face_bound(face)
            pair = face.block if len(face.block) == 2 else face.complement
            i, j = sorted(pair)
            ends = sorted(self.vertices[w][i - 1] - self.vertices[w][j - 1]
                          for w in self._inside(face))
            levi = x[:, i - 1] - x[:, j - 1]
            return mask & (ends[0] < levi) & (levi < ends[-1])

        sigma = label.perm
        lam = self.vertices[sigma]
        mask = np.ones(len(x), dtype=bool)
        for a in range(2, 4):
            for b in range(1, a):
                i, j = sigma(a) - 1, sigma(b) - 1
                mask &= x[:, i] - x[:, j] > lam[i] - lam[j]
        return mask


# ==============================================================================
# Classification
# ==============================================================================

def classify_points(rv, points, tie=None):
    """Classify rank 3 fixed points into the regions R_P.

    Parameters
    ----------
    rv : RootValuation
        Rank 3 valuation defining D_0.

    points : array_like
        Integer array of shape (N,3); any levels.

    tie : TieBreak, optional
        Scaled perturbation. By default `TieBreak.default(rv, points)`.

    Returns
    -------
    index : ndarray
        Index into `LABELS` for every row.

    Raises
    ------
    ClassificationError
        If a row lies in zero or several regions.

    """
    pts = point_array(points)
    if tie is None:
        tie = TieBreak.default(rv, pts)
    elif tie.rv != rv:
        raise ValueError("Invalid arg `tie`, built for another valuation")
    x = tie.scaled(pts)
    matches = np.column_stack([tie.region_mask(label, x) for label in LABELS])
    counts = matches.sum(axis=1)
    bad = np.flatnonzero(counts != 1)
    if bad.size:
        row = int(bad[0])
        raise ClassificationError(
            "Point {} lies in {} regions (scale {})"
            .format(tuple(int(c) for c in pts[row]), int(counts[row]),
                    tie.scale)
        )
    return matches.argmax(axis=1)


def ak_classify(rv, mu, tie=None):
    """The unique label P with mu in R_P.

    Examples
    --------
    >>> ak_classify(RootValuation((1, 1)), (1, 1, 1))
    ParabolicLabel(kind='full', block=frozenset(), perm=None)

    """
    mu = as_coweight(mu, 3)
    return LABELS[int(classify_points(rv, [mu], tie)[0])]


# ------------------------------------------------------------------------------
#     Strata
# ------------------------------------------------------------------------------

@dataclass(frozen=True)
class Window:
    """Lattice points of one level with coordinates bounded in absolute value."""

    level: int
    bound: int

    def points(self):
        return level_points_array(self.level, self.bound)


def window_points(window):
    """Lattice points of `window`, lexicographic."""
    return window.points()


def default_window(rv, offset=0):
    """The window at level 2n_1+n_2+offset with bound 3(2n_1+n_2)."""
    n1, n2 = rv.simple_vals
    base = 2 * n1 + n2
    return Window(base + offset, 3 * base)


@dataclass(frozen=True)
class Stratum:
    """Fixed points of the stratum S_P inside a window.

    `by_levi_level` maps nu in Lambda_M to the points of S_P^nu.

    """

    label: ParabolicLabel
    points: tuple
    by_levi_level: dict


def stratum_fixed_points(rv, label, window, tie=None):
    """Fixed points of S_P inside `window`, split by nu in Lambda_M.

    Parameters
    ----------
    rv : RootValuation

    label : ParabolicLabel

    window : Window

    tie : TieBreak, optional

    Returns
    -------
    stratum : Stratum
        Points lexicographically sorted; the split by nu is sorted by nu.

    """
    pts = window.points()
    if len(pts) == 0:
        return Stratum(label, (), {})
    index = classify_points(rv, pts, tie)
    chosen = [tuple(int(c) for c in p)
              for p in pts[index == LABEL_INDEX[label]]]
    chosen.sort()
    split = {}
    for p in chosen:
        split.setdefault(levi_level(label, p), []).append(p)
    split = {nu: tuple(split[nu]) for nu in sorted(split)}
    logger.debug("%s: %d points in %s", label, len(chosen), window)
    return Stratum(label, tuple(chosen), split)


def strata_table(rv, window, tie=None):
    """Classification table of a window.

    Rows are dicts with keys point, label, nu and varpi (the value of the
    face functional for maximal labels, None otherwise), ordered by label,
    then varpi, then point.

    """
    pts = window.points()
    if len(pts) == 0:
        return []
    index = classify_points(rv, pts, tie)
    rows = []
    for p, k in zip(pts, index):
        label = LABELS[int(k)]
        p = tuple(int(c) for c in p)
        varpi = label.face.pair(p) if label.kind == 'maximal' else None
        rows.append(dict(point=p, label=label, nu=levi_level(label, p),
                         varpi=varpi))
    rows.sort(key=lambda r: (LABEL_INDEX[r['label']],
                             r['varpi'] if r['varpi'] is not None else 0,
                             r['point']))
    return rows
