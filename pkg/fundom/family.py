""" (G,T)-orthogonal families of coweights and their lattice polytopes.

A family assigns a coweight lambda_{B'} to every Borel subgroup B' containing
T. Borels are indexed by Weyl elements through B' = w.B^- (lower triangular
Borel moved by w), so that the vertex of the regular point x_0 attached to
sigma is the coweight nu with

    nu_{sigma(i)} = sum_{j<i} v[sigma(i), sigma(j)]

where v is the valuation matrix. For adjacent Borels B' = sigma.B^- and
B'' = (sigma s_k).B^- the family is orthogonal if

    lambda_{B'} - lambda_{B''} = c (e_{sigma(k+1)} - e_{sigma(k)}),  c >= 0,

the root e_{sigma(k+1)} - e_{sigma(k)} being the one positive for B'.

Maximal parabolic subgroups P containing T are indexed by a nonempty proper
block A of {1, ..., d}: P_A contains sigma.B^- iff A is the set of the last |A|
values of sigma. The opposite parabolic has block the complement of A. The
face functional is

    varpi_A(x) = sum_{i in A} x_i - |A|/d sum_i x_i,

computed with exact fractions. All polytope comparisons are made at the
family's own level (coordinate sum), which removes the center.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType

import numpy as np
from scipy.spatial import ConvexHull

from .util import OrthogonalityError, as_coweight, level, level_points
from .weyl import (
    WeylElem,
    all_weyl,
    compose,
    simple_reflection,
    weyl_apply,
)

logger = logging.getLogger(__name__)


# ==============================================================================
# Face functionals
# ==============================================================================

@dataclass(frozen=True)
class FaceFunctional:
    """The functional varpi_P of a maximal parabolic P = P_A.

    Parameters
    ----------
    block : frozenset of int
        Nonempty proper subset A of {1, ..., d}.

    d : int
        Rank.

    """

    block: frozenset
    d: int

    def __post_init__(self):
        block = frozenset(int(i) for i in self.block)
        if not block or len(block) >= self.d:
            raise ValueError(
                "Invalid arg `P`, a maximal parabolic needs a nonempty proper "
                "block, got {}".format(sorted(block))
            )
        if not block <= set(range(1, self.d + 1)):
            raise ValueError(
                "Invalid arg `P`, block {} not inside 1..{}"
                .format(sorted(block), self.d)
            )
        object.__setattr__(self, 'block', block)

    @property
    def complement(self):
        return frozenset(range(1, self.d + 1)) - self.block

    @property
    def weights(self):
        """Coordinates of varpi_A as fractions."""
        shift = Fraction(len(self.block), self.d)
        return tuple(
            (1 - shift) if i in self.block else -shift
            for i in range(1, self.d + 1)
        )

    def pair(self, x):
        """The pairing <varpi_A, x> as a Fraction."""
        if len(x) != self.d:
            raise ValueError("Rank mismatch in pairing")
        return (sum(x[i - 1] for i in self.block)
                - Fraction(len(self.block) * sum(x), self.d))

    def opposite(self):
        """The face functional of the opposite parabolic."""
        return FaceFunctional(self.complement, self.d)

    def contains(self, w):
        """True if the Borel w.B^- lies in P_A."""
        tail = w.perm[self.d - len(self.block):]
        return set(tail) == self.block

    def levi_coroots(self):
        """Coroots e_i - e_j of the Levi, i < j inside one block."""
        out = []
        for part in (self.block, self.complement):
            out.extend(itertools.combinations(sorted(part), 2))
        return out

    def unipotent_roots(self):
        """Roots Phi(N_P, T) as pairs (a, b), the root being e_a - e_b."""
        return [(a, b) for a in sorted(self.block)
                for b in sorted(self.complement)]

    def __str__(self):
        return "{{{}}}|{{{}}}".format(
            ",".join(str(i) for i in sorted(self.block)),
            ",".join(str(i) for i in sorted(self.complement)),
        )


def maximal_parabolics(d):
    """Face functionals of all maximal parabolics, ordered by (|A|, A)."""
    out = []
    for size in range(1, d):
        for block in itertools.combinations(range(1, d + 1), size):
            out.append(FaceFunctional(frozenset(block), d))
    return out


def as_face(P, d):
    """Convert a block (any iterable of indices) into a FaceFunctional."""
    if isinstance(P, FaceFunctional):
        if P.d != d:
            raise ValueError("Rank mismatch between `P` and the family")
        return P
    return FaceFunctional(frozenset(P), d)


# ==============================================================================
# Orthogonal families
# ==============================================================================

@dataclass(frozen=True, eq=False)
class OrthogonalFamily:
    """A (G,T)-orthogonal family of coweights indexed by Weyl elements.

    Use `make_family` to build a validated instance.

    """

    d: int
    vertices: MappingProxyType

    def vertex(self, w):
        return self.vertices[w]

    @property
    def level(self):
        return level(next(iter(self.vertices.values())))

    def items(self):
        """(w, vertex) pairs, ordered by w."""
        return sorted(self.vertices.items())

    def distinct_vertices(self):
        return sorted(set(self.vertices.values()))

    def __eq__(self, other):
        if not isinstance(other, OrthogonalFamily):
            return NotImplemented
        return self.d == other.d and dict(self.vertices) == dict(other.vertices)

    __hash__ = None


def make_family(d, vertex_map, validate=True):
    """Build an orthogonal family from a map w -> coweight.

    Parameters
    ----------
    d : int
        Rank.

    vertex_map : mapping
        WeylElem -> coweight, defined on the whole Weyl group.

    validate : bool, optional
        If True (default), every adjacency is checked.

    Returns
    -------
    fam : OrthogonalFamily

    Raises
    ------
    ValueError
        If the map is not defined on every Weyl element, or the vertices do
        not share one level.

    OrthogonalityError
        If `validate` and an adjacency is not a nonnegative multiple of the
        separating coroot.

    """
    verts = {}
    for w, mu in vertex_map.items():
        if not isinstance(w, WeylElem) or w.d != d:
            raise ValueError("Invalid arg `vertex_map`, keys must be rank {} "
                             "Weyl elements".format(d))
        verts[w] = as_coweight(mu, d, name='vertex_map')
    if set(verts) != set(all_weyl(d)):
        raise ValueError("Invalid arg `vertex_map`, must cover the Weyl group")
    levels = set(level(mu) for mu in verts.values())
    if len(levels) != 1:
        raise ValueError(
            "Invalid arg `vertex_map`, vertices on several levels {}"
            .format(sorted(levels))
        )
    fam = OrthogonalFamily(d, MappingProxyType(verts))
    if validate:
        validate_family(fam)
    return fam


def adjacency_constant(fam, w, k):
    """The multiple c in lambda_{wB^-} - lambda_{w s_k B^-} = c.alpha^vee.

    Parameters
    ----------
    fam : OrthogonalFamily

    w : WeylElem

    k : int
        Simple reflection index, 1 <= k <= d-1.

    Returns
    -------
    c : int
        Nonnegative integer.

    Raises
    ------
    OrthogonalityError
        If the difference is not a nonnegative multiple of
        e_{w(k+1)} - e_{w(k)}.

    """
    ws = compose(w, simple_reflection(fam.d, k))
    diff = [a - b for a, b in zip(fam.vertex(w), fam.vertex(ws))]
    up, down = w(k + 1), w(k)
    c = diff[up - 1]
    rest = [x for i, x in enumerate(diff, start=1) if i not in (up, down)]
    if c < 0 or diff[down - 1] != -c or any(rest):
        raise OrthogonalityError(
            "Adjacency {} / {} has difference {}, not a nonnegative multiple "
            "of e_{} - e_{}".format(w, ws, tuple(diff), up, down)
        )
    return c


def adjacency_constants(fam):
    """All adjacency constants as a dict (w, k) -> c."""
    return {(w, k): adjacency_constant(fam, w, k)
            for w in sorted(fam.vertices) for k in range(1, fam.d)}


def validate_family(fam):
    """Check every adjacency of `fam`; raises OrthogonalityError."""
    adjacency_constants(fam)
    return fam


# ------------------------------------------------------------------------------
#     Families of the regular point and of Schubert varieties
# ------------------------------------------------------------------------------

def regular_vertex(rv, sigma):
    """The vertex H_{sigma B^-}(x_0) of the regular point.

    Parameters
    ----------
    rv : RootValuation

    sigma : WeylElem

    Returns
    -------
    nu : tuple of int
        With nu_{sigma(i)} = sum over j < i of v[sigma(i), sigma(j)].

    """
    if sigma.d != rv.d:
        raise ValueError("Rank mismatch between `rv` and `sigma`")
    nu = [0] * rv.d
    for i in range(1, rv.d + 1):
        nu[sigma(i) - 1] = sum(rv.val(sigma(i), sigma(j)) for j in range(1, i))
    return tuple(nu)


def regular_family(rv):
    """The orthogonal family (H_{B'}(x_0))_{B'} cutting out F_gamma."""
    verts = {w: regular_vertex(rv, w) for w in all_weyl(rv.d)}
    fam = make_family(rv.d, verts)
    logger.debug("regular family for %s at level %d", rv, fam.level)
    return fam


def schubert_family(mu):
    """The family w -> w.mu_+ of the Schubert variety Sch(mu).

    mu_+ is `mu` sorted increasingly, the vertex attached to B^-.

    """
    mu = as_coweight(mu)
    base = tuple(sorted(mu))
    d = len(mu)
    return make_family(d, {w: weyl_apply(w, base) for w in all_weyl(d)})


def dual_schubert_family(lam, mu):
    """The family w -> lam - w.mu_- of the translate eps^lam.Sch(-mu).

    mu_- is `mu` sorted decreasingly.

    """
    lam = as_coweight(lam, name='lam')
    mu = as_coweight(mu, len(lam))
    base = tuple(sorted(mu, reverse=True))
    d = len(mu)
    verts = {}
    for w in all_weyl(d):
        wm = weyl_apply(w, base)
        verts[w] = tuple(a - b for a, b in zip(lam, wm))
    return make_family(d, verts)


def schubert_params(rv):
    """The coweights mu and lambda of the two-Schubert-variety truncation.

    Parameters
    ----------
    rv : RootValuation
        Must satisfy n_1 <= n_2 <= ... <= n_{d-1}.

    Returns
    -------
    mu, lam : tuple of int
        mu_i = sum_{j<i} v[j,i] and lam_i = sum_{j != i} v[j,i], that is
        mu = (0, n_1, n_1+n_2, ...) and
        lam = ((d-1)n_1, n_1+(d-2)n_2, ..., sum n, sum n).

    Raises
    ------
    ValueError
        If the valuations are not sorted.

    """
    if not rv.is_sorted:
        raise ValueError(
            "Invalid arg `rv`, valuations must be nondecreasing, got {}"
            .format(rv.simple_vals)
        )
    d = rv.d
    mu = tuple(sum(rv.val(j, i) for j in range(1, i))
               for i in range(1, d + 1))
    lam = tuple(sum(rv.val(j, i) for j in range(1, d + 1) if j != i)
                for i in range(1, d + 1))
    return mu, lam


# ==============================================================================
# Faces and polytopes
# ==============================================================================

def _vertex_in(fam, face):
    for w in sorted(fam.vertices):
        if face.contains(w):
            return fam.vertex(w)
    raise AssertionError("no Borel inside {}".format(face))


def face_bounds(fam, P):
    """Range (low, high) of varpi_P over the polytope of `fam`.

    high is attained on the face D^P, low on the opposite face D^{P^-}.

    """
    face = as_face(P, fam.d)
    high = face.pair(_vertex_in(fam, face))
    low = face.pair(_vertex_in(fam, face.opposite()))
    return low, high


def face_distance(fam, P):
    """Distance d_P between the opposite faces D^P and D^{P^-}.

    Parameters
    ----------
    fam : OrthogonalFamily

    P : FaceFunctional or iterable of int
        A maximal parabolic, given by its block.

    Returns
    -------
    dist : Fraction
        <varpi_P, lambda_{B'}> - <varpi_P, lambda_{B''}> for B' in P and B''
        in the opposite parabolic. For the regular family this is the sum of
        v over the roots of the unipotent radical of P.

    Raises
    ------
    ValueError
        If `P` is not maximal.

    """
    low, high = face_bounds(fam, P)
    return high - low


def intersection_distance(fam1, fam2, P):
    """d_P of the intersection of two polytopes, from their half-spaces."""
    if fam1.level != fam2.level:
        raise ValueError("Families on different levels")
    low1, high1 = face_bounds(fam1, P)
    low2, high2 = face_bounds(fam2, P)
    return min(high1, high2) - max(low1, low2)


@dataclass(frozen=True, eq=False)
class LatticePolytopeView:
    """Half-space description of the convex envelope of a family.

    For every maximal parabolic P the constraint is
    <varpi_P, x> <= <varpi_P, lambda_{B'}> for B' in P, at the family level.

    """

    family: OrthogonalFamily

    @cached_property
    def halfspaces(self):
        return [(face, face_bounds(self.family, face)[1])
                for face in maximal_parabolics(self.family.d)]

    def contains(self, mu):
        mu = as_coweight(mu, self.family.d)
        if level(mu) != self.family.level:
            raise ValueError(
                "Invalid arg `mu`, level {} differs from the family level {}"
                .format(level(mu), self.family.level)
            )
        return all(face.pair(mu) <= bound for face, bound in self.halfspaces)

    def lattice_points(self):
        """All lattice points of the polytope, lexicographically sorted."""
        verts = self.family.distinct_vertices()
        lo = min(min(v) for v in verts)
        hi = max(max(v) for v in verts)
        bound = max(abs(lo), abs(hi))
        return [p for p in level_points(self.family.level, self.family.d, bound)
                if lo <= min(p) and max(p) <= hi and self.contains(p)]


def family_level(fam):
    return fam.level


def polytope_contains(fam, mu):
    return LatticePolytopeView(fam).contains(mu)


def hexagon_membership(rv, mu):
    """Membership of a fixed point in the hexagon Ec(x_0) for GL_3.

    Parameters
    ----------
    rv : RootValuation
        Rank 3 with n_1 <= n_2.

    mu : sequence of int
        Coweight of level 2n_1 + n_2.

    Returns
    -------
    inside : bool
        True iff 0 <= mu_i, mu_1 <= 2n_1, mu_2 <= n_1+n_2, mu_3 <= n_1+n_2.

    Raises
    ------
    ValueError
        On a rank, ordering or level mismatch.

    """
    if rv.d != 3:
        raise ValueError("Invalid arg `rv`, the hexagon is defined for GL_3")
    n1, n2 = rv.simple_vals
    if n1 > n2:
        raise ValueError("Invalid arg `rv`, requires n_1 <= n_2")
    mu = as_coweight(mu, 3)
    if level(mu) != 2 * n1 + n2:
        raise ValueError(
            "Invalid arg `mu`, level {} != 2n_1+n_2 = {}"
            .format(level(mu), 2 * n1 + n2)
        )
    return (min(mu) >= 0 and mu[0] <= 2 * n1
            and mu[1] <= n1 + n2 and mu[2] <= n1 + n2)


# ------------------------------------------------------------------------------
#     Schubert fixed points
# ------------------------------------------------------------------------------

def dominated_by(x, mu):
    """Dominance order: True iff eps^x is a fixed point of Sch(mu)."""
    x = sorted(x, reverse=True)
    mu = sorted(mu, reverse=True)
    if len(x) != len(mu) or sum(x) != sum(mu):
        return False
    return all(a <= b for a, b in zip(itertools.accumulate(x),
                                      itertools.accumulate(mu)))


def schubert_fixed_points(lam, shift=None):
    """Fixed points of eps^shift.Sch(lam), lexicographically sorted."""
    lam = as_coweight(lam, name='lam')
    d = len(lam)
    shift = (0,) * d if shift is None else as_coweight(shift, d, name='shift')
    bound = max(abs(c) for c in lam)
    pts = [p for p in level_points(sum(lam), d, bound)
           if min(lam) <= min(p) and dominated_by(p, lam)]
    return sorted(tuple(a + b for a, b in zip(p, shift)) for p in pts)


# ------------------------------------------------------------------------------
#     Planar projection
# ------------------------------------------------------------------------------

# Unit vectors at 120 degrees carrying x_2 and x_3
PLANE_U = np.array([1.0, 0.0])
PLANE_V = np.array([-0.5, np.sqrt(3.0) / 2.0])


def project_level_plane(points):
    """Map rank 3 points (x_1, x_2, x_3) to x_2 u + x_3 v in the plane."""
    pts = np.asarray(points, dtype=float).reshape(-1, 3)
    return np.outer(pts[:, 1], PLANE_U) + np.outer(pts[:, 2], PLANE_V)


def hull_vertices(fam):
    """Extreme vertices of a rank 3 family, counterclockwise in the plane."""
    if fam.d != 3:
        raise ValueError("Invalid arg `fam`, hull projection needs rank 3")
    verts = fam.distinct_vertices()
    hull = ConvexHull(project_level_plane(verts))
    return [verts[i] for i in hull.vertices]


def hull_contains(fam, mu, tol=1e-9):
    """Floating point membership in the convex hull of a rank 3 family.

    Independent of the half-space description; used as a cross-check only.

    """
    mu = as_coweight(mu, 3)
    if level(mu) != fam.level:
        return False
    hull = ConvexHull(project_level_plane(fam.distinct_vertices()))
    xy = project_level_plane([mu])[0]
    return bool(np.all(hull.equations[:, :2] @ xy + hull.equations[:, 2]
                       <= tol))
