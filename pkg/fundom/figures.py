""" Static SVG figures of the level plane for GL_3.

Points (x_1, x_2, x_3) of one level are drawn at x_2 u + x_3 v with u, v unit
vectors at 120 degrees (see `fundom.family.project_level_plane`). Available
figures:

partition
    the 13 regions R_P of the Arthur-Kottwitz partition around D_0;
hexagon
    F_gamma as the intersection of the two Schubert triangles, with the six
    vertex labels in terms of n_1 and n_2;
nonstandard
    the pieces V1, V1p, V2, V3 of the nonstandard paving;
triangle
    the seven regions of the triangle Sch(2n_1+n_2, 0, 0);
complement
    the regions T1, T2, T3, T1p of the complement of F_gamma.

The output is byte-stable for fixed inputs: text is kept as SVG text, the
hash salt is fixed and no date is written.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import logging

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .family import (
    hull_vertices,
    maximal_parabolics,
    project_level_plane,
    regular_family,
)
from .paving import (
    COMPLEMENT_LABELS,
    TRIANGLE_LABELS,
    V_LABELS,
    complement_region,
    sorted_valuation,
    triangle_points,
    triangle_region,
    v_partition,
)
from .reduction import LABELS, classify_points, default_window
from .weyl import all_weyl

logger = logging.getLogger(__name__)

FIGURES = ("partition", "hexagon", "nonstandard", "triangle", "complement")

SVG_RC = {
    "svg.hashsalt": "fundom",
    "svg.fonttype": "none",
    "font.size": 8,
}


# ==============================================================================
# Drawing helpers
# ==============================================================================

def _outline(ax, points, style="k-", closed=True, **kwargs):
    xy = project_level_plane(points)
    if closed:
        xy = np.vstack((xy, xy[:1]))
    ax.plot(xy[:, 0], xy[:, 1], style, **kwargs)


def _scatter_groups(ax, points, labels, order):
    """One marker series per label, in the order of `order`."""
    cmap = plt.get_cmap("tab20")
    for k, name in enumerate(order):
        group = [p for p, lab in zip(points, labels) if lab == name]
        if not group:
            continue
        xy = project_level_plane(group)
        ax.plot(xy[:, 0], xy[:, 1], "o", color=cmap(k % 20), markersize=4,
                label=name)


def _region_boundaries(ax, fam, length):
    """Walls of the partition: from every vertex of D_0, one ray along
    varpi_A for each face D_0^{P_A} through it.

    """
    for face in maximal_parabolics(3):
        direction = np.array([3 if i in face.block else 0 for i in (1, 2, 3)])
        direction -= len(face.block)
        for w in all_weyl(3):
            if face.contains(w):
                start = np.array(fam.vertex(w))
                _outline(ax, [start, start + length * direction], "k-",
                         closed=False, linewidth=0.5)


def _finish(ax, title):
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_title(title)
    ax.legend(loc="upper left", bbox_to_anchor=(1.0, 1.0), frameon=False)


def symbolic_vertex(sigma):
    """The regular vertex of sigma as text in n1 <= n2, e.g. '(2n1, n2, 0)'."""
    # for sorted valuations v[1,2] = v[1,3] = n1 and v[2,3] = n2
    def val(i, j):
        return (1, 0) if 1 in (i, j) else (0, 1)

    coords = [None] * 3
    for i in range(1, 4):
        c1 = c2 = 0
        for j in range(1, i):
            a, b = val(sigma(i), sigma(j))
            c1 += a
            c2 += b
        parts = []
        for count, name in ((c1, "n1"), (c2, "n2")):
            if count:
                parts.append((str(count) if count > 1 else "") + name)
        coords[sigma(i) - 1] = "+".join(parts) or "0"
    return "({})".format(", ".join(coords))


# ==============================================================================
# Figures
# ==============================================================================

def draw_partition(ax, rv):
    window = default_window(rv)
    pts = window.points()
    index = classify_points(rv, pts)
    labels = [str(LABELS[int(k)]) for k in index]
    _scatter_groups(ax, [tuple(p) for p in pts], labels,
                    [str(label) for label in LABELS])
    fam = regular_family(rv)
    _outline(ax, hull_vertices(fam))
    _region_boundaries(ax, fam, window.bound // 3)
    _finish(ax, "Partition of the plane for {}".format(rv))


def draw_hexagon(ax, rv):
    a, b = rv.simple_vals
    L = 2 * a + b
    _outline(ax, [(L, 0, 0), (0, L, 0), (0, 0, L)], "b--", label="Sch(L,0,0)")
    shift = np.array([-b, -a, -a])
    _outline(ax, [shift + p for p in [(L, L, 0), (0, L, L), (L, 0, L)]],
             "g--", label="(-n2,-n1,-n1)+Sch(L,L,0)")
    fam = regular_family(rv)
    _outline(ax, hull_vertices(fam))
    for w in all_weyl(3):
        x, y = project_level_plane([fam.vertex(w)])[0]
        ax.plot([x], [y], "ko", markersize=3)
        ax.annotate(symbolic_vertex(w), (x, y), textcoords="offset points",
                    xytext=(4, 4))
    _finish(ax, "F_gamma as intersection of two triangles, {}".format(rv))


def draw_nonstandard(ax, rv):
    labels, overlap = v_partition(rv)
    pts = list(labels)
    _scatter_groups(ax, pts, [labels[p] for p in pts], V_LABELS)
    if overlap:
        xy = project_level_plane(overlap)
        ax.plot(xy[:, 0], xy[:, 1], "kx", markersize=8, label="V1 and V1p")
    _outline(ax, hull_vertices(regular_family(rv)))
    _finish(ax, "Nonstandard paving, {}".format(rv))


def _triangle_outline(ax, rv):
    L = 2 * rv.simple_vals[0] + rv.simple_vals[1]
    _outline(ax, [(L, 0, 0), (0, L, 0), (0, 0, L)])


def draw_triangle(ax, rv):
    pts = triangle_points(rv)
    _scatter_groups(ax, pts, [triangle_region(rv, p) for p in pts],
                    TRIANGLE_LABELS)
    _triangle_outline(ax, rv)
    _finish(ax, "Partition of the triangle, {}".format(rv))


def draw_complement(ax, rv):
    pts = triangle_points(rv)
    labels = [complement_region(rv, p) or "F_gamma" for p in pts]
    _scatter_groups(ax, pts, labels, ("F_gamma",) + COMPLEMENT_LABELS)
    _triangle_outline(ax, rv)
    _outline(ax, hull_vertices(regular_family(rv)), "k:")
    _finish(ax, "Complement of F_gamma, {}".format(rv))


DRAW = dict(
    partition=draw_partition,
    hexagon=draw_hexagon,
    nonstandard=draw_nonstandard,
    triangle=draw_triangle,
    complement=draw_complement,
)


def render(figure, rv, path):
    """Draw `figure` for the valuation `rv` into the SVG file `path`.

    Parameters
    ----------
    figure : str
        One of `FIGURES`.

    rv : RootValuation or pair
        n_1 > n_2 is normalised by swapping.

    path : str or path-like
        Output file.

    Raises
    ------
    ValueError
        For an unknown figure.

    OSError
        If the file cannot be written.

    """
    if figure not in DRAW:
        raise ValueError("Invalid arg `figure` {!r}".format(figure))
    rv, swapped = sorted_valuation(rv)
    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(1, 1, figsize=(7, 5))
        try:
            DRAW[figure](ax, rv)
            fig.savefig(path, format="svg", bbox_inches="tight",
                        metadata={"Date": None})
        finally:
            plt.close(fig)
    logger.info("wrote %s figure for %s to %s", figure, rv, path)
    return swapped
