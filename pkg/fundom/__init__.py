"""Fixed-point combinatorics of the GL_3 fundamental domain of affine Springer
fibers.

Modules
-------
weyl
    root valuations, the Weyl group of GL_d and its action on coweights
family
    orthogonal families of coweights, faces and lattice polytopes
reduction
    Arthur-Kottwitz partition and strata at the fixed-point level
paving
    affine paving of F_gamma and its Poincare polynomial
series
    exact polynomials and the bivariate generating series
figures, cli
    SVG figures and the command line interface

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.

__version__ = "1.0.0"

from .util import ClassificationError, OrthogonalityError, PartitionError
from .weyl import RootValuation, WeylElem, valuation_matrix, weyl_apply
from .family import (
    face_distance,
    hexagon_membership,
    regular_family,
    regular_vertex,
    schubert_params,
)
from .reduction import ak_classify, stratum_fixed_points
from .paving import closed_form, poincare_pipeline, fundamental_fixed_points
from .series import direct_series, expand_rational, symmetric_expression
