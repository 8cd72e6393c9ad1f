"""Exact s-Frobenius numbers and certified geometry-of-numbers bounds.

g_s(a) is the largest positive integer with exactly s representations as
a nonnegative integer combination of the entries of a. The package
computes g_s exactly by a denumerant scan below a certified ceiling, and
evaluates upper/lower bounds on g_s and on the counting function G(t)
derived from the kernel lattice {x : a.x = 0} (successive minima,
covering radius, simplex geometry), all in outward-rounded interval
arithmetic so every asserted inequality is machine-checkable.
"""

from .bounds import (
    Applicability,
    BoundEvaluation,
    BoundId,
    Direction,
    build_certificates,
    certified_ceiling,
    constants,
    count_bounds,
    lower_rho,
    lower_simple,
    lower_widmer,
    upper_beta,
    upper_kissing,
    upper_main,
)
from .exact import DenumerantTable, brute_force_count, denumerant_table, s_frobenius_exact
from .geometry import KissingData, SimplexData, face_volume_bounds, kissing_data, simplex_data, unit_ball_volume
from .harness import CURATED_SUITE, SweepConfig, random_tuples, run_sweep, run_verify
from .instance import FrobeniusInstance, reduce_tuple, validate_tuple
from .intervals import RealInterval, working_precision
from .lattice import (
    CoveringRadiusBounds,
    KernelLattice,
    SuccessiveMinima,
    covering_radius_bounds,
    is_well_rounded,
    kernel_basis,
    reduce_basis,
    successive_minima,
)

__version__ = "0.1.0"
