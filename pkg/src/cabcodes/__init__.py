"""Algebraic-geometry codes from C_{a,b} curves over finite fields."""

from .code import (LinearCode, build_code, codes_equal, designed_distance, dual_code,
                   is_mds, minimum_distance, weight_distribution)
from .curve import (AffinePoint, CabCurve, PlaneCurve, branch_point_counts,
                    enumerate_affine_points, genus, genus3_normal_form, hyperelliptic_as_cab,
                    make_cab_curve, parse_curve, smoothness_check)
from .errors import CapExceededError, ValidationError
from .field import GF, make_field, parse_field, univariate_roots
from .groups import (diagonal_curve_autos, group_invariants, induced_permutation,
                     is_automorphism, iso_hypothesis_check, paut, sn_expected)
from .riemann_roch import evaluation_matrix, rr_basis, rr_dimension

__version__ = "0.1.0"
