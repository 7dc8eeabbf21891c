"""Planar (non-associative) power series indexed by reduced planar rooted trees.

Tree combinatorics, truncated series arithmetic over exact rationals or
complex floats, base-point rebasing, the k-ary planar exponential family,
planar zeta/Gamma germ tabulation, and radius-of-convergence estimation.
"""

from .trees import (UNIT, LEAF, PlanarMonomial, parse, format_tree, node,
                    enumerate_trees, enumerate_binary, count_trees,
                    contract, binom, comb)
from .scalars import RATIONAL, COMPLEX
from .series import (TruncatedPlanarSeries, zero_series, unit_series,
                     constant_series, monomial_series, x_series,
                     add, scale, mul2, mulk, pow_series,
                     left_inverse, right_inverse, sqrt_solve,
                     g_series, h_series, scale_substitute,
                     eval_series, classical_image, majorants,
                     series_to_json, series_from_json)
from .rebase import (Germ, rebase_polynomial, rebase_series, rebase_between,
                     check_composition_identity, check_counting_identity,
                     germ_to_json, germ_from_json)
from .analytic import (PlanarAnalyticFunction, reciprocal_function,
                       sqrt_function, from_entire_series, inverse_family,
                       check_compatibility, coefficient_function)
from .expfam import (exp_coeff, exp_coeff_float, exp_series, exp_degree_sum,
                     exp_majorants, shift_identity_check, translation_check, npow)
from .special import (ZetaGermSpec, GammaGermSpec, zeta_deriv, gamma_deriv,
                      zeta_germ, gamma_germ, zeta_majorants, zeta_continue,
                      zeta_continue_deep, gamma_shift_probe)
from .radius import RadiusEstimate, estimate_radius

__version__ = "0.1.0"
