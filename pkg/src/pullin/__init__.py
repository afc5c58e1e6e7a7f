"""Time-map analysis of a clamped 1-D membrane with inverse-square forcing.

The library computes the complete positive solution set of

    -(u' / sqrt(1 + u'**2))' = lam / (1 - u)**2,   u(-L) = u(L) = 0,

by the time-map method: adaptive quadrature for the map and its derivatives,
closed forms along the maximal-deflection endpoint, classification of the
solution count (0, 1, or 2) with fold and splitting thresholds, branch
sweeps for bifurcation diagrams, and full profile reconstruction with
residual verification.
"""

from .bifurcation import (
    CONTINUOUS,
    SPLIT,
    TANGENCY_TOL,
    BifurcationDiagram,
    CriticalSet,
    count_solutions,
    critical_set,
    lambda_fold_pair,
    lambda_sup,
    max_time_map,
    solve_alphas,
    sweep_diagram,
)
from .endpoint import (
    EndpointCurve,
    compute_L_star,
    endpoint_curve,
    endpoint_kernel,
    g_closed,
    g_prime,
)
from .errors import BadBracket, DomainError, NonConvergence, NonFinite, RegimeError
from .profile import (
    SolutionProfile,
    first_integral_energy,
    reconstruct_profile,
    residual_check,
    slope_from_height,
    verify_necessary_conditions,
    x_of_u,
)
from .quadrature import (
    IntegralSpec,
    QuadResult,
    find_root,
    integrate_singular,
    maximize_unimodal,
)
from .timemap import (
    KernelDecomposition,
    TimeMapSample,
    alpha_limit,
    endpoint_slope,
    envelope_bounds,
    kernel,
    kernel_decomposition,
    kernel_factors,
    sample_time_map,
    time_map,
    time_map_deriv,
    time_map_second_deriv,
)

__version__ = "0.1.0"

__all__ = [
    "BadBracket",
    "BifurcationDiagram",
    "CONTINUOUS",
    "CriticalSet",
    "DomainError",
    "EndpointCurve",
    "IntegralSpec",
    "KernelDecomposition",
    "NonConvergence",
    "NonFinite",
    "QuadResult",
    "RegimeError",
    "SPLIT",
    "SolutionProfile",
    "TANGENCY_TOL",
    "TimeMapSample",
    "alpha_limit",
    "compute_L_star",
    "count_solutions",
    "critical_set",
    "endpoint_curve",
    "endpoint_kernel",
    "endpoint_slope",
    "envelope_bounds",
    "find_root",
    "first_integral_energy",
    "g_closed",
    "g_prime",
    "integrate_singular",
    "kernel",
    "kernel_decomposition",
    "kernel_factors",
    "lambda_fold_pair",
    "lambda_sup",
    "max_time_map",
    "maximize_unimodal",
    "reconstruct_profile",
    "residual_check",
    "sample_time_map",
    "slope_from_height",
    "solve_alphas",
    "sweep_diagram",
    "time_map",
    "time_map_deriv",
    "time_map_second_deriv",
    "verify_necessary_conditions",
    "x_of_u",
]
