"""The endpoint restriction of the time map.

Along the curve of largest admissible deflections alpha = 1/(1 + lam) the
time map collapses to a single-variable function

    g(lam) = T(1/(1+lam); lam) = integral_0^1 phi(z, lam) dz,

which has elementary closed forms on (0, 1) and (1, infinity) that glue to
the value 1/3 at lam = 1.  g increases from 0, peaks at a unique c in (0, 1),
and decays to 0 again; the peak value L_star = g(c) separates interval
half-widths into those admitting endpoint-touching solutions and those that
do not, which is what drives the classification downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import DomainError, NonConvergence
from .quadrature import IntegralSpec, integrate_singular, maximize_unimodal

# Widths of the crossover bands around lam = 1 inside which the closed forms
# are abandoned for quadrature.  The g branches lose roughly three digits per
# decade as lam -> 1 (a vanishing bracket against (1 - lam**2)**-1.5), which
# makes 1e-4 safe for g itself; the slope branches cancel harder and need the
# wider band.
_G_SEAM = 1e-4
_SLOPE_SEAM = 1e-2


def endpoint_kernel(z, lam: float):
    """phi(z, lam), the time-map integrand on the endpoint curve."""
    z = np.asarray(z, dtype=float)
    return (
        lam
        * (1.0 + lam) ** -1.5
        * z
        / (np.sqrt(1.0 - z) * np.sqrt(1.0 - z + lam * (1.0 + z)))
    )


def _endpoint_kernel_dlam(z, lam: float):
    # d(phi)/d(lam) at fixed z
    z = np.asarray(z, dtype=float)
    num = (lam * lam - 1.0) * z + (lam * lam - lam + 1.0) * z * z
    den = (1.0 + lam) ** 2.5 * np.sqrt(1.0 - z) * (1.0 - z + lam * (1.0 + z)) ** 1.5
    return -num / den


def _check_lam(lam: float) -> None:
    if not (np.isfinite(lam) and lam > 0.0):
        raise DomainError(f"lam must be a positive finite number, got {lam!r}")


def _quad(integrand) -> float:
    spec = IntegralSpec(
        integrand=integrand, singular_right=True, abs_tol=1e-13, rel_tol=1e-13
    )
    return integrate_singular(spec).value


def g_closed(lam: float) -> float:
    """Endpoint value g(lam) through its closed-form branches.

    For |lam - 1| < 1e-4 the branches are evaluated by quadrature of phi
    instead; both one-sided closed forms and the integral agree to well below
    1e-10 at the crossover.
    """
    _check_lam(lam)
    if lam == 1.0:
        return 1.0 / 3.0
    if abs(lam - 1.0) < _G_SEAM:
        return _quad(lambda z: endpoint_kernel(z, lam))
    if lam < 1.0:
        root = np.sqrt(1.0 - lam * lam)
        return float(lam * (1.0 - lam * lam) ** -1.5 * (np.log((1.0 + root) / lam) - root))
    root = np.sqrt(lam * lam - 1.0)
    return float(lam * (lam * lam - 1.0) ** -1.5 * (root - np.arccos(1.0 / lam)))


def g_prime(lam: float) -> float:
    """Derivative of the endpoint value, g'(lam).

    Positive below the argmax c, negative above it, and equal to -1/15 at
    lam = 1.  Near lam = 1 it is integrated from d(phi)/d(lam), since the
    closed forms there divide a doubly cancelling bracket by
    (1 - lam**2)**2.5.
    """
    _check_lam(lam)
    if lam == 1.0:
        return -1.0 / 15.0
    if abs(lam - 1.0) < _SLOPE_SEAM:
        return _quad(lambda z: _endpoint_kernel_dlam(z, lam))
    if lam < 1.0:
        root = np.sqrt(1.0 - lam * lam)
        bracket = (1.0 + 2.0 * lam * lam) * (1.0 + root) * np.log((1.0 + root) / lam) - (
            2.0 + lam * lam
        ) * (1.0 - lam * lam + root)
        return float(bracket / ((1.0 - lam * lam) ** 2.5 * (1.0 + root)))
    s = lam * lam - 1.0
    return float(
        ((1.0 + 2.0 * lam * lam) * np.arccos(1.0 / lam) - np.sqrt(s) * (2.0 + lam * lam))
        / s**2.5
    )


def compute_L_star(tol: float = 1e-9) -> Tuple[float, float]:
    """Locate the argmax c of g and the critical half-width L_star = g(c).

    Golden-section search over (1e-8, 1] does the bracketing; one secant step
    on g_prime then polishes the argmax, which is legitimate because g is
    strictly concave near its unique interior critical point.
    """
    if not (np.isfinite(tol) and tol > 0.0):
        raise DomainError("tol must be positive")
    c, _ = maximize_unimodal(g_closed, (1e-8, 1.0), tol=min(tol, 1e-6))
    h = 1e-6
    d1 = g_prime(c)
    d0 = g_prime(c - h)
    if d1 != d0:
        step = d1 * h / (d1 - d0)
        if abs(step) < 0.1 and 0.0 < c - step < 1.0:
            c = c - step
    if abs(g_prime(c)) > 1e-6:
        raise NonConvergence("argmax refinement failed to flatten g_prime")
    return float(c), g_closed(c)


@dataclass(frozen=True)
class EndpointCurve:
    """g sampled on a grid, together with its peak."""

    lambda_grid: Tuple[float, ...]
    g_values: Tuple[float, ...]
    c: float
    L_star: float


def endpoint_curve(lambda_grid: Sequence[float], tol: float = 1e-9) -> EndpointCurve:
    """Evaluate g on a grid and attach the located peak (c, L_star)."""
    grid = tuple(float(x) for x in lambda_grid)
    for x in grid:
        _check_lam(x)
    values = tuple(g_closed(x) for x in grid)
    c, l_star = compute_L_star(tol)
    return EndpointCurve(lambda_grid=grid, g_values=values, c=c, L_star=l_star)
