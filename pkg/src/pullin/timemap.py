"""Time map of the clamped singular membrane problem.

The boundary value problem on (-L, L) is

    -(u' / sqrt(1 + u'**2))' = lam / (1 - u)**2,   u(-L) = u(L) = 0,

with lam > 0.  Every positive solution is even, concave, and determined by
its midpoint deflection alpha = u(0).  Integrating the conserved quantity
1/sqrt(1 + u'**2) - lam/(1 - u) and substituting u = alpha * z turns the
half-width of the supporting interval into the time map

    T(alpha; lam) = integral_0^1 K(alpha, z; lam) dz,

    K = sqrt(alpha/lam) * N / (sqrt(1 - z) * sqrt(D)),
    N = (1 - alpha z)(1 - alpha) - lam alpha (1 - z),
    D = 2 (1 - alpha z)(1 - alpha) - lam alpha (1 - z).

Deflections are admissible for 0 < alpha <= 1/(1 + lam); at the right
endpoint the slope becomes vertical and N, D degenerate together.  Roots of
T(. ; lam) = L are in one-to-one correspondence with positive solutions, so
solution counts, fold points, and full bifurcation diagrams all reduce to the
behaviour of T.  This module evaluates T, its first two alpha-derivatives,
and the closed-form slope of the endpoint restriction, together with the
explicit envelopes that dominate the derivative kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from .errors import DomainError
from .quadrature import IntegralSpec, integrate_singular

ArrayLike = Union[float, np.ndarray]

# Distance from the right endpoint below which the factor products are
# replaced by their exact expansions in powers of (alpha_limit - alpha).
_ENDPOINT_GUARD = 1e-12


def alpha_limit(lam: float) -> float:
    """Largest admissible midpoint deflection, 1 / (1 + lam)."""
    _check_lam(lam)
    return 1.0 / (1.0 + lam)


def _check_lam(lam: float) -> None:
    if not (np.isfinite(lam) and lam > 0.0):
        raise DomainError(f"lam must be a positive finite number, got {lam!r}")


def _check_alpha(alpha: float, lam: float, *, open_right: bool) -> float:
    _check_lam(lam)
    a_max = 1.0 / (1.0 + lam)
    if not (np.isfinite(alpha) and alpha > 0.0):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if open_right:
        if alpha >= a_max:
            raise DomainError(
                f"alpha={alpha!r} is not below the admissible limit {a_max!r}; "
                "the one-sided endpoint slope is endpoint_slope(lam)"
            )
    elif alpha > a_max:
        raise DomainError(f"alpha={alpha!r} exceeds the admissible limit {a_max!r}")
    return a_max


def kernel_factors(alpha: float, z: ArrayLike, lam: float) -> Tuple[np.ndarray, np.ndarray]:
    """The two bracketed factors (N, D) of the kernel, both positive on the
    admissible domain.

    Written directly, both factors lose all significant digits as alpha
    approaches 1/(1 + lam), so within 1e-12 of the endpoint they are
    evaluated through their exact rewrites in powers of the distance to it.
    """
    z = np.asarray(z, dtype=float)
    a_max = 1.0 / (1.0 + lam)
    delta = a_max - alpha
    if delta <= _ENDPOINT_GUARD:
        op = 1.0 + lam
        n0 = lam * lam * z / (op * op)
        n1 = op - z * (1.0 + lam * lam) / op
        num = n0 + delta * (n1 + delta * z)
        d0 = lam * (1.0 - z + lam * (1.0 + z)) / (op * op)
        d1 = (2.0 + lam) - z * (lam * lam - lam + 2.0) / op
        den = d0 + delta * (d1 + 2.0 * delta * z)
        return num, den
    front = (1.0 - alpha * z) * (1.0 - alpha)
    num = front - lam * alpha * (1.0 - z)
    return num, front + num


def _kernel_raw(alpha: float, z: np.ndarray, lam: float) -> np.ndarray:
    num, den = kernel_factors(alpha, z, lam)
    return np.sqrt(alpha / lam) * num / (np.sqrt(1.0 - z) * np.sqrt(den))


def kernel(alpha: float, z: ArrayLike, lam: float) -> ArrayLike:
    """Integrand K(alpha, z; lam) of the time map, vectorized over z in (0, 1)."""
    _check_alpha(alpha, lam, open_right=False)
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr <= 0.0) or np.any(z_arr >= 1.0):
        raise DomainError("z must lie strictly inside (0, 1)")
    out = _kernel_raw(alpha, z_arr, lam)
    return float(out) if np.isscalar(z) else out


@dataclass(frozen=True)
class KernelDecomposition:
    """Split of the derivative kernel dK/dalpha = H1 - H2 + H3, together with
    the cubic numerator p(z) of the second-derivative kernel and its
    coefficients (a0, a1, a2, a3)."""

    H1: ArrayLike
    H2: ArrayLike
    H3: ArrayLike
    p_numerator: ArrayLike
    a_coeffs: Tuple[float, float, float, float]


def _cubic_coeffs(alpha: float, lam: float) -> Tuple[float, float, float, float]:
    a0 = -1.0 + alpha * (1.0 - lam)
    a1 = alpha * (1.0 + 5.0 * alpha - 10.0 * alpha**2 + lam + 2.0 * alpha**3 * (2.0 + lam))
    a2 = -(alpha**3) * (10.0 - 17.0 * alpha + alpha**2 * (7.0 + 3.0 * lam))
    a3 = alpha**4 * (4.0 + 3.0 * alpha**2 - 2.0 * lam + alpha * (-7.0 + 3.0 * lam))
    return a0, a1, a2, a3


def kernel_decomposition(alpha: float, z: ArrayLike, lam: float) -> KernelDecomposition:
    """Pieces of the first two alpha-derivatives of the kernel at fixed z."""
    _check_alpha(alpha, lam, open_right=True)
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr <= 0.0) or np.any(z_arr >= 1.0):
        raise DomainError("z must lie strictly inside (0, 1)")
    num, den = kernel_factors(alpha, z_arr, lam)
    omz = 1.0 - z_arr
    root = np.sqrt(omz) * np.sqrt(den)
    h1 = num / (2.0 * np.sqrt(lam * alpha) * root)
    h2 = np.sqrt(alpha / lam) * (1.0 + (1.0 - 2.0 * alpha) * z_arr + lam * omz) / root
    h3 = (
        np.sqrt(alpha / lam)
        * num
        * (2.0 + lam * omz + (2.0 - 4.0 * alpha) * z_arr)
        / (2.0 * root * den)
    )
    a = _cubic_coeffs(alpha, lam)
    p = a[0] + z_arr * (a[1] + z_arr * (a[2] + z_arr * a[3]))
    if np.isscalar(z):
        return KernelDecomposition(float(h1), float(h2), float(h3), float(p), a)
    return KernelDecomposition(h1, h2, h3, p, a)


def _integrate(integrand, abs_tol: float, rel_tol: float) -> float:
    spec = IntegralSpec(
        integrand=integrand,
        singular_right=True,
        abs_tol=abs_tol,
        rel_tol=rel_tol,
    )
    return integrate_singular(spec).value


def time_map(alpha: float, lam: float, abs_tol: float = 1e-10, rel_tol: float = 1e-10) -> float:
    """Half-width T(alpha; lam) of the interval supporting the solution with
    midpoint deflection alpha.

    Admissible for 0 < alpha <= 1/(1 + lam); the endpoint value is finite and
    equals the closed form of the endpoint restriction.
    """
    _check_alpha(alpha, lam, open_right=False)
    return _integrate(lambda z: _kernel_raw(alpha, z, lam), abs_tol, rel_tol)


def time_map_deriv(alpha: float, lam: float, abs_tol: float = 1e-10, rel_tol: float = 1e-10) -> float:
    """dT/dalpha at an interior admissible deflection.

    The exact endpoint alpha = 1/(1 + lam) is refused: only a one-sided
    derivative exists there and it is served by endpoint_slope(lam).
    """
    _check_alpha(alpha, lam, open_right=True)

    def integrand(z):
        d = kernel_decomposition(alpha, z, lam)
        return d.H1 - d.H2 + d.H3

    return _integrate(integrand, abs_tol, rel_tol)


def time_map_second_deriv(alpha: float, lam: float, abs_tol: float = 1e-10, rel_tol: float = 1e-10) -> float:
    """d2T/dalpha2 at an interior admissible deflection.

    The integrand collapses to p(z) / (alpha**1.5 sqrt(lam) sqrt(1-z) D**2.5)
    with p the cubic carried by :func:`kernel_decomposition`; the endpoint is
    refused for the same reason as in :func:`time_map_deriv`.
    """
    _check_alpha(alpha, lam, open_right=True)
    a0, a1, a2, a3 = _cubic_coeffs(alpha, lam)
    scale = alpha**1.5 * np.sqrt(lam)

    def integrand(z):
        _, den = kernel_factors(alpha, z, lam)
        p = a0 + z * (a1 + z * (a2 + z * a3))
        return p / (scale * np.sqrt(1.0 - z) * den**2.5)

    return _integrate(integrand, abs_tol, rel_tol)


def _endpoint_slope_kernel(z: np.ndarray, lam: float) -> np.ndarray:
    # dK/dalpha evaluated on the endpoint curve alpha = 1/(1 + lam)
    zm = z - 1.0
    num = (
        3.0 * lam * zm
        - zm * zm
        - lam * lam * (z * z - 2.0 * z + 3.0)
        + lam**3 * (z * z + z - 1.0)
    )
    den = lam * np.sqrt(1.0 + lam) * np.sqrt(1.0 - z) * (1.0 - z + lam * (1.0 + z)) ** 1.5
    return num / den


def endpoint_slope(lam: float) -> float:
    """One-sided slope dT/dalpha at the admissible limit alpha = 1/(1+lam).

    Three closed-form branches meet at lam = 1 with value -8/5.  Both
    closed forms lose digits to cancellation as lam -> 1, so for
    |lam - 1| < 1e-2 the slope is integrated from the endpoint kernel
    instead; the two evaluations agree to about 1e-8 at the crossover.
    Strictly negative for every lam > 0.
    """
    _check_lam(lam)
    if lam == 1.0:
        return -1.6
    if abs(lam - 1.0) < 1e-2:
        return _integrate(lambda z: _endpoint_slope_kernel(z, lam), 1e-13, 1e-13)
    lead = 1.0 + lam * lam - 2.0 * lam**4
    denom = lam * (1.0 + lam) * (lam - 1.0) ** 3
    if lam > 1.0:
        root = np.sqrt(lam * lam - 1.0)
        angle = np.arctan(np.sqrt((lam - 1.0) / (lam + 1.0)))
        return float((lead + 6.0 * lam * lam * root * angle) / denom)
    root = np.sqrt(1.0 - lam * lam)
    sp = np.sqrt(1.0 + lam)
    sm = np.sqrt(1.0 - lam)
    return float((lead - 3.0 * lam * lam * root * np.log((sp + sm) / (sp - sm))) / denom)


def envelope_bounds(alpha: float, z: float, lam: float, a_floor: float) -> Tuple[bool, bool, bool]:
    """Check the three derivative-kernel pieces against their dominating
    envelopes at a single point.

    For any 0 < a_floor <= alpha <= 1/(1 + lam) and 0 < z < 1,

        0 <= H1 <= sqrt(1+lam) / (2 lam**1.5 a_floor) * (z(1-z))**-0.5,
        |H2| <= (2+lam) sqrt(1+lam) / lam**1.5 * (z(1-z))**-0.5,
        |H3| <= (1+lam)(4+lam) / (2 lam**2) * (1 - z/(1+lam))**-1.5 (1-z)**-0.5,

    and each envelope has a finite elementary integral over (0, 1).  Returns
    one boolean per piece.
    """
    if not (np.isfinite(a_floor) and 0.0 < a_floor <= alpha):
        raise DomainError("a_floor must satisfy 0 < a_floor <= alpha")
    if not (np.isfinite(z) and 0.0 < z < 1.0):
        raise DomainError("z must lie strictly inside (0, 1)")
    dec = kernel_decomposition(alpha, z, lam)
    pole = 1.0 / np.sqrt(z * (1.0 - z))
    env1 = np.sqrt(1.0 + lam) / (2.0 * lam**1.5 * a_floor) * pole
    env2 = (2.0 + lam) * np.sqrt(1.0 + lam) / lam**1.5 * pole
    env3 = (
        (1.0 + lam)
        * (4.0 + lam)
        / (2.0 * lam * lam)
        * (1.0 - z / (1.0 + lam)) ** -1.5
        / np.sqrt(1.0 - z)
    )
    ok1 = bool(0.0 <= dec.H1 <= env1)
    ok2 = bool(abs(dec.H2) <= env2)
    ok3 = bool(abs(dec.H3) <= env3)
    return ok1, ok2, ok3


@dataclass(frozen=True)
class TimeMapSample:
    """One evaluated point of the time map; derivatives are None at the exact
    endpoint, where only the one-sided slope exists."""

    alpha: float
    lam: float
    T: float
    T_prime: Optional[float] = None
    T_second: Optional[float] = None


def sample_time_map(
    alpha: float,
    lam: float,
    with_derivs: bool = True,
    abs_tol: float = 1e-10,
    rel_tol: float = 1e-10,
) -> TimeMapSample:
    """Bundle T and, away from the endpoint, its first two derivatives."""
    a_max = _check_alpha(alpha, lam, open_right=False)
    value = time_map(alpha, lam, abs_tol, rel_tol)
    if not with_derivs or alpha >= a_max:
        return TimeMapSample(alpha=alpha, lam=lam, T=value)
    return TimeMapSample(
        alpha=alpha,
        lam=lam,
        T=value,
        T_prime=time_map_deriv(alpha, lam, abs_tol, rel_tol),
        T_second=time_map_second_deriv(alpha, lam, abs_tol, rel_tol),
    )
