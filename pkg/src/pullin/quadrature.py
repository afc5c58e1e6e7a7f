"""Adaptive quadrature on (0, 1) for integrands with inverse-square-root
endpoint singularities, plus the bracketed root finder and the golden-section
maximizer used throughout the library.

A flagged singularity is removed by substitution before any node is placed:
z = 1 - t**2 absorbs a (1-z)**-0.5 blow-up on the right, z = t**2 absorbs a
z**-0.5 blow-up on the left, and when both ends are flagged the interval is
split at 1/2 and each half gets its own substitution.  The engine therefore
only ever samples a bounded integrand.  Each panel is estimated with an
embedded 10/20-point Gauss-Legendre pair and split in half until the pair
agrees to the panel's share of the requested tolerance.

Everything here is deterministic: fixed node tables, fixed splitting order,
no randomness, no caches that depend on call history.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .errors import BadBracket, NonConvergence, NonFinite


def _unit_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    # Gauss-Legendre rule moved from [-1, 1] to [0, 1].
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


_X_LO, _W_LO = _unit_rule(10)
_X_HI, _W_HI = _unit_rule(20)

_MAX_DEPTH = 60


@dataclass(frozen=True)
class IntegralSpec:
    """Description of one integral over the open interval (0, 1).

    Parameters
    ----------
    integrand : callable
        Maps a numpy array of points in (0, 1) to an array of values.  It is
        never called at 0 or 1.
    singular_left, singular_right : bool
        Declare an integrable z**-0.5 (resp. (1-z)**-0.5) blow-up at that
        endpoint.  The corresponding substitution is applied before sampling.
    abs_tol, rel_tol : float
        Absolute and relative targets for the total error estimate.
    budget : int
        Hard cap on integrand evaluations.
    """

    integrand: Callable[[np.ndarray], np.ndarray]
    singular_left: bool = False
    singular_right: bool = False
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    budget: int = 1_000_000

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.budget < 60:
            raise ValueError("budget too small for a single panel pair")


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int


def _pieces(spec: IntegralSpec):
    """Rewrite the integral as smooth pieces on subintervals of (0, 1).

    Each piece is (g, a, b) with integral_a^b g(t) dt equal to the piece's
    share of the original integral.
    """
    f = spec.integrand
    left, right = spec.singular_left, spec.singular_right

    def from_left(t):
        return f(t * t) * (2.0 * t)

    def from_right(t):
        return f(1.0 - t * t) * (2.0 * t)

    if left and right:
        r = np.sqrt(0.5)
        return [(from_left, 0.0, r), (from_right, 0.0, r)]
    if left:
        return [(from_left, 0.0, 1.0)]
    if right:
        return [(from_right, 0.0, 1.0)]
    return [(f, 0.0, 1.0)]


def integrate_singular(spec: IntegralSpec) -> QuadResult:
    """Evaluate the integral described by ``spec``.

    Returns a :class:`QuadResult` whose ``error_estimate`` is the sum of the
    accepted panels' pair discrepancies, kept below
    ``max(abs_tol, rel_tol * |value|)``.

    Raises
    ------
    NonConvergence
        If the evaluation budget runs out before every panel is accepted.
    NonFinite
        If the integrand returns NaN or infinity at any sampled point.
    """
    pieces = _pieces(spec)
    evaluations = 0

    # One coarse pass fixes the scale used by the relative tolerance, so the
    # acceptance threshold does not drift as panels are refined.
    coarse = 0.0
    for g, a, b in pieces:
        v = np.asarray(g(a + (b - a) * _X_HI), dtype=float)
        if not np.all(np.isfinite(v)):
            raise NonFinite("integrand returned a non-finite value")
        coarse += (b - a) * float(np.dot(_W_HI, v))
        evaluations += _X_HI.size
    total_len = sum(b - a for _, a, b in pieces)
    tol_total = max(spec.abs_tol, spec.rel_tol * abs(coarse))

    value = 0.0
    err = 0.0
    for g, a, b in pieces:
        stack = [(a, b, 0)]
        while stack:
            lo, hi, depth = stack.pop()
            h = hi - lo
            if evaluations + _X_LO.size + _X_HI.size > spec.budget:
                raise NonConvergence("evaluation budget exhausted")
            v_lo = np.asarray(g(lo + h * _X_LO), dtype=float)
            v_hi = np.asarray(g(lo + h * _X_HI), dtype=float)
            evaluations += _X_LO.size + _X_HI.size
            if not (np.all(np.isfinite(v_lo)) and np.all(np.isfinite(v_hi))):
                raise NonFinite("integrand returned a non-finite value")
            i_lo = h * float(np.dot(_W_LO, v_lo))
            i_hi = h * float(np.dot(_W_HI, v_hi))
            gap = abs(i_hi - i_lo)
            if gap <= tol_total * (h / total_len) or depth >= _MAX_DEPTH:
                value += i_hi
                err += gap
                continue
            mid = lo + 0.5 * h
            stack.append((mid, hi, depth + 1))
            stack.append((lo, mid, depth + 1))
    return QuadResult(value=value, error_estimate=err, evaluations=evaluations)


def find_root(
    f: Callable[[float], float],
    bracket: Tuple[float, float],
    tol: float = 1e-12,
) -> float:
    """Root of ``f`` inside a sign-changing bracket.

    Interpolation steps (false position with the usual stall correction) do
    most of the work; every third step is a plain bisection so the bracket
    width provably halves.  Iteration stops once the width is at most ``tol``
    and the endpoint with the smaller residual is returned.

    Raises
    ------
    BadBracket
        If f has the same strict sign at both ends of the bracket.
    NonFinite
        If f returns NaN or infinity anywhere it is sampled.
    """
    lo, hi = bracket
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise ValueError("bracket must be a finite interval (lo, hi) with lo < hi")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    f_lo = float(f(lo))
    f_hi = float(f(hi))
    if not (np.isfinite(f_lo) and np.isfinite(f_hi)):
        raise NonFinite("f returned a non-finite value at a bracket endpoint")
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise BadBracket("f does not change sign over the bracket")

    last_side = 0
    step = 0
    while hi - lo > tol:
        width = hi - lo
        x = 0.5 * (lo + hi)
        if step % 3 != 2 and f_hi != f_lo:
            cand = hi - f_hi * width / (f_hi - f_lo)
            # keep interpolation strictly interior so the bracket always shrinks
            if lo + 1e-3 * width < cand < hi - 1e-3 * width:
                x = cand
        step += 1
        fx = float(f(x))
        if not np.isfinite(fx):
            raise NonFinite("f returned a non-finite value")
        if fx == 0.0:
            return x
        if (fx > 0.0) == (f_lo > 0.0):
            lo, f_lo = x, fx
            if last_side == -1:
                f_hi *= 0.5
            last_side = -1
        else:
            hi, f_hi = x, fx
            if last_side == 1:
                f_lo *= 0.5
            last_side = 1
        if step > 600:
            raise NonConvergence("root bracket failed to shrink")
    return float(lo if abs(f_lo) <= abs(f_hi) else hi)


_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def maximize_unimodal(
    f: Callable[[float], float],
    bracket: Tuple[float, float],
    tol: float = 1e-10,
) -> Tuple[float, float]:
    """Golden-section maximizer for a unimodal function.

    Only interior points are ever evaluated, so the bracket endpoints may be
    singular.  Returns ``(argmax, f(argmax))`` with the argmax located to
    within ``tol``.
    """
    a, b = bracket
    if not (np.isfinite(a) and np.isfinite(b) and a < b):
        raise ValueError("bracket must be a finite interval (lo, hi) with lo < hi")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1 = float(f(x1))
    f2 = float(f(x2))
    if not (np.isfinite(f1) and np.isfinite(f2)):
        raise NonFinite("f returned a non-finite value")
    while b - a > tol:
        if f1 < f2:
            a = x1
            x1, f1 = x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = float(f(x2))
        else:
            b = x2
            x2, f2 = x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = float(f(x1))
        if not (np.isfinite(f1) and np.isfinite(f2)):
            raise NonFinite("f returned a non-finite value")
    best, best_val = (x1, f1) if f1 >= f2 else (x2, f2)
    return float(best), float(best_val)
