"""Classification of solution counts and bifurcation-diagram sweeps.

For a fixed forcing strength lam the time map rises from 0 to its unique
interior maximum M(lam) and then falls back to the endpoint value g(lam),
so the number of admissible deflections solving T(alpha; lam) = L is read
off from the relative position of L, M(lam), and g(lam).  In lam these
comparisons translate into critical abscissas:

  lambda_sup      the unique root of M(lam) = L (M is strictly decreasing);
                  above it there are no solutions, at it exactly one.
  lambda_low,
  lambda_mid      for L below the peak of g, the two roots of g(lam) = L
                  straddling the argmax of g; between them the descending
                  part of the time map leaves the admissible range above
                  level L and the count drops from two to one.

Short interval half-widths (L below the peak of g) therefore see the count
sequence 2, 1, 2, 1, 0 as lam grows, and longer ones see 2, 1, 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from .endpoint import compute_L_star, g_closed
from .errors import DomainError, NonConvergence, RegimeError
from .quadrature import find_root, maximize_unimodal
from .timemap import alpha_limit, time_map

SPLIT = "Split"
CONTINUOUS = "Continuous"

# |lam - lambda_sup| below this is reported as the tangency (count 1); exact
# equality is measure zero in floating point, a band makes the count total.
TANGENCY_TOL = 1e-9

_DEFAULT_TOL = 1e-9


def _check_positive(name: str, value: float) -> None:
    if not (np.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class CriticalSet:
    """Critical forcing strengths for one half-width L.

    In the Split regime (L below the peak of the endpoint curve) all three
    abscissas exist and satisfy lambda_low < lambda_mid < lambda_sup; in the
    Continuous regime only lambda_sup remains and the fold pair is absent.
    """

    L: float
    lambda_low: Optional[float]
    lambda_mid: Optional[float]
    lambda_sup: float
    regime: str


@dataclass(frozen=True)
class BifurcationDiagram:
    """Solution branches over a lam grid: rows of (lam, sorted deflections)."""

    L: float
    rows: Tuple[Tuple[float, Tuple[float, ...]], ...]


@lru_cache(maxsize=None)
def _peak() -> Tuple[float, float]:
    return compute_L_star(1e-10)


def max_time_map(lam: float, tol: float = _DEFAULT_TOL) -> Tuple[float, float]:
    """Interior maximum of the time map: (argmax alpha_star, value M).

    The argmax is bracketed to about sqrt(tol), which pins the flat maximum
    value itself down to O(tol).
    """
    _check_positive("lam", lam)
    _check_positive("tol", tol)
    a_max = alpha_limit(lam)
    alpha_tol = min(1e-5, max(1e-8, 0.5 * np.sqrt(tol))) * a_max
    a_star, m = maximize_unimodal(lambda a: time_map(a, lam), (0.0, a_max), tol=alpha_tol)
    # the admissible set is closed on the right; never report less than the
    # endpoint value the search cannot probe
    g = g_closed(lam)
    if g > m:
        return a_max, g
    return a_star, m


def _m_of(lam: float) -> float:
    return max_time_map(lam, tol=1e-10)[1]


def lambda_sup(L: float, tol: float = _DEFAULT_TOL) -> float:
    """The forcing strength where the maximal time map equals L.

    M is strictly decreasing from +infinity to 0, so a doubling/halving walk
    from lam = 1 always brackets the root; bisection with interpolation then
    pins it down until |M - L| <= tol.
    """
    _check_positive("L", L)
    _check_positive("tol", tol)
    lo = hi = 1.0
    if _m_of(1.0) > L:
        for _ in range(200):
            lo, hi = hi, hi * 2.0
            if _m_of(hi) <= L:
                break
        else:
            raise NonConvergence("failed to bracket the vanishing of M - L from above")
    else:
        for _ in range(200):
            hi, lo = lo, lo / 2.0
            if _m_of(lo) > L:
                break
        else:
            raise NonConvergence("failed to bracket the vanishing of M - L from below")
    slope = abs(_m_of(hi) - _m_of(lo)) / (hi - lo)
    width = max(1e-13, min(tol, tol / max(slope, 1.0)))
    return find_root(lambda x: _m_of(x) - L, (lo, hi), tol=width)


def lambda_fold_pair(L: float, tol: float = _DEFAULT_TOL) -> Tuple[float, float]:
    """The two roots of g(lam) = L straddling the argmax of g.

    Only defined in the Split regime; for L at or above the peak value the
    level set of g is empty or a single tangency and RegimeError is raised.
    """
    _check_positive("L", L)
    _check_positive("tol", tol)
    c, l_star = _peak()
    if L >= l_star:
        raise RegimeError(
            f"no fold pair: L={L!r} is not below the endpoint-curve peak {l_star!r}"
        )
    width = max(1e-15, min(tol, 1e-12))

    lo = c
    for _ in range(600):
        lo *= 0.5
        if g_closed(lo) < L:
            break
    else:
        raise NonConvergence("failed to bracket the rising crossing of g = L")
    low = find_root(lambda x: g_closed(x) - L, (lo, c), tol=max(width * max(lo, 1e-3), 1e-15))

    hi = c
    for _ in range(200):
        hi *= 2.0
        if g_closed(hi) < L:
            break
    else:
        raise NonConvergence("failed to bracket the falling crossing of g = L")
    mid = find_root(lambda x: g_closed(x) - L, (c, hi), tol=width)
    return low, mid


@lru_cache(maxsize=256)
def critical_set(L: float, tol: float = _DEFAULT_TOL) -> CriticalSet:
    """All critical abscissas for half-width L, with the regime label.

    Cached: diagram sweeps and per-lam counts reuse one computation.
    """
    _check_positive("L", L)
    _check_positive("tol", tol)
    _, l_star = _peak()
    sup = lambda_sup(L, min(tol, 1e-10))
    if L >= l_star:
        return CriticalSet(L=L, lambda_low=None, lambda_mid=None, lambda_sup=sup, regime=CONTINUOUS)
    low, mid = lambda_fold_pair(L, tol)
    return CriticalSet(L=L, lambda_low=low, lambda_mid=mid, lambda_sup=sup, regime=SPLIT)


def count_solutions(lam: float, L: float) -> int:
    """Number of positive solutions at (lam, L): 0, 1, or 2.

    Pure comparisons against the cached critical set.  The tangency band
    around lambda_sup counts as one solution; grazing either fold abscissa
    within the same band counts as the closed-interval answer two, whose
    second deflection sits at (or within root tolerance of) the admissible
    endpoint.
    """
    _check_positive("lam", lam)
    _check_positive("L", L)
    cs = critical_set(L)
    if abs(lam - cs.lambda_sup) < TANGENCY_TOL:
        return 1
    if lam > cs.lambda_sup:
        return 0
    if cs.regime == CONTINUOUS:
        return 2
    if lam <= cs.lambda_low + TANGENCY_TOL:
        return 2
    if lam < cs.lambda_mid - TANGENCY_TOL:
        return 1
    return 2


def solve_alphas(lam: float, L: float, tol: float = _DEFAULT_TOL) -> List[float]:
    """All admissible deflections with T(alpha; lam) = L, sorted ascending.

    Roots are bracketed against the unique interior maximum of the time map:
    one rising crossing below the argmax and, when the count is two, one
    falling crossing between the argmax and the admissible endpoint.  Within
    about 1e-8 of the fold the merging pair may be reported as coincident;
    each entry still meets the residual tolerance.
    """
    _check_positive("tol", tol)
    n = count_solutions(lam, L)
    if n == 0:
        return []
    cs = critical_set(L)
    near_fold = abs(lam - cs.lambda_sup) < 1e-6
    a_star, m = max_time_map(lam, tol=1e-14 if near_fold else 1e-9)
    if n == 1 and abs(lam - cs.lambda_sup) < TANGENCY_TOL:
        return [a_star]

    q_tol = min(1e-10, tol / 10.0)

    def f(a: float) -> float:
        return time_map(a, lam, abs_tol=q_tol, rel_tol=q_tol) - L

    if f(a_star) <= 0.0:
        # level within quadrature noise of the fold: merged root
        return [a_star] * n

    lo = a_star
    for _ in range(600):
        lo *= 0.5
        if f(lo) < 0.0:
            break
    else:
        raise NonConvergence("failed to bracket the rising crossing of T = L")
    width = max(1e-15, min(1e-12, tol * 1e-3))
    rising = find_root(f, (lo, a_star), tol=width * max(lo, 1e-3))
    if n == 1:
        return [rising]

    a_max = alpha_limit(lam)
    f_end = f(a_max)
    if f_end > 0.0:
        if f_end <= tol:
            falling = a_max
        else:
            raise NonConvergence("descending branch failed to recross the level")
    else:
        falling = a_max if f_end == 0.0 else find_root(f, (a_star, a_max), tol=width)
    return sorted([rising, falling])


def sweep_diagram(L: float, lambda_min: float, lambda_max: float, n: int) -> BifurcationDiagram:
    """Solution branches on a log-spaced lam grid (branches crowd as lam -> 0).

    Row order is by lam; every row agrees with count_solutions by
    construction.
    """
    _check_positive("L", L)
    _check_positive("lambda_min", lambda_min)
    if not (np.isfinite(lambda_max) and lambda_max > lambda_min):
        raise DomainError("need 0 < lambda_min < lambda_max")
    if int(n) != n or n < 2:
        raise DomainError("n must be an integer >= 2")
    grid = np.geomspace(lambda_min, lambda_max, int(n))
    rows = tuple(
        (float(lam), tuple(solve_alphas(float(lam), L))) for lam in grid
    )
    return BifurcationDiagram(L=L, rows=rows)
