"""Self-verification registry: every analytically checkable claim the library
rests on, runnable as one batch.

Each check returns (ok, message) and is independent of the others.  The
checks deliberately cross different computational paths: closed forms against
adaptive quadrature, adaptive derivatives against finite differences, the
classification logic against a brute-force grid scan that never calls the
root finder.  The CLI command ``verify`` prints one line per check; the test
suite runs the same registry.
"""
from __future__ import annotations

import time
from typing import Callable, List, Tuple

import numpy as np

from .bifurcation import (
    CONTINUOUS,
    SPLIT,
    count_solutions,
    critical_set,
    lambda_sup,
    max_time_map,
    solve_alphas,
)
from .endpoint import compute_L_star, endpoint_kernel, g_closed, g_prime
from .profile import reconstruct_profile, residual_check, verify_necessary_conditions
from .quadrature import IntegralSpec, integrate_singular
from .timemap import (
    alpha_limit,
    endpoint_slope,
    envelope_bounds,
    time_map,
    time_map_deriv,
    time_map_second_deriv,
)

Check = Callable[[], Tuple[bool, str]]


def _brute_count(lam: float, L: float, n_alpha: int = 10_000, n_t: int = 512) -> int:
    """Solution count by sign-change scan of T - L on a dense deflection grid.

    The time map is evaluated with a fixed midpoint rule after the square-root
    substitution, so this shares no code path with the adaptive engine or the
    classification logic.  A graze of the level within 1e-4 (the resolution of
    the rule) is reported as the tangency count 1.
    """
    a_max = 1.0 / (1.0 + lam)
    alphas = np.linspace(a_max / n_alpha, a_max, n_alpha)
    t_mid = (np.arange(n_t) + 0.5) / n_t
    z = 1.0 - t_mid * t_mid
    t_vals = np.empty(n_alpha)
    for start in range(0, n_alpha, 2048):
        a = alphas[start : start + 2048, None]
        front = (1.0 - a * z) * (1.0 - a)
        num = front - lam * a * (1.0 - z)
        den = front + num
        # dz = 2t dt cancels the 1/sqrt(1-z) = 1/t singular factor exactly
        t_vals[start : start + 2048] = (
            2.0 * np.sqrt(a[:, 0] / lam) * np.mean(num / np.sqrt(den), axis=1)
        )
    d = t_vals - L
    if abs(np.max(d)) <= 1e-4:
        return 1
    sign = np.sign(d)
    return int(np.sum(sign[:-1] * sign[1:] < 0))


def check_critical_length() -> Tuple[bool, str]:
    start = time.perf_counter()
    c, l_star = compute_L_star(1e-9)
    elapsed = time.perf_counter() - start
    ok = abs(l_star - 0.3499676) <= 1e-6 and elapsed < 1.0 and 0.0 < c < 1.0
    return ok, f"L_star={l_star:.10f} (target 0.3499676 +/- 1e-6), c={c:.10f}, {elapsed:.3f}s"


def check_endpoint_identity() -> Tuple[bool, str]:
    d1 = abs(g_closed(1.0) - 1.0 / 3.0)
    d2 = abs(time_map(0.5, 1.0) - 1.0 / 3.0)
    ok = d1 <= 1e-12 and d2 <= 1e-8
    return ok, f"|g(1)-1/3|={d1:.2e} (<=1e-12), |T(1/2;1)-1/3|={d2:.2e} (<=1e-8)"


def check_endpoint_slopes() -> Tuple[bool, str]:
    d1 = abs(endpoint_slope(1.0) + 1.6)
    d2 = abs(g_prime(1.0) + 1.0 / 15.0)
    grid = np.linspace(0.1, 10.0, 100)
    worst = max(endpoint_slope(float(x)) for x in grid)
    ok = d1 <= 1e-10 and d2 <= 1e-10 and worst < 0.0
    return ok, (
        f"|slope(1)+8/5|={d1:.2e}, |g'(1)+1/15|={d2:.2e} (both <=1e-10), "
        f"max slope on [0.1,10] = {worst:.4f} (<0)"
    )


def check_envelope_integrals() -> Tuple[bool, str]:
    res = integrate_singular(
        IntegralSpec(
            integrand=lambda z: 1.0 / np.sqrt(z * (1.0 - z)),
            singular_left=True,
            singular_right=True,
        )
    )
    worst = abs(res.value - np.pi)
    for lam in (0.5, 1.0, 2.0):
        res = integrate_singular(
            IntegralSpec(
                integrand=lambda z, s=1.0 + lam: (1.0 - z / s) ** -1.5 / np.sqrt(1.0 - z),
                singular_right=True,
            )
        )
        worst = max(worst, abs(res.value - 2.0 * (1.0 + 1.0 / lam)))
    all_true = True
    for lam in (0.5, 1.0, 2.0, 4.0, 8.0):
        a_max = alpha_limit(lam)
        floor = 0.05 * a_max
        for alpha in np.linspace(floor, (1.0 - 1e-6) * a_max, 20):
            for z in np.linspace(0.01, 0.99, 20):
                all_true &= all(envelope_bounds(float(alpha), float(z), lam, floor))
    ok = worst <= 1e-8 and all_true
    return ok, (
        f"max closed-integral defect {worst:.2e} (<=1e-8), "
        f"envelopes hold on 20x20x5 grid: {all_true}"
    )


def check_regime_counts() -> Tuple[bool, str]:
    msgs = []
    ok = True
    for L, continuous in ((0.3, False), (0.6, True)):
        cs = critical_set(L)
        if continuous:
            if cs.regime != CONTINUOUS:
                return False, f"L={L}: expected Continuous regime, got {cs.regime}"
            probes = [cs.lambda_sup / 2, cs.lambda_sup, 1.5 * cs.lambda_sup]
            expected = [2, 1, 0]
        else:
            if cs.regime != SPLIT or not (cs.lambda_low < cs.lambda_mid < cs.lambda_sup):
                return False, f"L={L}: fold ordering violated in {cs}"
            probes = [
                cs.lambda_low / 2,
                (cs.lambda_low + cs.lambda_mid) / 2,
                (cs.lambda_mid + cs.lambda_sup) / 2,
                cs.lambda_sup,
                1.5 * cs.lambda_sup,
            ]
            expected = [2, 1, 2, 1, 0]
        counts = [count_solutions(x, L) for x in probes]
        brute = [_brute_count(x, L) for x in probes]
        ok &= counts == expected == brute
        msgs.append(f"L={L}: counts {counts}, brute {brute}, expected {expected}")
    return ok, "; ".join(msgs)


def check_fold_bounds() -> Tuple[bool, str]:
    _, l_star = compute_L_star(1e-9)
    worst_margin = np.inf
    for L in (0.1, 0.3, l_star, 0.6, 1.0, 2.0, 5.0):
        sup = lambda_sup(L, 1e-9)
        bound = min(1.0 / L, np.pi**2 / (27.0 * L * L))
        worst_margin = min(worst_margin, bound - sup)
        if not sup < bound:
            return False, f"L={L}: lambda_sup={sup} breaks bound {bound}"
    return True, f"lambda_sup below min(1/L, pi^2/(27 L^2)) at 7 widths, min margin {worst_margin:.3e}"


def check_branch_consistency() -> Tuple[bool, str]:
    worst = 0.0
    for lam in (0.1, 0.5, 0.9, 0.99, 1.0, 1.01, 1.5, 3.0, 10.0):
        res = integrate_singular(
            IntegralSpec(
                integrand=lambda z, x=lam: endpoint_kernel(z, x),
                singular_right=True,
                abs_tol=1e-12,
                rel_tol=1e-12,
            )
        )
        worst = max(worst, abs(g_closed(lam) - res.value))
    return worst <= 1e-8, f"max |closed - quadrature| = {worst:.2e} (<=1e-8) at 9 points"


def check_derivative_consistency() -> Tuple[bool, str]:
    worst1 = worst2 = 0.0
    most_positive = -np.inf
    tight = dict(abs_tol=1e-12, rel_tol=1e-12)
    for lam in (0.2, 0.5, 1.0, 2.0, 5.0):
        a_max = alpha_limit(lam)
        for frac in np.linspace(0.08, 0.92, 10):
            alpha = float(frac * a_max)
            h1 = 1e-4 * a_max
            fd1 = (time_map(alpha + h1, lam, **tight) - time_map(alpha - h1, lam, **tight)) / (2 * h1)
            worst1 = max(worst1, abs(time_map_deriv(alpha, lam) - fd1))
            # 5-point stencil: T ~ sqrt(alpha) near zero deflection, so the
            # 3-point truncation error alpha**-3.5 * h**2 would breach 1e-4
            h2 = 1e-3 * a_max
            f = [time_map(alpha + k * h2, lam, **tight) for k in (-2, -1, 0, 1, 2)]
            fd2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h2 * h2)
            second = time_map_second_deriv(alpha, lam)
            worst2 = max(worst2, abs(second - fd2))
            most_positive = max(most_positive, second)
    ok = worst1 <= 1e-5 and worst2 <= 1e-4 and most_positive < 0.0
    return ok, (
        f"max |T' - fd| = {worst1:.2e} (<=1e-5), max |T'' - fd| = {worst2:.2e} (<=1e-4), "
        f"max T'' = {most_positive:.3f} (<0) on 10x5 grid"
    )


def check_profile_fidelity() -> Tuple[bool, str]:
    cases = []
    for L, lams in ((0.3, (0.1, 0.9, 1.0, 2.0)), (0.6, (0.3, 0.6))):
        for lam in lams:
            for alpha in solve_alphas(lam, L):
                cases.append((alpha, lam))
    if len(cases) != 10:
        return False, f"expected 10 branch profiles, found {len(cases)}"
    worst_res = worst_ratio = 0.0
    conditions_ok = True
    for alpha, lam in cases:
        p = reconstruct_profile(alpha, lam, 401)
        res = residual_check(p)
        res_fine = residual_check(reconstruct_profile(alpha, lam, 801))
        worst_res = max(worst_res, res)
        worst_ratio = max(worst_ratio, res_fine / res)
        report = verify_necessary_conditions(p)
        conditions_ok &= all(report.values())
    ok = worst_res <= 1e-4 and worst_ratio <= 0.5 and conditions_ok
    return ok, (
        f"10 profiles: max residual {worst_res:.2e} (<=1e-4), "
        f"worst refinement ratio {worst_ratio:.2f} (<=0.5 for second order), "
        f"necessary conditions all pass: {conditions_ok}"
    )


def check_monotonicity() -> Tuple[bool, str]:
    t_ok = True
    for lam1, lam2 in ((0.5, 1.0), (1.0, 2.0)):
        a_max = alpha_limit(lam2)
        for alpha in np.linspace(0.04 * a_max, 0.99 * a_max, 20):
            t_ok &= time_map(float(alpha), lam1) > time_map(float(alpha), lam2)
    grid = np.geomspace(0.2, 5.0, 20)
    m_vals = [max_time_map(float(x), 1e-9)[1] for x in grid]
    decreasing = all(a > b for a, b in zip(m_vals, m_vals[1:]))
    return t_ok and decreasing, (
        f"T decreasing in lam at 2x20 deflections: {t_ok}, "
        f"M strictly decreasing on 20-point grid: {decreasing}"
    )


CHECKS: List[Tuple[str, Check]] = [
    ("critical-length", check_critical_length),
    ("endpoint-identity", check_endpoint_identity),
    ("endpoint-slopes", check_endpoint_slopes),
    ("envelope-integrals", check_envelope_integrals),
    ("regime-counts", check_regime_counts),
    ("fold-bounds", check_fold_bounds),
    ("branch-consistency", check_branch_consistency),
    ("derivative-consistency", check_derivative_consistency),
    ("profile-fidelity", check_profile_fidelity),
    ("monotonicity", check_monotonicity),
]


def run_all(verbose: bool = True) -> bool:
    """Run every check; print one PASS/FAIL line each; return overall truth."""
    all_ok = True
    for name, fn in CHECKS:
        ok, msg = fn()
        all_ok &= ok
        if verbose:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {msg}")
    return all_ok
