import numpy as np
import pytest

from pullin import (
    DomainError,
    EndpointCurve,
    IntegralSpec,
    compute_L_star,
    endpoint_curve,
    endpoint_kernel,
    g_closed,
    g_prime,
    integrate_singular,
)

# frozen reference values
G_05 = 0.3471279950679284
C_STAR = 0.61287056183310164
L_STAR = 0.34996764196447936


def g_by_quadrature(lam):
    spec = IntegralSpec(
        integrand=lambda z: endpoint_kernel(z, lam),
        singular_right=True,
        abs_tol=1e-13,
        rel_tol=1e-13,
    )
    return integrate_singular(spec).value


def test_rational_value_at_one():
    assert g_closed(1.0) == pytest.approx(1.0 / 3.0, abs=1e-14)


def test_reference_value():
    assert g_closed(0.5) == pytest.approx(G_05, abs=1e-13)


def test_both_branches_match_quadrature():
    # closed forms on either side of lam = 1, plus the seam patch
    for lam in (0.05, 0.3, 0.7, 0.9999, 1.0, 1.0001, 1.5, 3.0, 9.0):
        assert g_closed(lam) == pytest.approx(g_by_quadrature(lam), abs=1e-10)


def test_seam_continuity():
    # the quadrature patch spans |lam - 1| < 1e-4; at its edges the closed
    # branches still carry ~6e-10 of (lam**2 - 1)**1.5 cancellation noise,
    # so the seam jump must stay well below the 1e-8 consistency budget
    for edge in (1.0 - 1e-4, 1.0 + 1e-4):
        assert g_closed(edge - 1e-12) == pytest.approx(
            g_closed(edge + 1e-12), abs=2e-9
        )


def test_small_and_large_lam_limits():
    # g -> 0 in both tails
    assert g_closed(1e-3) < 0.01
    assert g_closed(1e3) < 0.01


def test_prime_rational_value_at_one():
    assert g_prime(1.0) == pytest.approx(-1.0 / 15.0, abs=1e-14)


def test_prime_matches_fd():
    # h large enough that the ~1e-13 cancellation noise of the closed g
    # branches near lam = 1 stays below the difference quotient
    for lam in (0.2, 0.6, 0.995, 1.005, 2.0, 5.0):
        h = 1e-4
        fd = (g_closed(lam + h) - g_closed(lam - h)) / (2.0 * h)
        assert g_prime(lam) == pytest.approx(fd, abs=1e-7)


def test_prime_sign_change_at_peak():
    c, _ = compute_L_star()
    assert g_prime(0.5 * c) > 0.0
    assert g_prime(2.0 * c) < 0.0
    assert abs(g_prime(c)) < 1e-6


def test_curve_concave_near_peak():
    # second differences: the peak is a genuine strict maximum
    c, _ = compute_L_star()
    h = 1e-3
    for lam in np.linspace(c - 0.2, c + 0.2, 21):
        d2 = (g_closed(lam - h) - 2.0 * g_closed(lam) + g_closed(lam + h)) / (h * h)
        assert d2 < 0.0


def test_l_star_frozen_values():
    c, l_star = compute_L_star(1e-10)
    assert c == pytest.approx(C_STAR, abs=1e-9)
    assert l_star == pytest.approx(L_STAR, abs=1e-12)
    assert isinstance(c, float) and isinstance(l_star, float)


def test_l_star_dominates_curve():
    _, l_star = compute_L_star()
    for lam in np.geomspace(0.05, 20.0, 40):
        assert g_closed(float(lam)) <= l_star + 1e-12


def test_domain_errors():
    for bad in (0.0, -1.0, float("nan"), float("inf")):
        with pytest.raises(DomainError):
            g_closed(bad)
        with pytest.raises(DomainError):
            g_prime(bad)


def test_endpoint_curve_struct():
    grid = (0.25, 0.5, 1.0, 2.0)
    curve = endpoint_curve(grid)
    assert isinstance(curve, EndpointCurve)
    assert curve.lambda_grid == grid
    assert len(curve.g_values) == len(grid)
    for lam, g in zip(grid, curve.g_values):
        assert g == pytest.approx(g_closed(lam), abs=1e-13)
    assert curve.L_star == pytest.approx(L_STAR, abs=1e-10)
    assert curve.c == pytest.approx(C_STAR, abs=1e-7)


def test_endpoint_curve_rejects_bad_grid():
    with pytest.raises(DomainError):
        endpoint_curve((0.5, -1.0))
