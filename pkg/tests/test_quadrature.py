import numpy as np
import pytest

from pullin import (
    BadBracket,
    IntegralSpec,
    NonConvergence,
    NonFinite,
    QuadResult,
    find_root,
    integrate_singular,
    maximize_unimodal,
)


def quad(f, **kw):
    return integrate_singular(IntegralSpec(integrand=f, **kw)).value


def test_smooth_polynomial_exact():
    assert quad(lambda z: 3.0 * z * z) == pytest.approx(1.0, abs=1e-13)
    assert quad(lambda z: np.ones_like(z)) == pytest.approx(1.0, abs=1e-14)


def test_right_singular_sqrt():
    # integral of (1-z)^-1/2 over (0,1)
    val = quad(lambda z: 1.0 / np.sqrt(1.0 - z), singular_right=True)
    assert val == pytest.approx(2.0, abs=1e-10)


def test_left_singular_sqrt():
    val = quad(lambda z: 1.0 / np.sqrt(z), singular_left=True)
    assert val == pytest.approx(2.0, abs=1e-10)


def test_double_singular_beta():
    # integral of (z(1-z))^-1/2 over (0,1) equals pi
    val = quad(
        lambda z: 1.0 / np.sqrt(z * (1.0 - z)),
        singular_left=True,
        singular_right=True,
    )
    assert val == pytest.approx(np.pi, abs=1e-10)


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_shifted_pole_family(lam):
    # integral of (1 - z/(1+lam))^-3/2 (1-z)^-1/2 over (0,1) = 2(1 + 1/lam)
    val = quad(
        lambda z: (1.0 - z / (1.0 + lam)) ** -1.5 / np.sqrt(1.0 - z),
        singular_right=True,
    )
    assert val == pytest.approx(2.0 * (1.0 + 1.0 / lam), abs=1e-9)


def test_random_polynomials_match_antiderivative():
    rng = np.random.default_rng(20260822)
    for _ in range(12):
        coeffs = rng.uniform(-3.0, 3.0, size=5)
        exact = sum(c / (k + 1) for k, c in enumerate(coeffs))
        val = quad(lambda z: np.polynomial.polynomial.polyval(z, coeffs))
        assert val == pytest.approx(exact, abs=1e-11)


def test_result_fields():
    res = integrate_singular(IntegralSpec(integrand=lambda z: z))
    assert isinstance(res, QuadResult)
    assert res.value == pytest.approx(0.5, abs=1e-13)
    assert res.error_estimate >= 0.0
    assert res.evaluations >= 20


def test_error_estimate_tracks_tolerance():
    res = integrate_singular(
        IntegralSpec(
            integrand=lambda z: 1.0 / np.sqrt(1.0 - z),
            singular_right=True,
            abs_tol=1e-6,
            rel_tol=1e-6,
        )
    )
    assert res.error_estimate <= 2e-6
    assert abs(res.value - 2.0) <= 1e-6


def test_tight_tolerance_costs_more():
    loose = integrate_singular(
        IntegralSpec(integrand=lambda z: np.exp(z) / np.sqrt(z), singular_left=True,
                     abs_tol=1e-4, rel_tol=1e-4)
    )
    tight = integrate_singular(
        IntegralSpec(integrand=lambda z: np.exp(z) / np.sqrt(z), singular_left=True,
                     abs_tol=1e-12, rel_tol=1e-12)
    )
    assert tight.evaluations >= loose.evaluations
    assert abs(tight.value - loose.value) <= 1e-3


def test_budget_exhaustion():
    # undeclared interior kink forces refinement past a tiny budget
    spec = IntegralSpec(
        integrand=lambda z: np.abs(z - np.sqrt(0.5)) ** 0.2,
        budget=90,
    )
    with pytest.raises(NonConvergence):
        integrate_singular(spec)


def test_non_finite_integrand():
    spec = IntegralSpec(integrand=lambda z: np.where(z > 0.5, np.nan, z))
    with pytest.raises(NonFinite):
        integrate_singular(spec)


def test_spec_validation():
    with pytest.raises(ValueError):
        IntegralSpec(integrand=lambda z: z, abs_tol=0.0)
    with pytest.raises(ValueError):
        IntegralSpec(integrand=lambda z: z, rel_tol=-1.0)
    with pytest.raises(ValueError):
        IntegralSpec(integrand=lambda z: z, budget=10)


def test_find_root_sqrt2():
    root = find_root(lambda x: x * x - 2.0, (1.0, 2.0), tol=1e-14)
    assert root == pytest.approx(np.sqrt(2.0), abs=1e-13)
    assert isinstance(root, float)


def test_find_root_linear_and_endpoints():
    assert find_root(lambda x: x - 0.25, (0.0, 1.0)) == pytest.approx(0.25, abs=1e-12)
    # exact zeros at the bracket ends are returned immediately
    assert find_root(lambda x: x, (0.0, 1.0)) == 0.0
    assert find_root(lambda x: x - 1.0, (0.0, 1.0)) == 1.0


def test_find_root_random_targets():
    rng = np.random.default_rng(7)
    for _ in range(20):
        r = rng.uniform(0.1, 0.9)
        k = rng.uniform(0.5, 4.0)
        root = find_root(lambda x: np.tanh(k * (x - r)), (0.0, 1.0), tol=1e-13)
        assert root == pytest.approx(r, abs=1e-12)


def test_find_root_flat_side():
    # false position stalls on this shape without the stall correction
    root = find_root(lambda x: x**9 - 0.5, (0.0, 1.0), tol=1e-13)
    assert root == pytest.approx(0.5 ** (1.0 / 9.0), abs=1e-12)


def test_find_root_bad_bracket():
    with pytest.raises(BadBracket):
        find_root(lambda x: x * x + 1.0, (-1.0, 1.0))


def test_find_root_validation():
    with pytest.raises(ValueError):
        find_root(lambda x: x, (1.0, 1.0))
    with pytest.raises(ValueError):
        find_root(lambda x: x, (0.0, 1.0), tol=0.0)


def test_find_root_non_finite():
    with pytest.raises(NonFinite):
        find_root(lambda x: np.nan, (0.0, 1.0))


def test_maximize_parabola():
    x, fx = maximize_unimodal(lambda t: -(t - 0.3) ** 2, (0.0, 1.0), tol=1e-12)
    assert x == pytest.approx(0.3, abs=1e-6)
    assert fx <= 0.0
    assert isinstance(x, float) and isinstance(fx, float)


def test_maximize_sine():
    x, fx = maximize_unimodal(np.sin, (0.0, np.pi), tol=1e-10)
    assert x == pytest.approx(np.pi / 2.0, abs=1e-4)
    assert fx == pytest.approx(1.0, abs=1e-9)


def test_maximize_endpoint_singular():
    # endpoints are never evaluated, so a singular bracket edge is fine
    f = lambda t: np.log(t) * (t - 1.0)
    x, fx = maximize_unimodal(f, (0.0, 1.0), tol=1e-10)
    assert 0.0 < x < 1.0
    assert fx > 0.0


def test_maximize_validation():
    with pytest.raises(ValueError):
        maximize_unimodal(lambda t: t, (1.0, 0.0))
