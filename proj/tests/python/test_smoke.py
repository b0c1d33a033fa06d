"""Smoke tests for the python bindings of the wdk extension module."""

import json
import math

import pytest

import wdk


def test_polynomial_basics():
    f = wdk.Polynomial([1, 0, -1])  # z^2 - 1
    assert f.degree == 2
    assert f(2.0) == 3.0
    assert f(1j) == -2.0
    g = f.derivative()
    assert g.degree == 1
    with pytest.raises(wdk.WdkError):
        wdk.Polynomial([0, 1])


def test_from_roots_and_gamma():
    f = wdk.from_roots([1, -1])
    assert f.coefficients == [1, 0, -1]
    assert wdk.separation([1, -1]) == 2.0
    assert wdk.smale_gamma(f, [1, -1]) == pytest.approx(0.5)


def test_correction_and_e_value():
    f = wdk.Polynomial([1, 0, -1])
    w = wdk.correction(f, [2, -2])
    assert w[0] == pytest.approx(0.75)
    assert w[1] == pytest.approx(-0.75)
    out, corr = wdk.weierstrass_step(f, [2, -2])
    assert out[0] == pytest.approx(1.25)
    assert wdk.e_semilocal(f, [2, -2]) == pytest.approx(0.1875)
    nxt = wdk.two_point_step(f, [2, -2], out)
    direct, _ = wdk.weierstrass_step(f, out)
    assert nxt == pytest.approx(direct)


def test_certification():
    f = wdk.Polynomial([1, 0, -1])
    cert = wdk.check_semilocal(f, [2, -2])
    assert cert.passed and cert.quadratic
    assert cert.e0 == pytest.approx(0.1875)
    assert cert.lambda_ == pytest.approx(0.48)
    disks = wdk.inclusion_disks(f, [2, -2])
    assert len(disks) == 2
    assert disks[0].radius == pytest.approx(0.75 / 0.7)


def test_solve_certified():
    f = wdk.Polynomial([1, 0, -1])
    report = wdk.solve(f, x0=[2, -2], tol=1e-12)
    assert report.status == "certified_converged"
    assert report.iterations <= 8
    roots = sorted(report.roots, key=lambda z: z.real)
    assert roots[0] == pytest.approx(-1)
    assert roots[1] == pytest.approx(1)
    assert report.disks is not None
    payload = json.loads(report.to_json())
    assert payload["status"] == "certified_converged"
    assert payload["degree"] == 2


def test_solve_default_guess():
    f = wdk.from_roots([2, -1, 1j])
    report = wdk.solve(f, tol=1e-10, max_iter=200)
    assert report.status in ("certified_converged", "converged_uncertified")
    got = sorted(report.roots, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    want = sorted([2, -1, 1j], key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    for g, w in zip(got, want):
        assert g == pytest.approx(w, abs=1e-8)


def test_radii():
    r = wdk.radii(2, "inf")
    assert r["local1"] == pytest.approx(1 / 3)
    assert r["local2"] == pytest.approx((math.sqrt(17) - 3) / 4)
    assert r["semilocal"] == pytest.approx(0.25)
    assert r["semilocal_simple_threshold"] == pytest.approx(0.25)


def test_local_checks():
    f = wdk.from_roots([1, -1])
    assert wdk.e_local1([2, -2], [1, -1]) == pytest.approx(0.5)
    assert wdk.e_local2([2, -2], [1, -1]) == pytest.approx(0.25)
    rep = wdk.check_local1(f, [1, -1], [1.05, -0.95], steps=10)
    assert rep.satisfied and rep.quadratic
    assert all(rep.per_step_ok)
    rep2 = wdk.check_local2(f, [1, -1], [1.1, -1.05], steps=10)
    assert rep2.satisfied
    assert all(rep2.per_step_ok)


def test_lagrange_residual_and_local3():
    f = wdk.Polynomial([1, 0, -1])
    assert abs(wdk.lagrange_residual(f, [2, -2], 0.5)) < 1e-12
    assert wdk.sigma_feasible(0.5, 10, "inf", "quadratic")
    assert not wdk.sigma_feasible(0.5, 10, "inf", "rational")
    import cmath

    roots = [2 * cmath.exp(2j * cmath.pi * k / 10) for k in range(10)]
    g = wdk.from_roots(roots)
    x0 = [r + 0.002 for r in roots]
    rep = wdk.check_local3(g, roots, x0, sigma=0.5, steps=10)
    assert rep.satisfied
    assert all(rep.per_step_ok)
