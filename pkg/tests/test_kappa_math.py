"""Curvature-labeled trigonometric kernels and their guarded limits."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvint import duals as dm
from curvint.duals import val
from curvint.errors import DomainError
from curvint.kappa import (ck_arcsin, ck_cos, ck_sin, ck_tan, expm1_over,
                           gudermann_r, sinhc)

finite = st.floats(-3.0, 3.0, allow_nan=False)
kappas = st.floats(-4.0, 4.0, allow_nan=False)


@given(x=finite, kappa=kappas)
@settings(max_examples=300, deadline=None)
def test_pythagorean_identity(x, kappa):
    c = val(ck_cos(x, kappa))
    s = val(ck_sin(x, kappa))
    assert abs(c * c + kappa * s * s - 1.0) < 1e-10 * max(1.0, abs(c), s * s)


@given(x=finite, kappa=kappas)
@settings(max_examples=200, deadline=None)
def test_tan_is_sin_over_cos(x, kappa):
    c = val(ck_cos(x, kappa))
    if abs(c) < 1e-3:
        return
    assert val(ck_tan(x, kappa)) == pytest.approx(
        val(ck_sin(x, kappa)) / c, rel=1e-12, abs=1e-12)


@given(x=st.floats(-0.9, 0.9), kappa=kappas)
@settings(max_examples=200, deadline=None)
def test_arcsin_inverts_sin(x, kappa):
    if kappa > 0 and math.sqrt(kappa) * abs(x) > 1.4:
        return  # outside the principal branch
    s = val(ck_sin(x, kappa))
    assert val(ck_arcsin(s, kappa)) == pytest.approx(x, rel=1e-9, abs=1e-9)


def test_flat_label_reduces_to_polynomials():
    for x in (-1.7, -0.2, 0.0, 0.4, 2.9):
        assert val(ck_sin(x, 0.0)) == pytest.approx(x, abs=1e-15)
        assert val(ck_cos(x, 0.0)) == pytest.approx(1.0, abs=1e-15)


def test_series_guard_matches_exact_formula():
    # inside the small-|kappa| series window the kernels still agree with
    # the exact trigonometric/hyperbolic expressions
    for x in (0.3, 1.1, 2.5):
        for k in (0.99e-4, -0.99e-4):
            lam = math.sqrt(abs(k))
            exact_s = (math.sin(lam * x) if k > 0 else
                       math.sinh(lam * x)) / lam
            exact_c = math.cos(lam * x) if k > 0 else math.cosh(lam * x)
            assert val(ck_sin(x, k)) == pytest.approx(exact_s, rel=1e-10)
            assert val(ck_cos(x, k)) == pytest.approx(exact_c, rel=1e-10)


@given(u=st.floats(-20.0, 20.0))
@settings(max_examples=200, deadline=None)
def test_sinhc_and_expm1_over(u, ):
    if abs(u) > 1e-3:
        assert val(sinhc(u)) == pytest.approx(math.sinh(u) / u, rel=1e-12)
        assert val(expm1_over(u)) == pytest.approx(math.expm1(u) / u,
                                                   rel=1e-12)
    else:
        assert val(sinhc(u)) == pytest.approx(1.0, abs=1e-3)
        assert val(expm1_over(u)) == pytest.approx(1.0, abs=1e-2)


@given(rho=st.floats(0.01, 1.2), z=st.floats(-1.5, 1.5))
@settings(max_examples=200, deadline=None)
def test_radial_reparametrization_identity(rho, z):
    # r(rho) satisfies sin_z(r) = sin_{-z}(rho)/cos_{-z}(rho)
    if z < 0 and math.sqrt(-z) * rho >= math.pi / 2 - 1e-3:
        return
    r = val(gudermann_r(z, rho))
    lhs = val(ck_sin(r, z))
    rhs = val(ck_sin(rho, -z)) / val(ck_cos(rho, -z))
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


def test_radial_reparametrization_domain():
    with pytest.raises(DomainError):
        gudermann_r(-1.0, math.pi / 2 + 0.1)


def test_kernels_propagate_derivatives():
    # forward-mode derivative of ck_sin matches the analytic ck_cos
    for x, k in ((0.7, 1.0), (0.7, -1.0), (0.7, 0.0), (1.1, 0.3)):
        d = ck_sin(dm.seed(x)[0], k)
        assert d.d[0] == pytest.approx(val(ck_cos(x, k)), rel=1e-12)
