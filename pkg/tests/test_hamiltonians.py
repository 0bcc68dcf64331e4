"""Hamiltonian catalog: specs, integrals, chart forms, decompositions."""

import math
import random

import pytest

from curvint import (CartesianState, CKSignature, DeformedModel,
                     HamiltonianSpec, b_to_beta, beta_to_b, bracket, build,
                     cartesian_to_polar, custom_split, cz_polar, iz_polar,
                     polar_form, radial_reduce, signature, sw_decompose)
from curvint import duals as dm
from curvint.errors import InvalidSpec, VariantUnavailable
from curvint.geometry import R_CHART, RHO_CHART


def rand_state(rng):
    q = lambda: rng.choice((-1, 1)) * rng.uniform(0.2, 1.2)
    p = lambda: rng.uniform(-2, 2)
    return CartesianState(q(), q(), p(), p())


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        HamiltonianSpec("NoSuchKind")
    with pytest.raises(InvalidSpec):
        # custom kinetic profile must tend to 1 at the flat point
        HamiltonianSpec("Custom", custom_f=lambda u: 2.0 + u,
                        custom_U=lambda u: 0.0)
    ok = HamiltonianSpec("Custom", custom_f=dm.exp, custom_U=lambda u: u)
    assert ok.kind == "Custom"


def test_beta_aliasing_roundtrip():
    beta1, beta2 = b_to_beta(0.7, 1.3)
    assert (beta1, beta2) == (2.6, 1.4)
    assert beta_to_b(beta1, beta2) == (0.7, 1.3)


@pytest.mark.parametrize("kind,kw", [
    ("FreeI", {}), ("FreeS", {}), ("ISW", {"beta0": 1.0}),
    ("IKC", {"gamma": 0.8}), ("SSW", {"beta0": 1.0}),
])
def test_casimir_in_involution_with_h(kind, kw):
    rng = random.Random(0)
    model = DeformedModel(0.35, 0.7, 1.3)
    iset = build(model, HamiltonianSpec(kind, **kw))
    for _ in range(15):
        x = rand_state(rng)
        assert abs(bracket(iset.h, iset.c_z, x)) < 1e-9


def test_superintegrable_extra_integral():
    rng = random.Random(1)
    model = DeformedModel(-0.4, 0.7, 1.3)
    iset = build(model, HamiltonianSpec("SSW", beta0=0.9))
    assert iset.i_z is not None
    for _ in range(15):
        x = rand_state(rng)
        assert abs(bracket(iset.h, iset.i_z, x)) < 1e-9
        assert abs(bracket(iset.h, iset.c_z, x)) < 1e-9
    # non-superintegrable kinds expose no extra integral
    assert build(model, HamiltonianSpec("ISW", beta0=0.9)).i_z is None


def test_two_path_chart_equality():
    rng = random.Random(2)
    z = 0.45
    model = DeformedModel(z, 0.7, 1.3)
    sig = CKSignature(z, 1.0)
    cases = [("FreeI", {}, RHO_CHART), ("ISW", {"beta0": 0.8}, RHO_CHART),
             ("IKC", {"gamma": 0.6}, RHO_CHART),
             ("FreeS", {}, R_CHART), ("SSW", {"beta0": 0.8}, R_CHART)]
    for kind, kw, chart in cases:
        spec = HamiltonianSpec(kind, **kw)
        iset = build(model, spec)
        for _ in range(10):
            x = rand_state(rng)
            ps = cartesian_to_polar(model, sig, x, chart)
            assert polar_form(model, sig, spec, ps) == pytest.approx(
                2.0 * iset.h.eval(x), rel=1e-10, abs=1e-10)


def test_extra_integral_chart_form():
    rng = random.Random(3)
    z = -0.3
    model = DeformedModel(z, 0.7, 1.3)
    sig = CKSignature(z, 1.0)
    spec = HamiltonianSpec("SSW", beta0=0.9)
    iset = build(model, spec)
    for _ in range(10):
        x = rand_state(rng)
        ps = cartesian_to_polar(model, sig, x, R_CHART)
        lhs = iz_polar(sig, ps, spec.beta0, iset.beta2)
        rhs = 4.0 * (iset.i_z.eval(x) - z * model.b1)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


def test_radial_reduction_matches_full_form():
    z = 0.5
    model = DeformedModel(z, 0.7, 1.3)
    sig = CKSignature(z, 1.0)
    spec = HamiltonianSpec("SSW", beta0=0.9)
    rng = random.Random(4)
    for _ in range(10):
        x = rand_state(rng)
        ps = cartesian_to_polar(model, sig, x, R_CHART)
        c_val = cz_polar(sig, ps.theta, ps.p_theta, model.b1, model.b2)
        reduced = radial_reduce(model, sig, spec, c_val, ps.radial,
                                ps.p_radial)
        assert reduced == pytest.approx(polar_form(model, sig, spec, ps),
                                        rel=1e-10, abs=1e-10)


def test_custom_split_matches_build():
    rng = random.Random(5)
    model = DeformedModel(0.4, 0.7, 1.3)
    spec = HamiltonianSpec("Custom", custom_f=dm.cosh,
                           custom_U=lambda u: u * u)
    iset = build(model, spec)
    for _ in range(10):
        x = rand_state(rng)
        kin, pot = custom_split(model, spec, x)
        assert kin + pot == pytest.approx(iset.h.eval(x), rel=1e-10)


def test_sw_decomposition_variants():
    d = sw_decompose(signature("S2"), 0.7, 0.5, 1.0, 0.8, 1.2)
    assert d.center_terms is not None
    assert d.total == pytest.approx(d.center_total, abs=1e-12)
    d = sw_decompose(signature("AdS"), 0.4, 0.3, 1.0, 0.8, 1.2)
    assert d.total == pytest.approx(d.center_total, abs=1e-12)
    d = sw_decompose(signature("H2"), 0.7, 0.5, 1.0, 0.8, 1.2)
    with pytest.raises(VariantUnavailable):
        d.center_total


def test_classical_limit_of_catalog():
    x = CartesianState(0.6, -0.8, 0.5, 1.1)
    b1, b2 = 0.7, 1.3
    flat = (0.5 * (x.p1 ** 2 + x.p2 ** 2) + 0.5 * b1 / x.q1 ** 2
            + 0.5 * b2 / x.q2 ** 2)
    jm = x.q1 ** 2 + x.q2 ** 2
    spec = HamiltonianSpec("ISW", beta0=0.9)
    ref = flat + 0.9 * jm
    err_big = abs(build(DeformedModel(1e-4, b1, b2), spec).h.eval(x) - ref)
    err_small = abs(build(DeformedModel(5e-5, b1, b2), spec).h.eval(x) - ref)
    assert 1.8 <= err_big / err_small <= 2.2
