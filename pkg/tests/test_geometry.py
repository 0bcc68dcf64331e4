"""Metrics, curvature, polar charts, and the canonical chart transform."""

import math
import random

import pytest

from curvint import (CartesianState, CKSignature, DeformedModel,
                     ambient_embed, brioschi_oracle, cartesian_metric,
                     cartesian_to_polar, gaussian_curvature, polar_chart,
                     signature)
from curvint.errors import ChartDomainError
from curvint.geometry import (CONSTANT, NONCONSTANT, R_CHART, RHO_CHART,
                              polar_map)
from curvint.kappa import ck_cos, ck_sin
from curvint.duals import val
from curvint.phase_space import Observable, bracket


def rand_state(rng):
    q = lambda: rng.choice((-1, 1)) * rng.uniform(0.2, 1.2)
    p = lambda: rng.uniform(-2, 2)
    return CartesianState(q(), q(), p(), p())


@pytest.mark.parametrize("z", [-1.0, -0.3, 0.5, 1.0])
def test_constant_family_curvature_equals_label(z):
    rng = random.Random(0)
    model = DeformedModel(z)
    for _ in range(10):
        x = rand_state(rng)
        assert gaussian_curvature(model, CONSTANT, x.q1, x.q2) == \
            pytest.approx(z, abs=1e-12)


@pytest.mark.parametrize("family", [NONCONSTANT, CONSTANT])
def test_curvature_against_finite_difference_oracle(family):
    rng = random.Random(1)
    for z in (-0.8, 0.6):
        model = DeformedModel(z)
        for _ in range(10):
            x = rand_state(rng)

            def metric_field(u, v):
                g11, g22 = cartesian_metric(model, family, u, v)
                return ((g11, 0.0), (0.0, g22))

            closed = gaussian_curvature(model, family, x.q1, x.q2)
            assert abs(brioschi_oracle(metric_field, x.q1, x.q2)
                       - closed) < 1e-5


def test_polar_chart_sectional_curvatures():
    for tag in ("S2", "AdS", "E2", "M2", "H2", "dS"):
        sig = signature(tag)
        ch = polar_chart(sig, R_CHART, 0.8, 0.5)
        assert ch.sectional == pytest.approx(sig.kappa1, abs=1e-12)
    # deformed chart: curvature depends on the radius only
    for z in (-0.7, 0.7):
        sig = CKSignature(z, 1.0)
        k1 = polar_chart(sig, RHO_CHART, 0.9, 0.2).sectional
        k2 = polar_chart(sig, RHO_CHART, 0.9, 1.1).sectional
        assert k1 == pytest.approx(k2, rel=1e-12)
        lam = math.sqrt(abs(z))
        s = math.sin(lam * 0.9) if z < 0 else math.sinh(lam * 0.9)
        c = math.cos(lam * 0.9) if z < 0 else math.cosh(lam * 0.9)
        assert k1 == pytest.approx(-abs(z) * s * s / (2 * c), rel=1e-12)


def test_chart_domain_guards():
    with pytest.raises(ChartDomainError):
        polar_chart(CKSignature(-1.0, 1.0), RHO_CHART, math.pi / 2 + 0.1, 0.0)
    with pytest.raises(ChartDomainError):
        polar_chart(signature("S2"), R_CHART, math.pi + 0.1, 0.0)
    with pytest.raises(ChartDomainError):
        cartesian_to_polar(DeformedModel(0.4), CKSignature(0.4, -1.0),
                           CartesianState(0.6, 0.8, 0.1, 0.2), RHO_CHART)


def test_polar_transform_bracket_normalization():
    # the chart variables close a rescaled canonical algebra:
    # {radial, p_radial} = {theta, p_theta} = 2, all cross-brackets vanish
    rng = random.Random(2)
    for z, chart in ((-0.5, RHO_CHART), (0.4, RHO_CHART), (0.4, R_CHART)):
        model = DeformedModel(z, 0.7, 1.3)
        sig = CKSignature(z, 1.0)
        fn = polar_map(model, sig, chart)
        obs = [Observable(lambda *a, i=i: fn(*a)[i]) for i in range(4)]
        x = rand_state(rng)
        assert bracket(obs[0], obs[2], x) == pytest.approx(2.0, rel=1e-8)
        assert bracket(obs[1], obs[3], x) == pytest.approx(2.0, rel=1e-8)
        for i, j in ((0, 1), (0, 3), (1, 2), (2, 3)):
            assert bracket(obs[i], obs[j], x) == pytest.approx(0.0, abs=1e-8)


def test_ambient_embed_on_unit_quadric():
    for tag in ("S2", "AdS", "dS", "H2"):
        sig = signature(tag)
        amb = ambient_embed(sig, 0.7, 0.4)
        k1, k2 = sig.kappa1, sig.kappa2
        quad = (amb.point.x0 ** 2 + k1 * amb.point.x1 ** 2
                + k1 * k2 * amb.point.x2 ** 2)
        assert quad == pytest.approx(1.0, abs=1e-12)
    amb = ambient_embed(signature("S2"), 0.7, 0.4)
    assert math.cos(amb.r1) == pytest.approx(
        math.sin(0.7) * math.cos(0.4), abs=1e-14)
    assert math.cos(amb.r2) == pytest.approx(
        math.sin(0.7) * math.sin(0.4), abs=1e-14)


def test_flat_chart_centers_are_absent():
    amb = ambient_embed(signature("E2"), 0.7, 0.4)
    assert amb.r1 is None and amb.r2 is None
