"""Deformed sl(2) generators, Casimir, and the two-site coproduct."""

import math
import random

import pytest

from curvint import (CartesianState, DeformedModel, bracket,
                     casimir_from_generators, casimir_observable,
                     coproduct_join, one_site_generators,
                     two_site_generators)
from curvint.coalgebra import algebra_residuals


def rand_state(rng):
    q = lambda: rng.choice((-1, 1)) * rng.uniform(0.2, 1.2)
    p = lambda: rng.uniform(-2, 2)
    return CartesianState(q(), q(), p(), p())


@pytest.mark.parametrize("z", [-0.8, -1e-5, 1e-5, 0.9])
def test_one_site_brackets(z):
    rng = random.Random(1)
    gens = one_site_generators(z, 0.6, 1)
    for _ in range(20):
        x = rand_state(rng)
        jm = gens.j_minus.eval(x)
        jp = gens.j_plus.eval(x)
        j3 = gens.j_3.eval(x)
        assert bracket(gens.j_3, gens.j_plus, x) == pytest.approx(
            2.0 * jp * math.cosh(z * jm), rel=1e-10, abs=1e-10)
        sinhc = math.sinh(z * jm) / (z * jm) if abs(z * jm) > 1e-8 else 1.0
        assert bracket(gens.j_3, gens.j_minus, x) == pytest.approx(
            -2.0 * jm * sinhc, rel=1e-10, abs=1e-10)
        assert bracket(gens.j_minus, gens.j_plus, x) == pytest.approx(
            4.0 * j3, rel=1e-10, abs=1e-10)


@pytest.mark.parametrize("z", [-0.7, 0.0, 0.7])
def test_two_site_residuals_including_flat_label(z):
    rng = random.Random(2)
    model = DeformedModel(z, 0.5, 1.5)
    for _ in range(25):
        r = algebra_residuals(model, rand_state(rng))
        assert max(abs(v) for v in r[:4]) < 1e-9
        assert r[4] < 1e-6  # finite-difference gradient support


def test_casimir_is_conserved_quantity_of_both_routes():
    rng = random.Random(3)
    model = DeformedModel(0.45, 1.0, 2.0)
    explicit = casimir_observable(model)
    abstract = casimir_from_generators(two_site_generators(model), model.z)
    for _ in range(30):
        x = rand_state(rng)
        assert explicit.eval(x) == pytest.approx(abstract.eval(x),
                                                 rel=1e-12, abs=1e-12)


def test_coproduct_reproduces_two_site():
    rng = random.Random(4)
    z = -0.35
    model = DeformedModel(z, 0.8, 1.1)
    two = two_site_generators(model)
    joined = coproduct_join(one_site_generators(z, 0.8, 1),
                            one_site_generators(z, 1.1, 2), z)
    for _ in range(30):
        x = rand_state(rng)
        for a, b in ((two.j_minus, joined.j_minus),
                     (two.j_plus, joined.j_plus), (two.j_3, joined.j_3)):
            assert a.eval(x) == pytest.approx(b.eval(x), rel=1e-12,
                                              abs=1e-12)


def test_flat_limit_generators():
    # z -> 0 recovers the undeformed realization
    rng = random.Random(5)
    model = DeformedModel(0.0, 0.4, 0.9)
    gens = two_site_generators(model)
    for _ in range(20):
        x = rand_state(rng)
        jm = x.q1 ** 2 + x.q2 ** 2
        jp = (x.p1 ** 2 + x.p2 ** 2 + 0.4 / x.q1 ** 2 + 0.9 / x.q2 ** 2)
        j3 = x.q1 * x.p1 + x.q2 * x.p2
        assert gens.j_minus.eval(x) == pytest.approx(jm, rel=1e-12)
        assert gens.j_plus.eval(x) == pytest.approx(jp, rel=1e-12)
        assert gens.j_3.eval(x) == pytest.approx(j3, rel=1e-12)
