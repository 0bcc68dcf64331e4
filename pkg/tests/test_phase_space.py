"""Canonical bracket, observables, and gradient self-checks."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvint import CartesianState, Observable, bracket, gradient_selfcheck
from curvint.phase_space import coordinate

coords = st.floats(-2.0, 2.0, allow_nan=False)


def states():
    return st.builds(CartesianState, coords, coords, coords, coords)


@given(x=states())
@settings(max_examples=100, deadline=None)
def test_fundamental_brackets(x):
    q1, q2, p1, p2 = (coordinate(i) for i in range(4))
    assert bracket(q1, p1, x) == pytest.approx(1.0, abs=1e-14)
    assert bracket(q2, p2, x) == pytest.approx(1.0, abs=1e-14)
    assert bracket(q1, p2, x) == pytest.approx(0.0, abs=1e-14)
    assert bracket(q1, q2, x) == pytest.approx(0.0, abs=1e-14)
    assert bracket(p1, p2, x) == pytest.approx(0.0, abs=1e-14)


@given(x=states())
@settings(max_examples=100, deadline=None)
def test_bracket_antisymmetry(x):
    f = Observable(lambda q1, q2, p1, p2: q1 * p2 + q2 * q2 * p1)
    g = Observable(lambda q1, q2, p1, p2: p1 * p1 + q1 * q2)
    assert bracket(f, g, x) == pytest.approx(-bracket(g, f, x), abs=1e-12)


@given(x=states())
@settings(max_examples=50, deadline=None)
def test_bracket_leibniz_rule(x):
    f = Observable(lambda q1, q2, p1, p2: q1 * p1)
    g = Observable(lambda q1, q2, p1, p2: q2 + p2 * p2)
    h = Observable(lambda q1, q2, p1, p2: q1 * q2 + p1)
    gh = Observable(lambda *a: g.fn(*a) * h.fn(*a))
    lhs = bracket(f, gh, x)
    rhs = bracket(f, g, x) * h.eval(x) + g.eval(x) * bracket(f, h, x)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


def test_value_and_grad_consistency():
    f = Observable(lambda q1, q2, p1, p2: q1 * q1 * p2 + math.e ** 0 * q2)
    x = CartesianState(0.3, -0.7, 1.1, 0.4)
    v, g = f.value_and_grad(x)
    assert v == pytest.approx(f.eval(x))
    assert g == pytest.approx(f.grad(x))


def test_gradient_selfcheck_on_transcendental():
    import curvint.duals as dm
    f = Observable(lambda q1, q2, p1, p2: dm.exp(q1 * p1) + dm.sin(q2) * p2)
    rng = random.Random(0)
    for _ in range(20):
        x = CartesianState(*(rng.uniform(-1.5, 1.5) for _ in range(4)))
        assert gradient_selfcheck(f, x) < 1e-6
