"""Canonical states, exact-derivative observables and the Poisson bracket."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import duals as dm


@dataclass(frozen=True)
class CartesianState:
    """One point of the two-particle phase space (q1, q2, p1, p2)."""

    q1: float
    q2: float
    p1: float
    p2: float

    def as_tuple(self):
        return (self.q1, self.q2, self.p1, self.p2)


class Observable:
    """A smooth phase-space function with machine-exact first derivatives.

    Wraps a callable ``fn(q1, q2, p1, p2)`` written generically over
    ``float | Dual``; the gradient comes from one forward-mode pass, never
    from finite differences.  Observables are immutable and closed under
    sum, product, scalar multiple and composition with smooth scalar maps.
    """

    __slots__ = ("fn", "name")

    def __init__(self, fn: Callable, name: str = ""):
        self.fn = fn
        self.name = name

    def eval(self, x: CartesianState) -> float:
        return self.fn(x.q1, x.q2, x.p1, x.p2)

    def __call__(self, x: CartesianState) -> float:
        return self.eval(x)

    def grad(self, x: CartesianState):
        """(d/dq1, d/dq2, d/dp1, d/dp2) at x, exact."""
        q1, q2, p1, p2 = dm.seed(x.q1, x.q2, x.p1, x.p2)
        out = self.fn(q1, q2, p1, p2)
        if isinstance(out, dm.Dual):
            return out.d
        return (0.0, 0.0, 0.0, 0.0)

    def value_and_grad(self, x: CartesianState):
        q1, q2, p1, p2 = dm.seed(x.q1, x.q2, x.p1, x.p2)
        out = self.fn(q1, q2, p1, p2)
        if isinstance(out, dm.Dual):
            return out.val, out.d
        return float(out), (0.0, 0.0, 0.0, 0.0)

    # -- algebra ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Observable):
            f, g = self.fn, other.fn
            return Observable(lambda *a: f(*a) + g(*a))
        return Observable(lambda *a: self.fn(*a) + other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Observable):
            f, g = self.fn, other.fn
            return Observable(lambda *a: f(*a) - g(*a))
        return Observable(lambda *a: self.fn(*a) - other)

    def __mul__(self, other):
        if isinstance(other, Observable):
            f, g = self.fn, other.fn
            return Observable(lambda *a: f(*a) * g(*a))
        return Observable(lambda *a: self.fn(*a) * other)

    __rmul__ = __mul__

    def __neg__(self):
        return Observable(lambda *a: -self.fn(*a))

    def map(self, smooth: Callable, name: str = "") -> "Observable":
        """Compose with a dual-generic smooth scalar map."""
        f = self.fn
        return Observable(lambda *a: smooth(f(*a)), name or self.name)


def coordinate(i: int, name: str = "") -> Observable:
    """Observable returning the i-th phase-space coordinate (q1,q2,p1,p2)."""
    return Observable(lambda *a: a[i], name)


Q1, Q2, P1, P2 = (coordinate(i, n) for i, n in enumerate("q1 q2 p1 p2".split()))


def bracket(f: Observable, g: Observable, x: CartesianState) -> float:
    """Canonical Poisson bracket {f, g} at x."""
    df = f.grad(x)
    dg = g.grad(x)
    return (df[0] * dg[2] - dg[0] * df[2]) + (df[1] * dg[3] - dg[1] * df[3])


def gradient_selfcheck(f: Observable, x: CartesianState,
                       step: float = 1e-6) -> float:
    """Max abs deviation of the exact gradient from central differences.

    This is the one place finite differences are allowed: it gates every
    verification suite against a mis-derived observable.
    """
    exact = f.grad(x)
    vals = list(x.as_tuple())
    worst = 0.0
    for i in range(4):
        hi = vals.copy()
        lo = vals.copy()
        hi[i] += step
        lo[i] -= step
        num = (f.fn(*hi) - f.fn(*lo)) / (2.0 * step)
        err = abs(num - exact[i])
        if not math.isfinite(err):
            return math.inf
        worst = max(worst, err)
    return worst
