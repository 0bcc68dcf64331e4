"""First-order forward-mode dual numbers and the scalar maps built on them.

Every phase-space function in the library is written once, generically over
``float | Dual``.  Evaluating on floats gives the value; evaluating on seeded
duals gives the exact gradient, which is what the Poisson-bracket engine and
the flow integrators consume.  Finite differences are reserved for the
independent self-check oracles.
"""

from __future__ import annotations

import math

__all__ = [
    "Dual", "val", "seed",
    "exp", "expm1", "log", "sqrt",
    "sin", "cos", "tan", "asin", "acos", "atan", "atan2",
    "sinh", "cosh", "tanh", "asinh", "acosh", "atanh",
]


class Dual:
    """A number ``a + sum_i d_i eps_i`` carrying first partial derivatives."""

    __slots__ = ("val", "d")

    def __init__(self, val, d):
        self.val = val
        self.d = d  # tuple of partials

    def __repr__(self):
        return f"Dual({self.val!r}, {self.d!r})"

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val,
                        tuple(a + b for a, b in zip(self.d, other.d)))
        return Dual(self.val + other, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val,
                        tuple(a - b for a, b in zip(self.d, other.d)))
        return Dual(self.val - other, self.d)

    def __rsub__(self, other):
        return Dual(other - self.val, tuple(-a for a in self.d))

    def __neg__(self):
        return Dual(-self.val, tuple(-a for a in self.d))

    def __mul__(self, other):
        if isinstance(other, Dual):
            u, v = self.val, other.val
            return Dual(u * v,
                        tuple(a * v + u * b for a, b in zip(self.d, other.d)))
        return Dual(self.val * other, tuple(a * other for a in self.d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            u, v = self.val, other.val
            inv2 = 1.0 / (v * v)
            return Dual(u / v,
                        tuple((a * v - u * b) * inv2
                              for a, b in zip(self.d, other.d)))
        inv = 1.0 / other
        return Dual(self.val * inv, tuple(a * inv for a in self.d))

    def __rtruediv__(self, other):
        v = self.val
        c = -other / (v * v)
        return Dual(other / v, tuple(c * a for a in self.d))

    def __pow__(self, n):
        if isinstance(n, int):
            c = n * self.val ** (n - 1)
            return Dual(self.val ** n, tuple(c * a for a in self.d))
        c = n * self.val ** (n - 1.0)
        return Dual(self.val ** n, tuple(c * a for a in self.d))


def val(x):
    """Value part of a float or Dual."""
    return x.val if isinstance(x, Dual) else x


def seed(*values):
    """Duals for the given values with unit seeds, one slot per argument."""
    n = len(values)
    out = []
    for i, v in enumerate(values):
        d = tuple(1.0 if j == i else 0.0 for j in range(n))
        out.append(Dual(float(v), d))
    return out


def _lift(x, f, df):
    if isinstance(x, Dual):
        c = df(x.val)
        return Dual(f(x.val), tuple(c * a for a in x.d))
    return f(x)


def exp(x):
    return _lift(x, math.exp, math.exp)


def expm1(x):
    return _lift(x, math.expm1, math.exp)


def log(x):
    return _lift(x, math.log, lambda v: 1.0 / v)


def sqrt(x):
    return _lift(x, math.sqrt, lambda v: 0.5 / math.sqrt(v))


def sin(x):
    return _lift(x, math.sin, math.cos)


def cos(x):
    return _lift(x, math.cos, lambda v: -math.sin(v))


def tan(x):
    return _lift(x, math.tan, lambda v: 1.0 + math.tan(v) ** 2)


def asin(x):
    return _lift(x, math.asin, lambda v: 1.0 / math.sqrt(1.0 - v * v))


def acos(x):
    return _lift(x, math.acos, lambda v: -1.0 / math.sqrt(1.0 - v * v))


def atan(x):
    return _lift(x, math.atan, lambda v: 1.0 / (1.0 + v * v))


def sinh(x):
    return _lift(x, math.sinh, math.cosh)


def cosh(x):
    return _lift(x, math.cosh, math.sinh)


def tanh(x):
    return _lift(x, math.tanh, lambda v: 1.0 / math.cosh(v) ** 2)


def asinh(x):
    return _lift(x, math.asinh, lambda v: 1.0 / math.sqrt(v * v + 1.0))


def acosh(x):
    return _lift(x, math.acosh, lambda v: 1.0 / math.sqrt(v * v - 1.0))


def atanh(x):
    return _lift(x, math.atanh, lambda v: 1.0 / (1.0 - v * v))


def atan2(y, x):
    yv, xv = val(y), val(x)
    base = math.atan2(yv, xv)
    if not (isinstance(y, Dual) or isinstance(x, Dual)):
        return base
    r2 = xv * xv + yv * yv
    dy = y.d if isinstance(y, Dual) else None
    dx = x.d if isinstance(x, Dual) else None
    n = len(dy) if dy is not None else len(dx)
    d = []
    for i in range(n):
        a = dy[i] if dy is not None else 0.0
        b = dx[i] if dx is not None else 0.0
        d.append((xv * a - yv * b) / r2)
    return Dual(base, tuple(d))
