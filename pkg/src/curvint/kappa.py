"""Curvature-labelled trigonometry in real arithmetic.

Every formula in the library that nominally involves a real-or-imaginary
contraction parameter lambda is expressed through these kernels in terms of
the real label ``kappa = lambda**2``:

    ck_cos(x, kappa) = cos(sqrt(kappa) x)          kappa > 0
                       1                           kappa = 0
                       cosh(sqrt(-kappa) x)        kappa < 0

and ``ck_sin`` is the matching ``sin(sqrt(kappa) x)/sqrt(kappa)`` kernel.
Removable singularities at ``kappa -> 0`` (and in ``sinhc``, ``expm1_over``)
are filled with truncated series inside a guard band, so a single code path
covers spherical, flat and hyperbolic labels, including the z -> 0 classical
limit.  All kernels accept ``float | Dual`` in the ``x`` slot.
"""

from __future__ import annotations

import math

from . import duals as dm
from .duals import val
from .errors import DomainError

# series guard on |kappa x^2| (resp. |u|); truncation error < 1e-20 there
SERIES_GUARD = 1e-4


def ck_cos(x, kappa: float):
    """cos-type kernel: d/dx ck_sin, equal to 1 at kappa = 0."""
    u = kappa * x * x
    if abs(val(u)) < SERIES_GUARD:
        return 1.0 + u * (-0.5 + u * (1.0 / 24.0 + u * (-1.0 / 720.0)))
    if kappa > 0.0:
        return dm.cos(math.sqrt(kappa) * x)
    return dm.cosh(math.sqrt(-kappa) * x)


def ck_sin(x, kappa: float):
    """sin-type kernel sin(sqrt(kappa) x)/sqrt(kappa), equal to x at kappa = 0."""
    u = kappa * x * x
    if abs(val(u)) < SERIES_GUARD:
        return x * (1.0 + u * (-1.0 / 6.0 + u * (1.0 / 120.0 + u * (-1.0 / 5040.0))))
    if kappa > 0.0:
        rk = math.sqrt(kappa)
        return dm.sin(rk * x) / rk
    rk = math.sqrt(-kappa)
    return dm.sinh(rk * x) / rk


def ck_tan(x, kappa: float):
    """tan-type kernel ck_sin/ck_cos."""
    return ck_sin(x, kappa) / ck_cos(x, kappa)


def ck_arcsin(s, kappa: float):
    """Inverse of ck_sin on the principal branch."""
    u = kappa * s * s
    if abs(val(u)) < SERIES_GUARD:
        return s * (1.0 + u * (1.0 / 6.0 + u * (3.0 / 40.0)))
    if kappa > 0.0:
        rk = math.sqrt(kappa)
        arg = rk * s
        if abs(val(arg)) > 1.0:
            raise DomainError(f"ck_arcsin: |sqrt(kappa) s| = {abs(val(arg))} > 1")
        return dm.asin(arg) / rk
    rk = math.sqrt(-kappa)
    return dm.asinh(rk * s) / rk


def sinhc(u):
    """sinh(u)/u with the removable singularity filled by series."""
    if abs(val(u)) < SERIES_GUARD:
        u2 = u * u
        return 1.0 + u2 * (1.0 / 6.0 + u2 * (1.0 / 120.0))
    return dm.sinh(u) / u


def expm1_over(u):
    """(exp(u) - 1)/u with the removable singularity filled by series."""
    if abs(val(u)) < SERIES_GUARD:
        return 1.0 + u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0)))
    return dm.expm1(u) / u


def gudermann_r(z: float, rho):
    """Radial reparametrization r(rho) = integral_0^rho dx / ck_cos(x, -z).

    Strictly increasing in rho; the flat label z = 0 is the identity.  For
    z < 0 the integrand has a pole, so |sqrt(-z) rho| < pi/2 is required.
    """
    rv = val(rho)
    if z > 0.0:
        lam = math.sqrt(z)
        return (2.0 / lam) * dm.atan(dm.tanh(lam * rho / 2.0))
    if z < 0.0:
        lam = math.sqrt(-z)
        if abs(lam * rv) >= math.pi / 2.0:
            raise DomainError(
                f"gudermann_r: |sqrt(-z) rho| = {abs(lam * rv)} >= pi/2")
        return (2.0 / lam) * dm.atanh(dm.tan(lam * rho / 2.0))
    return rho
