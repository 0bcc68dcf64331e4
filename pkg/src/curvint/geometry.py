"""Metrics, curvature, coordinate charts and ambient embeddings.

Two chart families coexist and are never unified:

* ``RhoChart`` -- polar chart of the non-constant-curvature family.  The
  label carried by a signature is the deformation parameter z itself and
  the metric kernels use kappa = -z.
* ``RChart``   -- geodesic polar chart of the constant-curvature family,
  labelled directly by the curvature kappa1 = z.

The single bridge between the two conventions is the radial
reparametrization ``gudermann_r``; the sign flip kappa1 = -z(deformed) is
asserted by the test suite, not hidden in the charts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import duals as dm
from .duals import val
from .coalgebra import DeformedModel
from .errors import ChartDomainError, SingularPoint
from .kappa import ck_arcsin, ck_cos, ck_sin, expm1_over, gudermann_r

RHO_CHART = "rho"
R_CHART = "r"

NONCONSTANT = "nonconstant"
CONSTANT = "constant"

# deformed family: tag -> (z, kappa2); chart label is z itself
DEFORMED_TAGS = {
    "S2z": (-1.0, 1.0),
    "AdSz": (-1.0, -1.0),
    "H2z": (1.0, 1.0),
    "dSz": (1.0, -1.0),
}
# constant-curvature family: tag -> (kappa1, kappa2)
CK_TAGS = {
    "S2": (1.0, 1.0),
    "AdS": (1.0, -1.0),
    "H2": (-1.0, 1.0),
    "dS": (-1.0, -1.0),
    "E2": (0.0, 1.0),
    "M2": (0.0, -1.0),
}


@dataclass(frozen=True)
class CKSignature:
    """(kappa1, kappa2) labels of a target space.

    ``kappa1`` follows the convention of whichever chart family the
    signature is used with; ``kappa2`` is the metric-signature label and
    must be +-1 for named spaces.
    """

    kappa1: float
    kappa2: float
    tag: Optional[str] = None


def signature(tag: str) -> CKSignature:
    """Signature for a named space tag (deformed or constant-curvature)."""
    if tag in DEFORMED_TAGS:
        k1, k2 = DEFORMED_TAGS[tag]
    elif tag in CK_TAGS:
        k1, k2 = CK_TAGS[tag]
    else:
        raise ValueError(f"unknown space tag {tag!r}")
    return CKSignature(k1, k2, tag)


@dataclass(frozen=True)
class PolarState:
    """Point of the polar phase space (radial, theta, p_radial, p_theta)."""

    radial: float
    theta: float
    p_radial: float = 0.0
    p_theta: float = 0.0


@dataclass(frozen=True)
class MetricChart:
    """Diagonal metric, connection and curvature data at one chart point."""

    g_rr: float
    g_thth: float
    gamma_rad_radrad: float   # Gamma^rad_{rad rad} (zero on the r-chart)
    gamma_ang_angrad: float   # Gamma^theta_{theta rad}
    gamma_rad_angang: float   # Gamma^rad_{theta theta}
    ricci_radrad: float       # = R^theta_{rad theta rad}
    ricci_angang: float       # = R^rad_{theta rad theta}
    sectional: float


@dataclass(frozen=True)
class AmbientPoint:
    """Linear ambient coordinates satisfying x0^2 + k1(x1^2 + k2 x2^2) = 1."""

    x0: float
    x1: float
    x2: float


@dataclass(frozen=True)
class AmbientData:
    point: AmbientPoint
    x: float                  # parallel coordinate along l1
    y: float                  # parallel coordinate along l2
    r1: Optional[float] = None  # distance to the oscillator center O1
    r2: Optional[float] = None  # distance to the oscillator center O2


# ---------------------------------------------------------------------------
# Cartesian metrics and curvature
# ---------------------------------------------------------------------------

def cartesian_metric(model: DeformedModel, family: str, q1: float, q2: float):
    """Diagonal components (g11, g22) of the kinetic-energy metric."""
    from .kappa import sinhc

    z = model.z
    u1, u2 = q1 * q1, q2 * q2
    if family == NONCONSTANT:
        g11 = 2.0 * dm.exp(-z * u2) / sinhc(z * u1)
        g22 = 2.0 * dm.exp(z * u1) / sinhc(z * u2)
    elif family == CONSTANT:
        g11 = 2.0 * dm.exp(-z * u1) * dm.exp(-2.0 * z * u2) / sinhc(z * u1)
        g22 = 2.0 * dm.exp(-z * u2) / sinhc(z * u2)
    else:
        raise ValueError(f"unknown metric family {family!r}")
    return g11, g22


def gaussian_curvature(model: DeformedModel, family: str,
                       q1: float, q2: float) -> float:
    """Closed-form Gaussian curvature of either Cartesian metric family."""
    from .kappa import sinhc

    z = model.z
    if family == NONCONSTANT:
        jm = q1 * q1 + q2 * q2
        return -z * z * jm * sinhc(z * jm)
    if family == CONSTANT:
        return z
    raise ValueError(f"unknown metric family {family!r}")


def brioschi_oracle(metric_field: Callable, q1: float, q2: float,
                    step: float = 1e-4) -> float:
    """Gaussian curvature by the Brioschi formula with central differences.

    ``metric_field(u, v)`` must return a 2x2 metric; this estimator is
    independent of every closed-form curvature expression in the library.
    """
    h = step

    def comps(u, v):
        g = np.asarray(metric_field(u, v), dtype=float)
        return g[0, 0], g[0, 1], g[1, 1]

    E, F, G = comps(q1, q2)
    E_u = (comps(q1 + h, q2)[0] - comps(q1 - h, q2)[0]) / (2 * h)
    E_v = (comps(q1, q2 + h)[0] - comps(q1, q2 - h)[0]) / (2 * h)
    F_u = (comps(q1 + h, q2)[1] - comps(q1 - h, q2)[1]) / (2 * h)
    F_v = (comps(q1, q2 + h)[1] - comps(q1, q2 - h)[1]) / (2 * h)
    G_u = (comps(q1 + h, q2)[2] - comps(q1 - h, q2)[2]) / (2 * h)
    G_v = (comps(q1, q2 + h)[2] - comps(q1, q2 - h)[2]) / (2 * h)
    E_vv = (comps(q1, q2 + h)[0] - 2 * E + comps(q1, q2 - h)[0]) / h**2
    G_uu = (comps(q1 + h, q2)[2] - 2 * G + comps(q1 - h, q2)[2]) / h**2
    F_uv = (comps(q1 + h, q2 + h)[1] - comps(q1 + h, q2 - h)[1]
            - comps(q1 - h, q2 + h)[1] + comps(q1 - h, q2 - h)[1]) / (4 * h**2)

    m1 = np.array([
        [-0.5 * E_vv + F_uv - 0.5 * G_uu, 0.5 * E_u, F_u - 0.5 * E_v],
        [F_v - 0.5 * G_u, E, F],
        [0.5 * G_v, F, G],
    ])
    m2 = np.array([
        [0.0, 0.5 * E_v, 0.5 * G_u],
        [0.5 * E_v, E, F],
        [0.5 * G_u, F, G],
    ])
    den = (E * G - F * F) ** 2
    return float((np.linalg.det(m1) - np.linalg.det(m2)) / den)


# ---------------------------------------------------------------------------
# Polar charts
# ---------------------------------------------------------------------------

def _check_rho_domain(z: float, rho: float):
    if rho <= 0.0:
        raise ChartDomainError(f"rho = {rho} must be > 0")
    if z < 0.0 and math.sqrt(-z) * rho >= math.pi / 2.0:
        raise ChartDomainError(
            f"rho chart requires sqrt(-z)*rho < pi/2, got {math.sqrt(-z) * rho}")


def _check_r_domain(kappa1: float, r: float):
    if r <= 0.0:
        raise ChartDomainError(f"r = {r} must be > 0")
    if kappa1 > 0.0 and math.sqrt(kappa1) * r >= math.pi:
        raise ChartDomainError(
            f"r chart requires sqrt(kappa1)*r < pi, got {math.sqrt(kappa1) * r}")


def polar_chart(sig: CKSignature, chart: str, radial: float,
                theta: float) -> MetricChart:
    """Metric, connection and curvature tensors at one polar chart point."""
    k2 = sig.kappa2
    if chart == RHO_CHART:
        z = sig.kappa1
        _check_rho_domain(z, radial)
        k = -z
        c = ck_cos(radial, k)
        s = ck_sin(radial, k)
        return MetricChart(
            g_rr=1.0 / c,
            g_thth=k2 * s * s / c,
            gamma_rad_radrad=0.5 * k * s / c,
            gamma_ang_angrad=(1.0 + c * c) / (2.0 * s * c),
            gamma_rad_angang=-0.5 * k2 * (s / c) * (1.0 + c * c),
            ricci_radrad=-0.5 * z * z * (s / c) ** 2,
            ricci_angang=-0.5 * k2 * z * z * s ** 4 / c ** 2,
            sectional=-0.5 * z * z * s * s / c,
        )
    if chart == R_CHART:
        k1 = sig.kappa1
        _check_r_domain(k1, radial)
        c = ck_cos(radial, k1)
        s = ck_sin(radial, k1)
        return MetricChart(
            g_rr=1.0,
            g_thth=k2 * s * s,
            gamma_rad_radrad=0.0,
            gamma_ang_angrad=c / s,
            gamma_rad_angang=-k2 * s * c,
            ricci_radrad=k1,
            ricci_angang=k2 * k1 * s * s,
            sectional=k1,
        )
    raise ValueError(f"unknown chart {chart!r}")


# ---------------------------------------------------------------------------
# Canonical transform Cartesian -> polar
# ---------------------------------------------------------------------------

def polar_map(model: DeformedModel, sig: CKSignature, chart: str = RHO_CHART):
    """Dual-generic map (q1,q2,p1,p2) -> (radial, theta, p_radial, p_theta).

    Only the kappa2 = +1 (Riemannian) real form is reachable from the real
    two-particle realization; the relativistic charts exist at the polar
    level only.
    """
    if sig.kappa2 != 1.0:
        raise ChartDomainError(
            "the real Cartesian realization only covers kappa2 = +1 charts")
    z = model.z

    def fn(q1, q2, p1, p2):
        if val(q1) == 0.0 or val(q2) == 0.0:
            raise SingularPoint("polar transform undefined on the axes")
        u1 = q1 * q1
        u2 = q2 * q2
        jm = u1 + u2
        w = z * val(jm)
        # radial coordinate rho from cosh(lambda1 rho) = exp(z J-)
        if abs(w) < 1e-5:
            ww = z * jm
            rho = dm.sqrt(2.0 * jm * (1.0 + ww * (1.0 / 3.0 + ww * (2.0 / 45.0))))
        elif z > 0.0:
            rho = dm.acosh(dm.exp(z * jm)) / math.sqrt(z)
        else:
            rho = dm.acos(dm.exp(z * jm)) / math.sqrt(-z)
        # angle from sin^2(theta) = expm1(2 z q1^2)/expm1(2 z J-)
        ratio = (u1 * expm1_over(2.0 * z * u1)) / (jm * expm1_over(2.0 * z * jm))
        s1 = 1.0 if val(q1) > 0 else -1.0
        s2 = 1.0 if val(q2) > 0 else -1.0
        theta = dm.atan2(s1 * dm.sqrt(ratio), s2 * dm.sqrt(1.0 - ratio))
        sth = ck_sin(theta, 1.0)
        cth = ck_cos(theta, 1.0)

        if chart == RHO_CHART:
            rad = rho
            cr = ck_cos(rho, -z)
            sr = ck_sin(rho, -z)
            a = cr / sr
            b = cth / (sth * sr * sr)
            c = (sth / cth) * (cr / sr) ** 2
        elif chart == R_CHART:
            rad = gudermann_r(z, rho)
            cr = ck_cos(rad, z)
            sr = ck_sin(rad, z)
            a = cr / sr
            b = (cr * cr) / (sr * sr) * cth / sth
            c = (sth / cth) / (sr * sr)
        else:
            raise ValueError(f"unknown chart {chart!r}")

        w1 = p1 / q1
        w2 = p2 / q2
        p_theta = (w1 - w2) / (b + c)
        p_radial = (w1 - b * p_theta) / a
        return rad, theta, p_radial, p_theta

    return fn


def cartesian_to_polar(model: DeformedModel, sig: CKSignature, state,
                       chart: str = RHO_CHART) -> PolarState:
    """Canonical transform of a Cartesian state into the chosen polar chart."""
    fn = polar_map(model, sig, chart)
    rad, theta, p_rad, p_th = fn(state.q1, state.q2, state.p1, state.p2)
    return PolarState(rad, theta, p_rad, p_th)


# ---------------------------------------------------------------------------
# Ambient embedding
# ---------------------------------------------------------------------------

def ambient_embed(sig: CKSignature, r: float, theta: float) -> AmbientData:
    """Embed an r-chart point into the 3D linear ambient space.

    Also returns the parallel coordinates (x, y) and, on the spaces where
    the oscillator centers exist, the center distances r1 and/or r2.
    """
    k1, k2 = sig.kappa1, sig.kappa2
    _check_r_domain(k1, r)
    sr = ck_sin(r, k1)
    cr = ck_cos(r, k1)
    sth = ck_sin(theta, k2)
    cth = ck_cos(theta, k2)
    x0 = cr
    x1 = sr * cth
    x2 = sr * sth
    x = ck_arcsin(x1, k1)
    y = ck_arcsin(x2, k1 * k2)

    r1 = r2 = None
    if k1 == 1.0:                       # S2 and AdS carry the center O1
        w = sr * cth
        if abs(w) > 1.0:
            raise ChartDomainError("point outside the wedge containing O1")
        r1 = math.acos(w)
    if (k1, k2) in ((1.0, 1.0), (-1.0, -1.0)):   # S2 and dS carry O2
        w = sr * sth
        if abs(w) > 1.0:
            raise ChartDomainError("point outside the wedge containing O2")
        r2 = math.acos(w)
    return AmbientData(AmbientPoint(x0, x1, x2), x, y, r1, r2)
