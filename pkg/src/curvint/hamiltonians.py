"""Hamiltonian catalog, constants of motion and polar/radial forms.

Kinds
-----
``FreeI``  geodesic motion on the non-constant-curvature family
``FreeS``  geodesic motion on the constant-curvature family
``ISW``    integrable oscillator + barriers on the non-constant family
``IKC``    integrable Kepler-Coulomb analogue on the non-constant family
``SSW``    superintegrable oscillator + barriers on the constant family
``Custom`` any smooth pair (f, U) applied as H = J+/2 f(zJ-) + U(zJ-)

Scaling conventions are centralized here: coalgebra-side observables are the
ground truth, and the polar-boundary rescalings (the doubling H = 2*H_coalg,
C = 4 kappa2 * C_coalg, the shifted extra integral, and the beta/b aliasing
beta1 = 2 b2, beta2 = 2 b1) are applied only in the ``*_polar`` helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import duals as dm
from .duals import val
from .coalgebra import DeformedModel, casimir_observable, two_site_generators
from .errors import ChartDomainError, InvalidSpec, SingularPoint, VariantUnavailable
from .geometry import CKSignature, PolarState, _check_r_domain, _check_rho_domain
from .kappa import ck_cos, ck_sin, expm1_over, sinhc
from .phase_space import CartesianState, Observable

KINDS = ("FreeI", "FreeS", "ISW", "IKC", "SSW", "Custom")

# kinds whose natural polar chart is the non-constant-curvature rho-chart
RHO_KINDS = ("FreeI", "ISW", "IKC", "Custom")
# kinds living on the constant-curvature r-chart
R_KINDS = ("FreeS", "SSW")


@dataclass(frozen=True)
class HamiltonianSpec:
    kind: str
    beta0: float = 0.0          # oscillator strength (omega = sqrt(beta0))
    gamma: float = 0.0          # Kepler-Coulomb strength (k = 2 sqrt(2) gamma)
    custom_f: Optional[Callable] = None   # f(u), u = z J-; lim_{u->0} f = 1
    custom_U: Optional[Callable] = None   # U(u); finite limit at u -> 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown Hamiltonian kind {self.kind!r}")
        if self.kind == "Custom":
            if self.custom_f is None or self.custom_U is None:
                raise InvalidSpec("Custom kind requires custom_f and custom_U")
            u = 1e-8
            fv = val(self.custom_f(u))
            uv = val(self.custom_U(u))
            if not math.isfinite(fv) or abs(fv - 1.0) > 1e-6:
                raise InvalidSpec("custom_f must tend to 1 in the flat limit")
            if not math.isfinite(uv):
                raise InvalidSpec("custom_U must have a finite flat limit")


@dataclass(frozen=True)
class IntegralSet:
    """A Hamiltonian with its constants of motion, all exact-gradient."""

    h: Observable
    c_z: Observable
    i_z: Optional[Observable]
    beta1: float
    beta2: float
    model: DeformedModel
    spec: HamiltonianSpec


def b_to_beta(b1: float, b2: float):
    """(b1, b2) -> (beta1, beta2).  The index swap is deliberate."""
    return 2.0 * b2, 2.0 * b1


def beta_to_b(beta1: float, beta2: float):
    return 0.5 * beta2, 0.5 * beta1


def _f_u_pair(model: DeformedModel, spec: HamiltonianSpec):
    """The (f, U) pair of the kinetic/potential split for any kind.

    Both take u = z J-; U additionally needs J- itself for the guarded
    z -> 0 limits, so it is U(u, jm).
    """
    z = model.z
    beta0, gamma = spec.beta0, spec.gamma
    if spec.kind == "FreeI":
        return (lambda u: 1.0), (lambda u, jm: 0.0)
    if spec.kind == "FreeS":
        return dm.exp, (lambda u, jm: 0.0)
    if spec.kind == "ISW":
        # beta0 sinh(u)/z = beta0 jm sinhc(u)
        return (lambda u: 1.0), (lambda u, jm: beta0 * jm * sinhc(u))
    if spec.kind == "IKC":
        # -gamma sqrt(2z/(e^{2u}-1)) e^{2u} = -gamma e^{2u}/sqrt(jm eo(2u))
        def U(u, jm):
            return -gamma * dm.exp(2.0 * u) / dm.sqrt(jm * expm1_over(2.0 * u))
        return (lambda u: 1.0), U
    if spec.kind == "SSW":
        def U(u, jm):
            return beta0 * jm * sinhc(u) * dm.exp(u)
        return dm.exp, U
    # Custom
    f, Uu = spec.custom_f, spec.custom_U
    return f, (lambda u, jm: Uu(u))


def build(model: DeformedModel, spec: HamiltonianSpec) -> IntegralSet:
    """Observables (h, c_z, and i_z for SSW) on the two-site realization."""
    gens = two_site_generators(model)
    jm_fn, jp_fn = gens.j_minus.fn, gens.j_plus.fn
    z = model.z
    f, U = _f_u_pair(model, spec)

    def h(q1, q2, p1, p2):
        jm = jm_fn(q1, q2, p1, p2)
        jp = jp_fn(q1, q2, p1, p2)
        u = z * jm
        return 0.5 * jp * f(u) + U(u, jm)

    c_z = casimir_observable(model)

    i_z = None
    if spec.kind == "SSW":
        i_z = extra_integral(model, spec.beta0)

    beta1, beta2 = b_to_beta(model.b1, model.b2)
    return IntegralSet(Observable(h, f"H_{spec.kind}"), c_z, i_z,
                       beta1, beta2, model, spec)


def extra_integral(model: DeformedModel, beta0: float) -> Observable:
    """The additional constant of motion of the superintegrable system.

    Regularized form: the z-independent constant beta0/(2z) is subtracted so
    a single guarded expression covers z = 0.  The raw printed integral is
    this plus beta0/(2z); constant shifts do not affect brackets or drift.
    """
    z, b1 = model.z, model.b1

    def iz(q1, q2, p1, p2):
        u1 = q1 * q1
        w = z * u1
        out = 0.5 * sinhc(w) * dm.exp(w) * p1 * p1
        if b1 != 0.0:
            if val(u1) == 0.0:
                raise SingularPoint("extra integral at q1 = 0 with b1 != 0")
            out = out + 0.5 * b1 * dm.exp(w) / (u1 * sinhc(w))
        # beta0/(2z) (e^{2 z q1^2} - 1) with the removable singularity filled
        out = out + beta0 * u1 * expm1_over(2.0 * w)
        return out

    return Observable(iz, "I_z(shifted)")


def custom_split(model: DeformedModel, spec: HamiltonianSpec,
                 x: CartesianState):
    """(kinetic, potential) split of any catalog member at a point."""
    z, b1, b2 = model.z, model.b1, model.b2
    q1, q2, p1, p2 = x.as_tuple()
    u1, u2 = q1 * q1, q2 * q2
    jm = u1 + u2
    u = z * jm
    f, U = _f_u_pair(model, spec)
    fv = f(u)
    kinetic = 0.5 * (sinhc(z * u1) * math.exp(z * u2) * p1 * p1
                     + sinhc(z * u2) * math.exp(-z * u1) * p2 * p2) * fv
    pot = U(u, jm)
    if b1 != 0.0:
        if u1 == 0.0:
            raise SingularPoint("potential pole at q1 = 0")
        pot = pot + 0.5 * b1 * math.exp(z * u2) / (u1 * sinhc(z * u1)) * fv
    if b2 != 0.0:
        if u2 == 0.0:
            raise SingularPoint("potential pole at q2 = 0")
        pot = pot + 0.5 * b2 * math.exp(-z * u1) / (u2 * sinhc(z * u2)) * fv
    return kinetic, pot


# ---------------------------------------------------------------------------
# Polar forms (doubled / rescaled conventions)
# ---------------------------------------------------------------------------

def cz_polar(sig: CKSignature, theta: float, p_theta: float,
             b1: float, b2: float) -> float:
    """Angular constant of motion, equal to 4 kappa2^2 * C_coalgebra.

    Depends on (theta, p_theta) only.
    """
    k2 = sig.kappa2
    sth = ck_sin(theta, k2)
    cth = ck_cos(theta, k2)
    out = p_theta * p_theta
    if b1 != 0.0:
        if val(sth) == 0.0:
            raise SingularPoint("angular barrier pole at theta = 0")
        out = out + 4.0 * b1 / (sth * sth)
    if b2 != 0.0:
        if val(cth) == 0.0:
            raise SingularPoint("angular barrier pole")
        out = out + 4.0 * k2 * b2 / (cth * cth)
    return out


def _rho_kinetic_barrier(model: DeformedModel, k2: float, ps: PolarState):
    z = model.z
    _check_rho_domain(z, ps.radial)
    c = ck_cos(ps.radial, -z)
    s = ck_sin(ps.radial, -z)
    sth = ck_sin(ps.theta, k2)
    cth = ck_cos(ps.theta, k2)
    kin = 0.5 * c * (ps.p_radial ** 2 + ps.p_theta ** 2 / (k2 * s * s))
    bar = 0.0
    if model.b1 != 0.0 or model.b2 != 0.0:
        bar = (2.0 * c / (s * s)) * (model.b1 / (k2 * sth * sth)
                                     + model.b2 / (cth * cth))
    return kin, bar, c, s


def polar_form(model: DeformedModel, sig: CKSignature, spec: HamiltonianSpec,
               ps: PolarState) -> float:
    """Value of the doubled polar Hamiltonian H = 2 * H_coalgebra.

    Rho-chart kinds read ``ps.radial`` as rho; r-chart kinds read it as the
    geodesic radial coordinate r.
    """
    k2 = sig.kappa2
    if spec.kind in RHO_KINDS:
        kin, bar, c, s = _rho_kinetic_barrier(model, k2, ps)
        if spec.kind == "FreeI":
            g = 0.0
            return kin + bar + g
        if spec.kind == "ISW":
            g = spec.beta0 * s * s / c
            return kin + bar + g
        if spec.kind == "IKC":
            k = 2.0 * math.sqrt(2.0) * spec.gamma
            g = -k * c * c / s
            return kin + bar + g
        # Custom: H = f(zJ-) (kin + bar) + 2 U(zJ-), with e^{zJ-} = ck_cos
        u = math.log(val(c))
        return spec.custom_f(u) * (kin + bar) + 2.0 * spec.custom_U(u)

    # r-chart family
    z = model.z
    _check_r_domain(z, ps.radial)
    c = ck_cos(ps.radial, z)
    s = ck_sin(ps.radial, z)
    sth = ck_sin(ps.theta, k2)
    cth = ck_cos(ps.theta, k2)
    beta1, beta2 = b_to_beta(model.b1, model.b2)
    out = 0.5 * (ps.p_radial ** 2 + ps.p_theta ** 2 / (k2 * s * s))
    if spec.kind == "SSW":
        out = out + spec.beta0 * (s * s) / (c * c)
    if beta1 != 0.0:
        out = out + beta1 / (s * s * cth * cth)
    if beta2 != 0.0:
        out = out + beta2 / (k2 * s * s * sth * sth)
    return out


def radial_reduce(model: DeformedModel, sig: CKSignature,
                  spec: HamiltonianSpec, c_value: float,
                  radial: float, p_radial: float) -> float:
    """1D radial energy with the angular constant frozen at c_value."""
    k2 = sig.kappa2
    z = model.z
    if spec.kind in RHO_KINDS:
        _check_rho_domain(z, radial)
        c = ck_cos(radial, -z)
        s = ck_sin(radial, -z)
        core = 0.5 * c * p_radial ** 2 + c * c_value / (2.0 * k2 * s * s)
        if spec.kind == "FreeI":
            return core
        if spec.kind == "ISW":
            return core + spec.beta0 * s * s / c
        if spec.kind == "IKC":
            k = 2.0 * math.sqrt(2.0) * spec.gamma
            return core + (-k * c * c / s)
        u = math.log(val(c))
        return spec.custom_f(u) * core + 2.0 * spec.custom_U(u)
    _check_r_domain(z, radial)
    c = ck_cos(radial, z)
    s = ck_sin(radial, z)
    out = 0.5 * p_radial ** 2 + c_value / (2.0 * k2 * s * s)
    if spec.kind == "SSW":
        out = out + spec.beta0 * s * s / (c * c)
    return out


def iz_polar(sig: CKSignature, ps: PolarState, beta0: float,
             beta2: float) -> float:
    """Polar form of the extra (superintegrability) constant.

    Equals 4 kappa2 * (I_raw - beta0/(2 z) - z b1) through the full
    coordinate transform.
    """
    k1, k2 = sig.kappa1, sig.kappa2
    _check_r_domain(k1, ps.radial)
    c = ck_cos(ps.radial, k1)
    s = ck_sin(ps.radial, k1)
    sth = ck_sin(ps.theta, k2)
    cth = ck_cos(ps.theta, k2)
    cot = c / s
    lead = k2 * sth * ps.p_radial + cth * cot * ps.p_theta
    out = lead * lead + 2.0 * beta0 * (s / c) ** 2 * sth * sth
    if beta2 != 0.0:
        if val(sth) == 0.0:
            raise SingularPoint("extra-integral barrier pole at theta = 0")
        out = out + 2.0 * beta2 * cot * cot / (sth * sth)
    return out


# ---------------------------------------------------------------------------
# Potential decomposition in parallel coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SWDecomposition:
    """Oscillator + barrier decomposition of the polar SW potential."""

    central: float            # central oscillator term
    barrier_x: float          # beta1 barrier in the parallel coordinate x
    barrier_y: float          # beta2 barrier in the parallel coordinate y
    x: float
    y: float
    total: float
    center_terms: Optional[dict] = None   # oscillator-center rewriting
    r1: Optional[float] = None
    r2: Optional[float] = None

    @property
    def center_total(self) -> float:
        if self.center_terms is None:
            raise VariantUnavailable(
                "oscillator-center form undefined on this space "
                "(the centers lie in the ideal region)")
        return self.central + sum(self.center_terms.values())


def sw_decompose(sig: CKSignature, r: float, theta: float, beta0: float,
                 beta1: float, beta2: float) -> SWDecomposition:
    """Decompose the SW potential at an r-chart point."""
    from .geometry import ambient_embed

    k1, k2 = sig.kappa1, sig.kappa2
    amb = ambient_embed(sig, r, theta)
    c = ck_cos(r, k1)
    s = ck_sin(r, k1)
    sth = ck_sin(theta, k2)
    cth = ck_cos(theta, k2)
    central = beta0 * (s / c) ** 2
    sx = s * cth                       # = ck_sin(x, k1)
    sy = s * sth                       # = ck_sin(y, k1 k2)
    barrier_x = beta1 / (sx * sx)
    barrier_y = beta2 / (k2 * sy * sy)
    total = central + barrier_x + barrier_y

    # tan^2(r_i) evaluated as (1 - w^2)/w^2 with w = cos(r_i) taken straight
    # from the ambient coordinates; this avoids the ill-conditioned
    # acos/tan round trip near the equator.
    def tan_sq(w):
        return (1.0 - w * w) / (w * w)

    center_terms = None
    if amb.r1 is not None and amb.r2 is not None:       # sphere
        center_terms = {
            "oscillator_r1": beta1 * tan_sq(sx),
            "oscillator_r2": beta2 * tan_sq(sy),
            "constant": beta1 + beta2,
        }
    elif amb.r1 is not None:                            # anti-de Sitter
        center_terms = {
            "oscillator_r1": beta1 * tan_sq(sx),
            "barrier_y": barrier_y,
            "constant": beta1,
        }
    elif amb.r2 is not None:                            # de Sitter
        center_terms = {
            "oscillator_r2": -beta2 * tan_sq(sy),
            "barrier_x": barrier_x,
            "constant": -beta2,
        }
    return SWDecomposition(central, barrier_x, barrier_y, amb.x, amb.y,
                           total, center_terms, amb.r1, amb.r2)
