"""Deformed sl(2) Poisson coalgebra: symplectic realizations, coproduct,
Casimir and residual checks of the defining bracket relations.

The generator triple (J-, J+, J3) closes the deformed brackets

    {J3, J+} = 2 J+ cosh(z J-)
    {J3, J-} = -2 sinh(z J-)/z
    {J-, J+} = 4 J3

and the Casimir C_z = sinh(z J-)/z J+ - J3^2 commutes with all three.
The z = 0 classical limit runs through the same code path via the guarded
sinhc kernels; there is no separate classical branch.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import duals as dm
from .duals import val
from .errors import SingularPoint
from .kappa import sinhc
from .phase_space import CartesianState, Observable, bracket, gradient_selfcheck


@dataclass(frozen=True)
class DeformedModel:
    """Deformation parameter z and the two centrifugal coefficients."""

    z: float = 0.0
    b1: float = 0.0
    b2: float = 0.0


@dataclass(frozen=True)
class GeneratorTriple:
    j_minus: Observable
    j_plus: Observable
    j_3: Observable

    def as_dict(self):
        return {"j_minus": self.j_minus, "j_plus": self.j_plus, "j_3": self.j_3}


def _centrifugal(z: float, b: float, q):
    """z b / sinh(z q^2), guarded as b / (q^2 sinhc(z q^2))."""
    q2 = q * q
    if val(q2) == 0.0:
        raise SingularPoint("centrifugal term evaluated at q = 0 with b != 0")
    return b / (q2 * sinhc(z * q2))


def one_site_generators(z: float, b: float, site: int) -> GeneratorTriple:
    """Single-pair restriction of the two-particle realization.

    Acts on canonical pair ``site`` (1 or 2) of the full state; the other
    pair is ignored.  Validated against the two-site realization through
    the coproduct-join identity.
    """
    if site not in (1, 2):
        raise ValueError("site must be 1 or 2")
    iq, ip = (0, 2) if site == 1 else (1, 3)

    def jm(*a):
        q = a[iq]
        return q * q

    def j3(*a):
        q, p = a[iq], a[ip]
        return sinhc(z * q * q) * q * p

    def jp(*a):
        q, p = a[iq], a[ip]
        out = sinhc(z * q * q) * p * p
        if b != 0.0:
            out = out + _centrifugal(z, b, q)
        return out

    return GeneratorTriple(Observable(jm, "J-"), Observable(jp, "J+"),
                           Observable(j3, "J3"))


def two_site_generators(model: DeformedModel) -> GeneratorTriple:
    """The explicit two-particle realization on (q1, q2, p1, p2)."""
    z, b1, b2 = model.z, model.b1, model.b2

    def jm(q1, q2, p1, p2):
        return q1 * q1 + q2 * q2

    def j3(q1, q2, p1, p2):
        return (sinhc(z * q1 * q1) * q1 * p1 * dm.exp(z * q2 * q2)
                + sinhc(z * q2 * q2) * q2 * p2 * dm.exp(-z * q1 * q1))

    def jp(q1, q2, p1, p2):
        t1 = sinhc(z * q1 * q1) * p1 * p1
        if b1 != 0.0:
            t1 = t1 + _centrifugal(z, b1, q1)
        t2 = sinhc(z * q2 * q2) * p2 * p2
        if b2 != 0.0:
            t2 = t2 + _centrifugal(z, b2, q2)
        return t1 * dm.exp(z * q2 * q2) + t2 * dm.exp(-z * q1 * q1)

    return GeneratorTriple(Observable(jm, "J-"), Observable(jp, "J+"),
                           Observable(j3, "J3"))


def coproduct_join(left: GeneratorTriple, right: GeneratorTriple,
                   z: float) -> GeneratorTriple:
    """Two-site generators from one-site ones via the deformed coproduct.

    J- is primitive (plain sum); J3 and J+ pick up exponential tails:
    J ->  J_left exp(z J-_right) + exp(-z J-_left) J_right.
    """
    jml, jmr = left.j_minus.fn, right.j_minus.fn

    def joined(fl, fr):
        def fn(*a):
            return (fl(*a) * dm.exp(z * jmr(*a))
                    + dm.exp(-z * jml(*a)) * fr(*a))
        return fn

    return GeneratorTriple(
        Observable(lambda *a: jml(*a) + jmr(*a), "J-"),
        Observable(joined(left.j_plus.fn, right.j_plus.fn), "J+"),
        Observable(joined(left.j_3.fn, right.j_3.fn), "J3"),
    )


def casimir_observable(model: DeformedModel) -> Observable:
    """The explicit two-particle Casimir, with guarded kernels."""
    z, b1, b2 = model.z, model.b1, model.b2

    def cz(q1, q2, p1, p2):
        u1 = q1 * q1
        u2 = q2 * q2
        s1 = sinhc(z * u1)
        s2 = sinhc(z * u2)
        ang = q1 * p2 - q2 * p1
        ef = dm.exp(-z * u1) * dm.exp(z * u2)
        out = s1 * s2 * ang * ang * ef
        if b1 != 0.0 or b2 != 0.0:
            out = out + b1 * dm.exp(2.0 * z * u2) + b2 * dm.exp(-2.0 * z * u1)
        # sinh(z u2)/sinh(z u1) = (u2/u1) sinhc(z u2)/sinhc(z u1)
        if b1 != 0.0:
            if val(u1) == 0.0:
                raise SingularPoint("Casimir evaluated at q1 = 0 with b1 != 0")
            out = out + b1 * (u2 * s2) / (u1 * s1) * ef
        if b2 != 0.0:
            if val(u2) == 0.0:
                raise SingularPoint("Casimir evaluated at q2 = 0 with b2 != 0")
            out = out + b2 * (u1 * s1) / (u2 * s2) * ef
        return out

    return Observable(cz, "C_z")


def casimir_from_generators(gens: GeneratorTriple, z: float) -> Observable:
    """Abstract Casimir sinh(z J-)/z J+ - J3^2 composed on a triple.

    Independent route used to cross-check the explicit form.
    """
    jm, jp, j3 = gens.j_minus.fn, gens.j_plus.fn, gens.j_3.fn

    def cz(*a):
        m = jm(*a)
        t3 = j3(*a)
        return m * sinhc(z * m) * jp(*a) - t3 * t3

    return Observable(cz, "C_z(abstract)")


def _pb(df, dg):
    return (df[0] * dg[2] - dg[0] * df[2]) + (df[1] * dg[3] - dg[1] * df[3])


def algebra_residuals(model: DeformedModel, x: CartesianState,
                      selfcheck: bool = True):
    """Pointwise residuals of the defining relations at x.

    Returns (r1, r2, r3, r4, r5):
      r1..r3 are the three bracket relations, r4 the worst Casimir
      commutator, r5 the worst gradient self-check over the four
      observables (0.0 when ``selfcheck`` is off; batch drivers sample the
      self-check sparsely since it is the one finite-difference step).

    Each gradient is evaluated once and every bracket is formed from the
    cached gradients.
    """
    z = model.z
    gens = two_site_generators(model)
    cas = casimir_observable(model)
    jm, jp, j3 = gens.j_minus, gens.j_plus, gens.j_3

    jmv, djm = jm.value_and_grad(x)
    jpv, djp = jp.value_and_grad(x)
    j3v, dj3 = j3.value_and_grad(x)
    _, dcas = cas.value_and_grad(x)

    r1 = abs(_pb(dj3, djp) - 2.0 * jpv * dm.cosh(z * jmv))
    r2 = abs(_pb(dj3, djm) + 2.0 * jmv * sinhc(z * jmv))
    r3 = abs(_pb(djm, djp) - 4.0 * j3v)
    r4 = max(abs(_pb(dcas, d)) for d in (djm, djp, dj3))
    r5 = 0.0
    if selfcheck:
        r5 = max(gradient_selfcheck(g, x) for g in (jm, jp, j3, cas))
    return (r1, r2, r3, r4, r5)
