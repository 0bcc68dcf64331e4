"""Batch verification suites over random phase-space samples.

Each check evaluates a mathematical identity of the library over a random
sample and reports the worst residual against an explicit threshold.  The
sampling convention is shared by every suite: positions are drawn with
|q_i| uniform in [0.2, 1.2] and a random sign (keeping clear of both the
centrifugal poles and the large-|q| metric blow-up), momenta uniform in
[-2, 2], from a seeded generator so every run is reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import duals as dm
from .coalgebra import (DeformedModel, algebra_residuals,
                        casimir_from_generators, casimir_observable,
                        coproduct_join, one_site_generators,
                        two_site_generators)
from .geometry import CKSignature, R_CHART, RHO_CHART, cartesian_to_polar
from .hamiltonians import HamiltonianSpec, build, cz_polar, iz_polar, polar_form
from .phase_space import CartesianState, Observable, bracket

DEFAULT_Z_GRID = (-1.0, -0.3, 0.3, 1.0)
DEFAULT_B_GRID = ((0.0, 0.0), (1.0, 2.0), (-0.5, 1.5))

ALGEBRA_TOL = 1e-9
CENTRALITY_TOL = 1e-9
SELFCHECK_TOL = 1e-6
COPRODUCT_TOL = 1e-12
INVOLUTION_TOL = 1e-9
SSW_IDENTITY_TOL = 1e-12
RESCALE_TOL = 1e-8
TWO_PATH_TOL = 1e-9
JACOBI_TOL = 1e-8


@dataclass(frozen=True)
class Check:
    """One verified property: its worst residual against a threshold."""

    name: str
    max_residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_residual < self.threshold

    def as_dict(self) -> dict:
        return {"property": self.name, "max_residual": self.max_residual,
                "threshold": self.threshold, "pass": self.passed}


def sample_states(rng: random.Random, n: int) -> List[CartesianState]:
    def q():
        return rng.choice((-1.0, 1.0)) * rng.uniform(0.2, 1.2)

    def p():
        return rng.uniform(-2.0, 2.0)

    return [CartesianState(q(), q(), p(), p()) for _ in range(n)]


def check_algebra(z_grid: Sequence[float] = DEFAULT_Z_GRID,
                  b_grid: Sequence[Tuple[float, float]] = DEFAULT_B_GRID,
                  n_points: int = 1000, seed: int = 0,
                  selfcheck_every: int = 100) -> List[Check]:
    """Bracket relations, Casimir centrality and sparse gradient self-check."""
    rng = random.Random(seed)
    worst = [0.0] * 5
    for z in z_grid:
        for b1, b2 in b_grid:
            model = DeformedModel(z, b1, b2)
            for i, x in enumerate(sample_states(rng, n_points)):
                r = algebra_residuals(model, x,
                                      selfcheck=(i % selfcheck_every == 0))
                worst = [max(w, abs(v)) for w, v in zip(worst, r)]
    return [
        Check("bracket {J3,J+} = 2 J+ cosh(z J-)", worst[0], ALGEBRA_TOL),
        Check("bracket {J3,J-} = -2 sinh(z J-)/z", worst[1], ALGEBRA_TOL),
        Check("bracket {J-,J+} = 4 J3", worst[2], ALGEBRA_TOL),
        Check("Casimir centrality {C_z, J_i} = 0", worst[3], CENTRALITY_TOL),
        Check("gradient self-check (central differences)", worst[4],
              SELFCHECK_TOL),
    ]


def check_coproduct(z: float = 0.6, b: Tuple[float, float] = (1.0, 2.0),
                    n_points: int = 100, seed: int = 0) -> List[Check]:
    """Coproduct of one-site triples equals the two-site realization, and
    the abstract Casimir composition equals the explicit form."""
    rng = random.Random(seed)
    model = DeformedModel(z, *b)
    two = two_site_generators(model)
    joined = coproduct_join(one_site_generators(z, b[0], 1),
                            one_site_generators(z, b[1], 2), z)
    cas_explicit = casimir_observable(model)
    cas_abstract = casimir_from_generators(two, z)
    w_join = w_cas = 0.0
    for x in sample_states(rng, n_points):
        for a, bb in ((two.j_minus, joined.j_minus),
                      (two.j_plus, joined.j_plus),
                      (two.j_3, joined.j_3)):
            w_join = max(w_join, abs(a.eval(x) - bb.eval(x)))
        w_cas = max(w_cas, abs(cas_explicit.eval(x) - cas_abstract.eval(x)))
    return [
        Check("coproduct join reproduces two-site generators", w_join,
              COPRODUCT_TOL),
        Check("Casimir: abstract composition equals explicit form", w_cas,
              COPRODUCT_TOL),
    ]


def _catalog_specs() -> Dict[str, HamiltonianSpec]:
    return {
        "FreeI": HamiltonianSpec("FreeI"),
        "FreeS": HamiltonianSpec("FreeS"),
        "ISW": HamiltonianSpec("ISW", beta0=1.0),
        "IKC": HamiltonianSpec("IKC", gamma=0.8),
        "SSW": HamiltonianSpec("SSW", beta0=1.0),
    }


def check_involution(z_grid: Sequence[float] = (-0.4, 0.4),
                     b: Tuple[float, float] = (1.0, 2.0),
                     n_points: int = 100, seed: int = 0) -> List[Check]:
    """|{h, c_z}| for every catalog kind; |{h, i_z}| and |{c_z, i_z}| for
    the superintegrable one."""
    rng = random.Random(seed)
    w_cz = w_iz = 0.0
    for z in z_grid:
        model = DeformedModel(z, *b)
        sets = {k: build(model, s) for k, s in _catalog_specs().items()}
        for x in sample_states(rng, n_points):
            for iset in sets.values():
                w_cz = max(w_cz, abs(bracket(iset.h, iset.c_z, x)))
            ssw = sets["SSW"]
            w_iz = max(w_iz, abs(bracket(ssw.h, ssw.i_z, x)))
    return [
        Check("involution {h, c_z} = 0 (all kinds)", w_cz, INVOLUTION_TOL),
        Check("superintegrability {h_SSW, i_z} = 0", w_iz, INVOLUTION_TOL),
    ]


def check_ssw_identity(z_grid: Sequence[float] = DEFAULT_Z_GRID,
                       b: Tuple[float, float] = (1.0, 2.0),
                       beta0: float = 1.0, n_points: int = 100,
                       seed: int = 0) -> List[Check]:
    """h_SSW equals h_ISW * exp(z J-) pointwise."""
    rng = random.Random(seed)
    worst = 0.0
    for z in z_grid:
        model = DeformedModel(z, *b)
        ssw = build(model, HamiltonianSpec("SSW", beta0=beta0))
        isw = build(model, HamiltonianSpec("ISW", beta0=beta0))
        jm = two_site_generators(model).j_minus
        for x in sample_states(rng, n_points):
            lhs = ssw.h.eval(x)
            rhs = isw.h.eval(x) * math.exp(z * jm.eval(x))
            worst = max(worst, abs(lhs - rhs))
    return [Check("h_SSW = h_ISW exp(z J-)", worst, SSW_IDENTITY_TOL)]


def check_rescale(z_grid: Sequence[float] = (-0.5, 0.4, 1.0),
                  b: Tuple[float, float] = (0.7, 1.3), beta0: float = 0.9,
                  n_points: int = 100, seed: int = 0) -> List[Check]:
    """Polar-boundary rescalings through the full coordinate transform.

    H_polar = 2 h, C_polar = 4 c_z, and the extra-integral relation
    I_polar = 4 kappa2 (i_z - z b1) where i_z already carries the constant
    regularizing shift.
    """
    rng = random.Random(seed)
    w_h = w_c = w_i = 0.0
    for z in z_grid:
        sig = CKSignature(z, 1.0)
        model = DeformedModel(z, *b)
        spec = HamiltonianSpec("SSW", beta0=beta0)
        iset = build(model, spec)
        for x in sample_states(rng, n_points):
            ps = cartesian_to_polar(model, sig, x, R_CHART)
            w_h = max(w_h, abs(polar_form(model, sig, spec, ps)
                               - 2.0 * iset.h.eval(x)))
            w_c = max(w_c, abs(cz_polar(sig, ps.theta, ps.p_theta, b[0], b[1])
                               - 4.0 * iset.c_z.eval(x)))
            w_i = max(w_i, abs(iz_polar(sig, ps, beta0, iset.beta2)
                               - 4.0 * (iset.i_z.eval(x) - z * b[0])))
    return [
        Check("rescale H_polar = 2 h through the transform", w_h,
              RESCALE_TOL),
        Check("rescale C_polar = 4 c_z through the transform", w_c,
              RESCALE_TOL),
        Check("rescale I_polar = 4 (i_z - z b1) through the transform", w_i,
              RESCALE_TOL),
    ]


def check_two_path(z_grid: Sequence[float] = (-1.0, 1.0),
                   b: Tuple[float, float] = (0.7, 1.3),
                   n_points: int = 100, seed: int = 0) -> List[Check]:
    """Cartesian build equals the chart Hamiltonian through the transform
    for every catalog kind on its natural chart."""
    rng = random.Random(seed)
    worst = 0.0
    for z in z_grid:
        sig = CKSignature(z, 1.0)
        model = DeformedModel(z, *b)
        specs = _catalog_specs()
        sets = {k: build(model, s) for k, s in specs.items()}
        for x in sample_states(rng, n_points):
            ps_rho = cartesian_to_polar(model, sig, x, RHO_CHART)
            ps_r = cartesian_to_polar(model, sig, x, R_CHART)
            for kind, spec in specs.items():
                ps = ps_r if kind in ("FreeS", "SSW") else ps_rho
                worst = max(worst, abs(polar_form(model, sig, spec, ps)
                                       - 2.0 * sets[kind].h.eval(x)))
    return [Check("two-path Hamiltonian equality (all kinds)", worst,
                  TWO_PATH_TOL)]


def check_jacobi(n_points: int = 100, seed: int = 0) -> List[Check]:
    """Jacobi identity of the canonical bracket on polynomial triples.

    The inner bracket is exact (forward-mode); the outer bracket needs its
    gradient and is differentiated by central differences, which suffices
    for low-degree polynomials at this tolerance.
    """
    rng = random.Random(seed)

    def poly():
        c = [rng.uniform(-1.0, 1.0) for _ in range(8)]
        return Observable(lambda q1, q2, p1, p2, c=c: (
            c[0] * q1 * q1 * p2 + c[1] * q2 * p1 + c[2] * q1 * q2
            + c[3] * p1 * p2 + c[4] * q2 * q2 * p1 * p2
            + c[5] * q1 * p1 * p1 + c[6] * q2 * q2 * q1 + c[7]))

    def nested(f, g):
        def fn(*a):
            return bracket(f, g, CartesianState(*a))
        return Observable(fn)

    def fd_bracket(inner: Observable, h: Observable, x: CartesianState,
                   step: float = 1e-5) -> float:
        vals = list(x.as_tuple())
        grad_inner = []
        for i in range(4):
            hi, lo = vals.copy(), vals.copy()
            hi[i] += step
            lo[i] -= step
            grad_inner.append((inner.fn(*hi) - inner.fn(*lo)) / (2.0 * step))
        dh = h.grad(x)
        return ((grad_inner[0] * dh[2] - dh[0] * grad_inner[2])
                + (grad_inner[1] * dh[3] - dh[1] * grad_inner[3]))

    worst = 0.0
    for x in sample_states(rng, n_points):
        f, g, h = poly(), poly(), poly()
        cyc = (fd_bracket(nested(f, g), h, x)
               + fd_bracket(nested(g, h), f, x)
               + fd_bracket(nested(h, f), g, x))
        worst = max(worst, abs(cyc))
    return [Check("Jacobi identity on polynomial triples", worst, JACOBI_TOL)]


def run_verification(z_grid=DEFAULT_Z_GRID, b_grid=DEFAULT_B_GRID,
                     n_points: int = 1000, seed: int = 0) -> List[Check]:
    """The full identity suite with the default acceptance grids."""
    checks: List[Check] = []
    checks += check_algebra(z_grid, b_grid, n_points, seed)
    checks += check_coproduct(seed=seed)
    checks += check_involution(seed=seed)
    checks += check_ssw_identity(z_grid, seed=seed)
    checks += check_rescale(seed=seed)
    checks += check_two_path(seed=seed)
    checks += check_jacobi(seed=seed)
    return checks


def all_passed(checks: Iterable[Check]) -> bool:
    return all(c.passed for c in checks)
