"""Integrable and superintegrable Hamiltonian systems on curved 2D spaces.

The package realizes a one-parameter deformation of the sl(2) Poisson
algebra on a two-particle phase space, the curved configuration spaces its
kinetic terms define, a catalog of (super)integrable Hamiltonians with
their constants of motion, and the numerical flows and verification suites
that check every claimed identity at runtime.
"""

from .coalgebra import (DeformedModel, GeneratorTriple, algebra_residuals,
                        casimir_from_generators, casimir_observable,
                        coproduct_join, one_site_generators,
                        two_site_generators)
from .dynamics import (GeodesicClosedForm, IntegratorOptions, Trajectory,
                       closed_form_residual, drift_report, fit_closed_form,
                       geodesic_flow, hamilton_flow, unit_speed_velocity)
from .errors import (ChartDomainError, CurvintError, DomainError, InvalidSpec,
                     SingularPoint, SingularityApproach, StepFailure,
                     VariantUnavailable)
from .geometry import (CKSignature, CONSTANT, MetricChart, NONCONSTANT,
                       PolarState, R_CHART, RHO_CHART, ambient_embed,
                       brioschi_oracle, cartesian_metric, cartesian_to_polar,
                       gaussian_curvature, polar_chart, signature)
from .hamiltonians import (HamiltonianSpec, IntegralSet, SWDecomposition,
                           b_to_beta, beta_to_b, build, custom_split,
                           cz_polar, iz_polar, polar_form, radial_reduce,
                           sw_decompose)
from .phase_space import CartesianState, Observable, bracket, gradient_selfcheck

__version__ = "0.1.0"
