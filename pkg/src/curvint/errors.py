"""Exception hierarchy shared by all curvint modules."""


class CurvintError(Exception):
    """Base class for all library errors."""


class DomainError(CurvintError):
    """Argument outside the mathematical domain of a scalar kernel."""


class SingularPoint(CurvintError):
    """Evaluation at a genuine pole of a phase-space function."""


class ChartDomainError(CurvintError):
    """Point outside the legal domain of a coordinate chart."""


class InvalidSpec(CurvintError):
    """Hamiltonian specification violates its limit or parameter contract."""


class VariantUnavailable(CurvintError):
    """Requested potential decomposition does not exist on this space."""


class StepFailure(CurvintError):
    """ODE integrator could not continue (step underflow or solver failure)."""


class SingularityApproach(CurvintError):
    """A flow came within the standoff distance of a potential singularity."""
