"""Exception and warning types shared by all modules."""


class DomainError(ValueError):
    """A parameter lies outside the domain of the requested quantity."""


class PhaseUndefinedError(DomainError):
    """The overlap with the initial state vanishes, so its argument is undefined."""


class SingularMetricError(DomainError):
    """The metric (or a quantity built from it) is singular at this point."""


class BoundarySingularError(SingularMetricError):
    """Point on the reachability boundary of the (E, chi) chart."""


class UnreachableError(DomainError):
    """The (E, chi) pair is not the image of any physical (theta, chi)."""


class MetricDegenerateWarning(RuntimeWarning):
    """A closed form was evaluated where the underlying metric degenerates."""
