"""Geometry, phases and time-optimal motion of n spin-1/2 particles under all-range Ising coupling.

Submodules
----------
statevector   exact 2**n amplitude engine (the numerical oracle)
geometry      Fubini-Study metric, Christoffel symbols, curvature
phases        total, dynamical, geometric, cyclic and topological phases
dynamics      speed, Fubini-Study distance, brachistochrone time
entanglement  two-spin entanglement and the (E, chi) chart
sweep         parameter sweeps, figure presets, CSV/JSON/SVG output
"""

__version__ = "0.1.0"

from . import dynamics, entanglement, geometry, phases, statevector, sweep  # noqa: E402
from .errors import (  # noqa: E402
    BoundarySingularError,
    DomainError,
    MetricDegenerateWarning,
    PhaseUndefinedError,
    SingularMetricError,
    UnreachableError,
)
from .statevector import EnsembleParams, StateVector  # noqa: E402

__all__ = [
    "BoundarySingularError",
    "DomainError",
    "EnsembleParams",
    "MetricDegenerateWarning",
    "PhaseUndefinedError",
    "SingularMetricError",
    "StateVector",
    "UnreachableError",
    "dynamics",
    "entanglement",
    "geometry",
    "phases",
    "statevector",
    "sweep",
]
