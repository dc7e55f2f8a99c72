"""Two-spin entanglement and the geometry/dynamics written in entanglement coordinates.

For ``n = 2`` the geometric measure of entanglement is
``E = (1 - |<sigma>|) / 2 = (1 - sqrt(1 - sin^4(theta) sin^2(chi))) / 2``.
The pair ``(E, chi)`` is used as a coordinate chart.  Because ``E(theta, chi)``
is not injective, a point ``(E, chi)`` is only physical when
``2 sqrt(E(1-E)) <= |sin chi|``; the boundary of that region is the
``theta = pi/2`` trajectory.

Throughout, ``x = sqrt(E(1-E))`` and ``s = |sin chi|``.  Along physical
trajectories ``x = sin^2(theta) s / 2``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from . import statevector as sv
from .errors import (
    BoundarySingularError,
    DomainError,
    SingularMetricError,
    UnreachableError,
)

log = logging.getLogger(__name__)

E_MAX = 0.5
REACH_TOL = 1e-12
SIN_TOL = 1e-10
STATIC_CURVATURE = 16.0


@dataclass(frozen=True)
class EntCoord:
    """A point ``(E, chi)`` of the entanglement chart."""

    e: float
    chi: float

    @classmethod
    def from_angles(cls, theta: float, chi: float) -> "EntCoord":
        return cls(entanglement(theta, chi), chi)

    @property
    def reachable(self) -> bool:
        return is_reachable(self.e, self.chi)


@dataclass(frozen=True)
class EntMetric:
    """Metric components in ``(E, chi)``; ``g_ec`` is the symmetric-tensor component."""

    g_ee: float
    g_ec: float
    g_cc: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.g_ee, self.g_ec], [self.g_ec, self.g_cc]])


@dataclass(frozen=True)
class DiagonalEntMetric:
    g_rr: float
    g_cc: float


def _x(e):
    return np.sqrt(e * (1 - e))


def _s(chi):
    return abs(np.sin(chi))


def _check_e(e):
    if not (0.0 <= e <= E_MAX):
        raise DomainError(f"entanglement must lie in [0, 1/2], got {e!r}")


def _check_sin(chi):
    if _s(chi) <= SIN_TOL:
        raise SingularMetricError(f"sin(chi) = 0 at chi={chi}: the (E, chi) chart is singular")


def is_reachable(e: float, chi: float) -> bool:
    """True when ``(e, chi)`` is the image of some physical ``(theta, chi)``."""
    return 0.0 <= e <= E_MAX and 2 * _x(e) <= _s(chi) + REACH_TOL


def _check_reachable(e, chi):
    _check_e(e)
    if not is_reachable(e, chi):
        raise UnreachableError(f"(E={e}, chi={chi}) violates 2 sqrt(E(1-E)) <= |sin chi|")


def entanglement_reach(chi: float) -> float:
    """Largest reachable ``E`` at this ``chi``: ``(1 - |cos chi|) / 2`` (the ``theta = pi/2`` value)."""
    return float((1 - abs(np.cos(chi))) / 2)


def two_spin_state(theta: float, phi: float, chi: float) -> sv.StateVector:
    """Evolved two-spin state with amplitudes
    ``[e^{-i chi} cos^2(t/2), e^{i phi} sin(t)/2, e^{i phi} sin(t)/2, e^{i(2 phi - chi)} sin^2(t/2)]``.
    """
    sv.check_theta(theta)
    amps = np.array(
        [
            np.exp(-1j * chi) * np.cos(theta / 2) ** 2,
            0.5 * np.exp(1j * phi) * np.sin(theta),
            0.5 * np.exp(1j * phi) * np.sin(theta),
            np.exp(1j * (2 * phi - chi)) * np.sin(theta / 2) ** 2,
        ]
    )
    return sv.StateVector(2, amps)


def entanglement(theta: float, chi: float) -> float:
    """Geometric measure of entanglement ``(1 - sqrt(1 - sin^4 t sin^2 chi)) / 2``."""
    sv.check_theta(theta)
    u = np.sin(theta) ** 4 * np.sin(chi) ** 2
    # 1 - sqrt(1-u) == u / (1 + sqrt(1-u)) without cancellation
    return float(u / (1 + np.sqrt(1 - u)) / 2)


def entanglement_numeric(theta: float, chi: float, phi: float = 0.0) -> float:
    """``(1 - |<sigma_0>|) / 2`` evaluated on the statevector oracle."""
    state = sv.state_at(sv.EnsembleParams(2, 1.0, theta, phi), chi)
    return float((1 - np.linalg.norm(sv.reduced_bloch_vector(state, 0))) / 2)


def entanglement_partials(theta: float, chi: float) -> tuple[float, float]:
    """Analytic ``(dE/dtheta, dE/dchi)``."""
    sv.check_theta(theta)
    st, ct, sc, cc = np.sin(theta), np.cos(theta), np.sin(chi), np.cos(chi)
    root = np.sqrt(1 - st**4 * sc**2)
    return float(st**3 * ct * sc**2 / root), float(st**4 * sc * cc / (2 * root))


def entanglement_max(theta: float) -> float:
    """Maximum over ``chi`` (attained at ``chi = pi/2, 3 pi/2``)."""
    return entanglement(theta, np.pi / 2)


def reduced_entanglement(e: float, chi: float) -> float:
    """``E_r = 2 sqrt(E(1-E)) / |sin chi|``, equal to ``sin^2 theta`` on physical points."""
    _check_sin(chi)
    _check_reachable(e, chi)
    return float(min(2 * _x(e) / _s(chi), 1.0))


def metric_ent(e: float, chi: float) -> EntMetric:
    """Fubini-Study metric of the two-spin manifold in ``(E, chi)`` coordinates.

    Parameters
    ----------
    e, chi : float
        A point strictly inside the reachable region, with ``E > 0`` and
        ``sin chi != 0``.

    Returns
    -------
    EntMetric
        ``g_ec`` is half the ``dE dchi`` coefficient of the line element.

    Raises
    ------
    BoundarySingularError
        On the reachability boundary ``2 sqrt(E(1-E)) = |sin chi|``, where
        ``g_ee`` diverges; use ``metric_ent_diagonal`` there.
    """
    _check_sin(chi)
    _check_reachable(e, chi)
    if e <= 0:
        raise SingularMetricError("g_ee diverges at E = 0")
    x, s = _x(e), _s(chi)
    gap = s - 2 * x
    if gap <= REACH_TOL:
        raise BoundarySingularError(f"(E={e}, chi={chi}) lies on the reachability boundary")
    cot = np.cos(chi) / np.sin(chi)
    g_ee = (2 * e - 1) ** 2 / (16 * x**3 * gap)
    g_ec = (2 * e - 1) * cot / (8 * x * gap)
    g_cc = x / s**2 * (np.cos(chi) ** 2 / (4 * gap) + (s - x))
    return EntMetric(float(g_ee), float(g_ec), float(g_cc))


def diagonal_g_cc(e_r: float) -> float:
    """``dchi^2`` coefficient ``E_r (2 - E_r) / 4`` of the diagonal chart; finite on ``[0, 1]``."""
    if not (0.0 <= e_r <= 1.0):
        raise DomainError(f"reduced entanglement must lie in [0, 1], got {e_r!r}")
    return float(e_r * (2 - e_r) / 4)


def metric_ent_diagonal(e_r: float) -> DiagonalEntMetric:
    """Diagonal metric ``dE_r^2 / (8 E_r (1 - E_r)) + E_r (2 - E_r) dchi^2 / 4``."""
    g_cc = diagonal_g_cc(e_r)
    if e_r in (0.0, 1.0):
        raise SingularMetricError(f"g_rr diverges at E_r = {e_r}")
    return DiagonalEntMetric(float(1 / (8 * e_r * (1 - e_r))), g_cc)


def _curvature_terms(x, s):
    num = (2 * x - 3 * s) * s
    den = 4 * (x - s) ** 2
    return num, den


def curvature_ent(e: float, chi: float, static_limit: bool = False) -> float:
    """Curvature ``8 (2 + (2x - 3s) s / (4 (x - s)^2))`` in entanglement coordinates.

    ``static_limit=True`` returns the ``chi -> 0`` value 16 instead of
    evaluating the 0/0 form; it is only accepted when ``sin chi = 0``.
    Reachability is not required, so the formula can be probed off the
    physical region as well.
    """
    _check_e(e)
    if static_limit:
        if _s(chi) > SIN_TOL:
            raise DomainError(f"static_limit requires sin(chi) = 0, got chi={chi}")
        return STATIC_CURVATURE
    num, den = _curvature_terms(_x(e), _s(chi))
    if den <= 0:
        raise SingularMetricError(f"sqrt(E(1-E)) = |sin chi| at (E={e}, chi={chi})")
    return float(8 * (2 + num / den))


def curvature_negative(e: float, chi: float) -> bool:
    """``(2x - 3s) s < -8 (x - s)^2``, the condition for negative curvature."""
    _check_e(e)
    x, s = _x(e), _s(chi)
    if x == s:
        raise SingularMetricError(f"sqrt(E(1-E)) = |sin chi| at (E={e}, chi={chi})")
    return bool((2 * x - 3 * s) * s < -8 * (x - s) ** 2)


def curvature_min(theta: float, chi: float) -> float:
    """Curvature at the maximally entangled point ``E = entanglement_max(theta)``."""
    sv.check_theta(theta)
    st2, s = np.sin(theta) ** 2, _s(chi)
    den = (st2 - 2 * s) ** 2
    if den == 0:
        raise SingularMetricError(f"sin^2 theta = 2 |sin chi| at theta={theta}, chi={chi}")
    return float(8 * (2 + (st2 - 3 * s) * s / den))


def geometric_phase_ent(e: float, chi: float) -> float:
    """Geometric phase ``-arg-term + chi (1 - x/s)`` with a two-argument arctangent.

    Comparable to ``phases.geometric_phase(2, theta, chi)`` modulo 2*pi.
    """
    _check_sin(chi)
    _check_reachable(e, chi)
    x, s = _x(e), _s(chi)
    total = np.arctan2(-(s - x) * np.sin(chi), (s - x) * np.cos(chi) + x)
    return float(total + chi * (1 - x / s))


def critical_entanglement_phase_closed(chi: float) -> float:
    """Closed-form location of the geometric-phase minimum (NaN where the radicand is negative)."""
    c = chi
    with np.errstate(invalid="ignore", divide="ignore"):
        inner_root = np.sqrt(c**3 * (2 - c / np.tan(c / 2)) / np.sin(c / 2) ** 5 / np.cos(c / 2) ** 11)
        radicand = (
            2
            + 2 * np.cos(c)
            + np.cos(2 * c)
            - 2 * (1 + np.cos(c)) * np.sin(c) / c
            + 8 * np.cos(c / 2) ** 8 * np.sin(c / 2) ** 4 * inner_root / c**2
        )
        return float(0.5 * (1 - np.sqrt(radicand)))


def _is_unimodal_min(values):
    i = int(np.argmin(values))
    d = np.diff(values)
    return 0 < i < len(values) - 1 and bool(np.all(d[:i] < 0) and np.all(d[i:] > 0))


def critical_entanglement_phase_numeric(chi: float, grid: int = 1000, xatol: float = 1e-10) -> float:
    """Minimizer of ``geometric_phase_ent(., chi)`` over ``(0, entanglement_reach(chi))``.

    A grid scan first checks that the phase is unimodal with an interior
    minimum; then a bounded Brent search refines it.
    """
    _check_sin(chi)
    lo, hi = 1e-9, entanglement_reach(chi) - 1e-9
    if hi <= lo:
        raise DomainError(f"no reachable entanglement interval at chi={chi}")
    es = np.linspace(lo, hi, grid)
    vals = np.array([geometric_phase_ent(e, chi) for e in es])
    if not _is_unimodal_min(vals):
        raise DomainError(f"geometric phase has no unique interior minimum at chi={chi}")
    i = int(np.argmin(vals))
    bounds = (es[max(i - 1, 0)], es[min(i + 1, grid - 1)])
    res = minimize_scalar(lambda e: geometric_phase_ent(e, chi), bounds=bounds, method="bounded", options={"xatol": xatol})
    return float(res.x)


def critical_entanglement_phase(chi: float) -> tuple[float, float]:
    """Return ``(closed, numeric)`` critical entanglement of the geometric phase.

    The numeric minimizer is the reference value; the closed form is
    evaluated as written and its deviation is only logged.
    """
    numeric = critical_entanglement_phase_numeric(chi)
    closed = critical_entanglement_phase_closed(chi)
    log.info("critical entanglement at chi=%.6g: closed=%.10g numeric=%.10g diff=%.3g", chi, closed, numeric, closed - numeric)
    return closed, numeric


def aa_phase_ent(e: float, chi: float) -> float:
    """Cyclic geometric phase ``-2 pi sqrt(E(1-E)) / |sin chi| = -pi E_r``."""
    _check_sin(chi)
    _check_reachable(e, chi)
    return float(-2 * np.pi * _x(e) / _s(chi))


def _motion_root(e, chi):
    _check_sin(chi)
    _check_reachable(e, chi)
    x, s = _x(e), _s(chi)
    return np.sqrt(max(x * (s - x), 0.0)) / s


def speed_ent(e: float, chi: float, J: float = 1.0) -> float:
    """``V = (J / |sin chi|) sqrt(x (|sin chi| - x))``."""
    return float(J * _motion_root(e, chi))


def critical_entanglement_speed(chi: float) -> float:
    """Entanglement at which ``speed_ent`` peaks (value ``J/2``).

    This is ``(1 - |cos chi|) / 2``, i.e. ``sin^2(chi/2)`` for
    ``|cos chi| = cos chi`` and its mirror ``cos^2(chi/2)`` otherwise, since
    entanglement never exceeds 1/2.
    """
    _check_sin(chi)
    return entanglement_reach(chi)


def speed_ent_argmax(chi: float, J: float = 1.0, xatol: float = 1e-12) -> tuple[float, float]:
    """Numerically maximize ``speed_ent`` over reachable ``E``; returns ``(E, V)``."""
    _check_sin(chi)
    hi = entanglement_reach(chi)
    res = minimize_scalar(lambda e: -speed_ent(min(e, hi), chi, J), bounds=(0.0, hi), method="bounded", options={"xatol": xatol})
    e = float(min(res.x, hi))
    return e, speed_ent(e, chi, J)


def distance_ent(e: float, chi: float) -> float:
    """Fubini-Study distance ``chi * speed_ent / J``."""
    if chi < 0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    return float(chi * _motion_root(e, chi))


def optimal_time_ent(e: float, chi: float, J: float = 1.0) -> float:
    """``tau = S / V_max`` with ``V_max = J/2``; never exceeds ``t = chi / J``."""
    if chi < 0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    return float(2 * chi / J * _motion_root(e, chi))


def optimal_metric_ent(e: float, chi: float) -> float:
    """Coefficient of ``dvartheta^2`` on the optimal manifold, ``(speed_ent / J)^2``."""
    return float(_motion_root(e, chi) ** 2)
