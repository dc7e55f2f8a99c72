"""Evolution speed, Fubini-Study distance and the brachistochrone time."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import statevector as sv
from .errors import DomainError


@dataclass(frozen=True)
class BrachistochroneReport:
    v: float
    v_max: float
    theta_max: float
    s: float
    s_min: float
    t_min: float
    chi_min: float


def _radicand(n, theta):
    return n * (n - 1) * np.sin(theta) ** 2 * (0.5 + (n - 1.5) * np.cos(theta) ** 2)


def _radicand_slope(n, theta):
    s, c = np.sin(theta), np.cos(theta)
    return n * (n - 1) * s * c * (1 + (2 * n - 3) * (c * c - s * s))


def speed(n: int, theta: float, J: float = 1.0) -> float:
    """``V = (J/2) sqrt(n(n-1) sin^2 t [1/2 + (n - 3/2) cos^2 t])``; equals ``J sqrt(g_cc)``."""
    sv.check_n(n)
    sv.check_theta(theta)
    return float(J / 2 * np.sqrt(_radicand(n, theta)))


def theta_max(n: int) -> float:
    """Polar angle in ``(0, pi/2]`` maximizing the speed; ``pi - theta_max`` is the mirror maximum."""
    sv.check_n(n, minimum=2)
    return float(np.arccos(np.sqrt((n - 2) / (2 * n - 3))))


def speed_max(n: int, J: float = 1.0) -> float:
    """``V_max = (J/2)(n-1) sqrt(n(n-1) / (2(2n-3)))``."""
    sv.check_n(n, minimum=2)
    return float(J / 2 * (n - 1) * np.sqrt(n * (n - 1) / (2 * (2 * n - 3))))


def speed_argmax_numeric(n: int, J: float = 1.0, xatol: float = 1e-10) -> tuple[float, float]:
    """Numerically maximize ``speed`` over ``theta``; returns ``(theta, speed)``.

    A bounded Brent search on ``[0.01, pi/2 + 0.2]`` (which contains
    ``theta_max`` but not its mirror) locates the peak, then the zero of the
    slope is polished with ``brentq``.  The polish matters for ``n = 2``,
    where the speed is flat to fourth order at the peak and values alone
    cannot resolve it below about 1e-4.
    """
    sv.check_n(n, minimum=2)
    res = minimize_scalar(
        lambda t: -_radicand(n, t),
        bounds=(0.01, np.pi / 2 + 0.2),
        method="bounded",
        options={"xatol": xatol},
    )
    theta = float(res.x)
    lo, hi = theta - 0.05, theta + 0.05
    if _radicand_slope(n, lo) > 0 > _radicand_slope(n, hi):
        theta = float(brentq(lambda t: _radicand_slope(n, t), lo, hi, xtol=1e-15))
    return theta, speed(n, theta, J)


def fs_distance(n: int, theta: float, chi: float) -> float:
    """Distance ``S = (chi/2) sqrt(...)`` covered in time ``chi / J``; linear in ``chi``."""
    sv.check_n(n)
    sv.check_theta(theta)
    if chi < 0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    return float(chi / 2 * np.sqrt(_radicand(n, theta)))


def fs_distance_min(n: int, chi: float) -> float:
    """``S_min = (n chi / 2) sqrt((1 - 1/n) / 2)``, the value at ``theta = pi/2``."""
    sv.check_n(n, minimum=2)
    if chi < 0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    return float(n * chi / 2 * np.sqrt(0.5 * (1 - 1 / n)))


def brachistochrone_time(n: int, t: float) -> float:
    """Minimal time ``t sqrt(2n-3) / (n-1)``, i.e. ``S_min / V_max``."""
    sv.check_n(n, minimum=2)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    return float(t * np.sqrt(2 * n - 3) / (n - 1))


def optimal_metric(n: int, theta: float) -> float:
    """Coefficient of ``dchi_min^2`` on the optimal manifold (same as ``g_cc``)."""
    sv.check_n(n, minimum=2)
    sv.check_theta(theta)
    return float(n * (n - 1) * np.sin(theta) ** 2 * (1 + (2 * n - 3) * np.cos(theta) ** 2) / 8)


def brachistochrone_report(n: int, theta: float, J: float, t: float) -> BrachistochroneReport:
    chi = J * t
    t_min = brachistochrone_time(n, t)
    return BrachistochroneReport(
        v=speed(n, theta, J),
        v_max=speed_max(n, J),
        theta_max=theta_max(n),
        s=fs_distance(n, theta, chi),
        s_min=fs_distance_min(n, chi),
        t_min=t_min,
        chi_min=J * t_min,
    )
