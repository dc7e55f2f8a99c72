"""Fubini-Study metric, Christoffel symbols and curvature of the n-spin state manifold.

Coordinates are ``(theta, phi, chi)``.  The metric is independent of ``phi``
and ``chi``; after dropping ``phi`` the manifold is the two-dimensional
surface ``dS^2 = g_tt dtheta^2 + g_cc dchi^2``.

Every closed form has a numeric counterpart: ``metric_numeric`` works from
statevector tangents and ``curvature_numeric`` differentiates the analytic
metric by finite differences.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import statevector as sv
from .errors import DomainError, MetricDegenerateWarning, SingularMetricError

POLE_EPS = 1e-3
CURVATURE_WINDOW = 0.2


@dataclass(frozen=True)
class Metric2:
    """Reduced metric in ``(theta, chi)``."""

    g_tt: float
    g_cc: float
    g_tc: float = 0.0

    def matrix(self) -> np.ndarray:
        return np.array([[self.g_tt, self.g_tc], [self.g_tc, self.g_cc]])


@dataclass(frozen=True)
class Metric3:
    """Full metric in ``(theta, phi, chi)``; ``g_pc`` is the symmetric-tensor component."""

    g_tt: float
    g_pp: float
    g_cc: float
    g_pc: float
    g_tp: float = 0.0
    g_tc: float = 0.0

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.g_tt, self.g_tp, self.g_tc],
                [self.g_tp, self.g_pp, self.g_pc],
                [self.g_tc, self.g_pc, self.g_cc],
            ]
        )


@dataclass(frozen=True)
class Christoffel:
    gamma_c_tt: float
    gamma_c_tc: float


def _g_cc(n, theta):
    s2 = np.sin(theta) ** 2
    return n * (n - 1) * s2 * (1 + (2 * n - 3) * np.cos(theta) ** 2) / 8


def _dg_cc(n, theta):
    # d/dtheta of n(n-1)/8 * (sin^2 t + (2n-3)/4 sin^2 2t)
    return n * (n - 1) / 8 * (np.sin(2 * theta) + (2 * n - 3) / 2 * np.sin(4 * theta))


def metric_reduced(n: int, theta: float) -> Metric2:
    """``g_tt = n/4`` and ``g_cc = n(n-1) sin^2(t) [1 + (2n-3) cos^2(t)] / 8``.

    ``g_cc`` vanishes at the poles and for a single spin.
    """
    sv.check_n(n)
    sv.check_theta(theta)
    return Metric2(g_tt=n / 4, g_cc=float(_g_cc(n, theta)))


def metric_full(n: int, theta: float) -> Metric3:
    """Three-parameter metric including the ``phi``-``chi`` cross component.

    The cross component is ``g_pc = n(n-1) sin(2 theta) sin(theta) / 8``, so the
    line element carries ``2 g_pc dphi dchi``.
    """
    red = metric_reduced(n, theta)
    return Metric3(
        g_tt=red.g_tt,
        g_pp=n / 4 * np.sin(theta) ** 2,
        g_cc=red.g_cc,
        g_pc=n * (n - 1) * np.sin(2 * theta) * np.sin(theta) / 8,
    )


def metric_numeric(params: sv.EnsembleParams, chi: float, step: float = 1e-5) -> Metric3:
    """Quantum geometric tensor ``Re[<d_a psi|d_b psi> - <d_a psi|psi><psi|d_b psi>]``.

    Parameters
    ----------
    params : EnsembleParams
        ``theta`` must keep a distance ``POLE_EPS`` from the poles.
    chi : float
        Evolution parameter ``J t``.
    step : float
        Central-difference step for the ``theta`` and ``phi`` tangents.

    Returns
    -------
    Metric3
        ``g_cc`` is the exact variance of ``H/J`` rather than a tangent product.
    """
    if not (POLE_EPS <= params.theta <= np.pi - POLE_EPS):
        raise DomainError(f"theta={params.theta} too close to a pole for finite differencing")
    p1 = sv.EnsembleParams(params.n, 1.0, params.theta, params.phi)
    psi = sv.state_at(p1, chi).amplitudes
    tangents = {w: sv.parametric_derivative(p1, chi, w, step).amplitudes for w in ("theta", "phi", "chi")}
    conn = {w: np.vdot(psi, d) for w, d in tangents.items()}

    def g(a, b):
        return float((np.vdot(tangents[a], tangents[b]) - np.conj(conn[a]) * conn[b]).real)

    mean, second = sv.energy_moments(sv.StateVector(params.n, psi), sv.hamiltonian(params.n, 1.0))
    return Metric3(
        g_tt=g("theta", "theta"),
        g_pp=g("phi", "phi"),
        g_cc=second - mean**2,
        g_pc=g("phi", "chi"),
        g_tp=g("theta", "phi"),
        g_tc=g("theta", "chi"),
    )


def christoffel(n: int, theta: float) -> Christoffel:
    """Nonzero-candidate symbols ``Gamma^chi_tt`` and ``Gamma^chi_tc`` of the reduced metric."""
    sv.check_n(n)
    sv.check_theta(theta)
    if n < 2 or theta in (0.0, np.pi):
        raise SingularMetricError(f"g_cc vanishes at n={n}, theta={theta}")
    g = _g_cc(n, theta)
    if g <= 0:
        raise SingularMetricError(f"g_cc vanishes at n={n}, theta={theta}")
    # g_tt = n/4 carries no chi dependence
    return Christoffel(gamma_c_tt=0.0, gamma_c_tc=float(_dg_cc(n, theta) / (2 * g)))


def curvature_closed(n: int, theta: float) -> float:
    """Scalar curvature ``(16/n) [2 + (k s - 3(n-1)) / (k s - 2(n-1))^2]``, ``k = 2n-3``, ``s = sin^2 theta``.

    The expression stays finite at the poles, but the metric degenerates
    there; a ``MetricDegenerateWarning`` is issued in that case.
    """
    sv.check_n(n, minimum=2)
    sv.check_theta(theta)
    if theta in (0.0, np.pi):
        warnings.warn(
            f"curvature evaluated at pole theta={theta}: g_cc = 0, the metric is degenerate",
            MetricDegenerateWarning,
            stacklevel=2,
        )
    k = 2 * n - 3
    s2 = np.sin(theta) ** 2
    return float(16 / n * (2 + (k * s2 - 3 * (n - 1)) / (k * s2 - 2 * (n - 1)) ** 2))


def _central(f, x, h, richardson):
    d = (f(x + h) - f(x - h)) / (2 * h)
    if not richardson:
        return d
    d2 = (f(x + h / 2) - f(x - h / 2)) / h
    return (4 * d2 - d) / 3


def curvature_numeric(n: int, theta: float, chi: float = 0.0, step: float = 1e-3, richardson: bool = True) -> float:
    """Curvature from the Christoffel-symbol expression, by finite differences.

    Evaluates
    ``R = 2/sqrt(g_tt g_cc) [d_chi(G^chi_tt sqrt(g_cc/g_tt)) - d_theta(G^chi_tc sqrt(g_cc/g_tt))]``
    where every derivative, including those inside the Christoffel symbols,
    is a central difference of ``metric_reduced``.  The analytic metric is
    treated as a function of both coordinates even though it ignores ``chi``.

    The default (step 1e-3 with one Richardson stage) keeps both truncation
    and round-off near 1e-8 relative; plain differences at step 1e-4 leave
    errors around 1e-6.
    """
    sv.check_n(n, minimum=2)
    if not (CURVATURE_WINDOW <= theta <= np.pi - CURVATURE_WINDOW):
        raise DomainError(f"theta={theta} outside the differencing window [0.2, pi-0.2]")

    def gtt(t, c):
        return metric_reduced(n, t).g_tt

    def gcc(t, c):
        return metric_reduced(n, t).g_cc

    def gamma_tt(t, c):
        return -_central(lambda cc: gtt(t, cc), c, step, richardson) / (2 * gcc(t, c))

    def gamma_tc(t, c):
        return _central(lambda tt: gcc(tt, c), t, step, richardson) / (2 * gcc(t, c))

    def scale(t, c):
        return np.sqrt(gcc(t, c) / gtt(t, c))

    d_chi = _central(lambda c: gamma_tt(theta, c) * scale(theta, c), chi, step, richardson)
    d_theta = _central(lambda t: gamma_tc(t, chi) * scale(t, chi), theta, step, richardson)
    return float(2 / np.sqrt(gtt(theta, chi) * gcc(theta, chi)) * (d_chi - d_theta))
