"""Total, dynamical, geometric, Aharonov-Anandan and topological phases.

Phase values from two routes are only comparable modulo 2*pi; use
``wrap_phase`` / ``phase_distance`` for that.  Total phases are computed with
a two-argument arctangent so the quadrant is always correct.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import binom

from . import statevector as sv
from .errors import DomainError, PhaseUndefinedError

OVERLAP_TOL = 1e-10
CYCLE_CHI = 2 * np.pi


@dataclass(frozen=True)
class PhaseSet:
    """Phases at one point; ``total`` is principal, ``dynamical`` is unbounded."""

    total: float
    dynamical: float
    geometric: float
    unwrapped_total: float | None = None

    @property
    def geometric_wrapped(self) -> float:
        return wrap_phase(self.geometric)


@dataclass(frozen=True)
class CyclicPhase:
    aa: float
    topological: float
    period_chi: float = CYCLE_CHI


def wrap_phase(x):
    """Map onto the principal branch ``(-pi, pi]``."""
    w = np.pi - np.mod(np.pi - np.asarray(x, dtype=float), 2 * np.pi)
    return float(w) if np.ndim(w) == 0 else w


def phase_distance(a, b):
    """Distance between two phases on the circle, in ``[0, pi]``."""
    return np.abs(wrap_phase(np.asarray(a) - np.asarray(b)))


def unwrap_phases(values):
    """Nearest-branch continuation of a sequence of phases along a sweep."""
    return np.unwrap(np.asarray(values, dtype=float))


def overlap_closed(n: int, theta: float, chi: float) -> complex:
    """``<psi_i|psi(chi)> = sum_p C(n,p) tan^{2p}(t/2) cos^{2n}(t/2) exp(-i chi (n-2p)^2/4)``."""
    sv.check_n(n)
    sv.check_theta(theta)
    p = np.arange(n + 1)
    # binomial pmf == C(n,p) tan^2p cos^2n, stable for large n
    w = binom.pmf(p, n, np.sin(theta / 2) ** 2)
    return complex(np.sum(w * np.exp(-1j * chi * (n - 2 * p) ** 2 / 4)))


def _arg(z):
    if abs(z) < OVERLAP_TOL:
        raise PhaseUndefinedError(f"|overlap| = {abs(z):.3g} < {OVERLAP_TOL}: states are orthogonal")
    return float(np.arctan2(z.imag, z.real))


def total_phase_closed(n: int, theta: float, chi: float) -> float:
    """Principal value of ``arg <psi_i|psi(chi)>`` from the binomial sum.

    Raises
    ------
    PhaseUndefinedError
        When the evolved state is (numerically) orthogonal to the initial one.
    """
    return _arg(overlap_closed(n, theta, chi))


def total_phase_numeric(params: sv.EnsembleParams, t: float) -> float:
    """``arg <psi_i|psi(t)>`` from the statevector oracle."""
    psi0 = sv.build_initial_state(params)
    return _arg(sv.overlap(psi0, sv.evolve(psi0, params.J, t)))


def dynamical_phase(n: int, theta: float, chi: float) -> float:
    """``-(n chi / 4) [(n-1) cos^2(theta) + 1]``, i.e. ``-<H> t``."""
    sv.check_n(n)
    sv.check_theta(theta)
    return float(-n * chi / 4 * ((n - 1) * np.cos(theta) ** 2 + 1))


def geometric_phase(n: int, theta: float, chi: float) -> float:
    """Total (principal) minus dynamical phase; not branch-reduced."""
    return total_phase_closed(n, theta, chi) - dynamical_phase(n, theta, chi)


def phase_set(n: int, theta: float, chi: float) -> PhaseSet:
    total = total_phase_closed(n, theta, chi)
    dyn = dynamical_phase(n, theta, chi)
    return PhaseSet(total=total, dynamical=dyn, geometric=total - dyn)


def phase_sweep(n: int, theta: float, chis) -> list[PhaseSet]:
    """Phases along a ``chi`` sweep with a continuous ``unwrapped_total``.

    Points with an undefined total phase are skipped by the unwrapping pass
    and reported with NaN entries.
    """
    chis = np.asarray(chis, dtype=float)
    totals = np.full(chis.shape, np.nan)
    for i, c in enumerate(chis):
        try:
            totals[i] = total_phase_closed(n, theta, c)
        except PhaseUndefinedError:
            pass
    ok = ~np.isnan(totals)
    unwrapped = np.full(chis.shape, np.nan)
    unwrapped[ok] = unwrap_phases(totals[ok])
    out = []
    for c, tot, unw in zip(chis, totals, unwrapped):
        dyn = dynamical_phase(n, theta, c)
        out.append(PhaseSet(float(tot), dyn, float(unw - dyn), float(unw)))
    return out


def aa_phase_closed(n: int, theta: float) -> float:
    """Cyclic geometric phase ``-(n pi / 2)(n-1) sin^2(theta)``."""
    sv.check_n(n)
    sv.check_theta(theta)
    return float(-n * np.pi / 2 * (n - 1) * np.sin(theta) ** 2)


def topological_phase(n: int) -> float:
    """``-pi n^2 / 2``: the part of the cyclic phase that carries no dynamics."""
    sv.check_n(n)
    return -np.pi * n * n / 2


def cyclic_phase(n: int, theta: float) -> CyclicPhase:
    return CyclicPhase(aa=aa_phase_closed(n, theta), topological=topological_phase(n))


def _cycle_integrals(n, theta, steps, chunk=2048):
    psi0 = sv.build_initial_state(sv.EnsembleParams(n, 1.0, theta, 0.0))
    h = sv.hamiltonian(n, 1.0).entries
    a0 = psi0.amplitudes
    chis = np.linspace(0.0, CYCLE_CHI, steps + 1)
    ovl = np.empty(chis.size, dtype=complex)
    energy = np.empty(chis.size)
    for start in range(0, chis.size, chunk):
        c = chis[start : start + chunk]
        states = a0[None, :] * np.exp(-1j * c[:, None] * h[None, :])
        ovl[start : start + chunk] = states @ a0.conj()
        energy[start : start + chunk] = (np.abs(states) ** 2) @ h
    ok = np.abs(ovl) >= OVERLAP_TOL
    phases = np.angle(ovl[ok])
    # sum of branch-reduced increments = integral of d(gamma_tot) over the cycle
    d_total = float(np.sum(wrap_phase(np.diff(phases))))
    d_dynamic = float(np.trapezoid(energy, chis))
    return d_total, d_dynamic


def aa_phase_numeric(n: int, theta: float, steps: int = 10_000) -> float:
    """Cyclic phase from the oracle: ``int d(gamma_tot) + int <H> dt`` over one period.

    Parameters
    ----------
    n : int
        Particle count, ``<= N_MAX``.
    theta : float
        Polar angle of the initial state.
    steps : int
        Number of trapezoid intervals over ``chi in [0, 2 pi]`` (J = 1).

    Returns
    -------
    float
        Comparable to ``aa_phase_closed`` modulo 2*pi.
    """
    if steps < 1000:
        raise DomainError(f"steps must be >= 1000, got {steps}")
    sv.check_theta(theta)
    d_total, d_dynamic = _cycle_integrals(n, theta, steps)
    return d_total + d_dynamic


def aa_dynamic_integral(n: int, theta: float, steps: int = 10_000) -> float:
    """The raw integral ``i int <psi|d_t psi> dt = int <H> dt`` over one cycle."""
    return _cycle_integrals(n, theta, steps)[1]
