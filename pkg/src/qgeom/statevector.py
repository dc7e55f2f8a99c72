"""Exact statevector engine for the all-range Ising model.

The Hamiltonian ``H = J (sum_i S^z_i)^2`` is diagonal in the computational
basis, so every operation here is a pointwise multiplication on a vector of
``2**n`` amplitudes.  Basis index ``b`` stores spin ``i`` in bit ``i``; a zero
bit is spin up (m = +1/2), so ``popcount(b)`` counts the down spins.

Units: hbar = 1 and ``chi = J * t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

N_MAX = 24
NORM_TOL = 1e-12


@dataclass(frozen=True)
class EnsembleParams:
    """Particle count, coupling and Bloch angles of the initial product state."""

    n: int
    J: float = 1.0
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        check_n(self.n)
        check_theta(self.theta)


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2**self.n,):
            raise DomainError(f"expected {2**self.n} amplitudes for n={self.n}, got shape {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)


@dataclass(frozen=True, eq=False)
class DiagonalHamiltonian:
    n: int
    J: float
    entries: np.ndarray


def check_n(n, minimum=1):
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise DomainError(f"particle count must be an integer >= {minimum}, got {n!r}")


def check_theta(theta):
    if not (0.0 <= theta <= np.pi):
        raise DomainError(f"theta must lie in [0, pi], got {theta!r}")


def _check_oracle_n(n):
    check_n(n)
    if n > N_MAX:
        raise DomainError(f"statevector oracle supports n <= {N_MAX}, got {n}")


@lru_cache(maxsize=8)
def popcounts(n: int) -> np.ndarray:
    """Number of down spins for every basis index (read-only, cached)."""
    pc = np.bitwise_count(np.arange(2**n, dtype=np.uint32)).astype(np.int8)
    pc.setflags(write=False)
    return pc


def _spectrum_by_popcount(n):
    p = np.arange(n + 1)
    return (n - 2 * p) ** 2 / 4.0


def _evolve_chi(amplitudes, n, chi):
    phases = np.exp(-1j * chi * _spectrum_by_popcount(n))
    return amplitudes * phases[popcounts(n)]


def build_initial_state(params: EnsembleParams) -> StateVector:
    """Spin-coherent product state ``|S>^{(x)n}`` with ``|S> = cos(t/2)|up> + e^{i phi} sin(t/2)|down>``.

    Parameters
    ----------
    params : EnsembleParams
        ``n`` must not exceed ``N_MAX``.

    Returns
    -------
    StateVector
        ``amplitude(b) = cos^(n-p)(theta/2) sin^p(theta/2) exp(i p phi)`` with
        ``p = popcount(b)``.
    """
    _check_oracle_n(params.n)
    n = params.n
    p = np.arange(n + 1)
    c, s = np.cos(params.theta / 2), np.sin(params.theta / 2)
    by_p = c ** (n - p) * s**p * np.exp(1j * p * params.phi)
    return StateVector(n, by_p[popcounts(n)])


def hamiltonian(n: int, J: float) -> DiagonalHamiltonian:
    """Diagonal of ``J (sum S^z)^2``: ``entry(b) = J (n - 2 popcount(b))^2 / 4``."""
    _check_oracle_n(n)
    entries = (J * _spectrum_by_popcount(n))[popcounts(n)]
    entries.setflags(write=False)
    return DiagonalHamiltonian(n, J, entries)


def evolve(state: StateVector, J: float, t: float) -> StateVector:
    """Apply ``exp(-i H t)``; only the product ``chi = J t`` matters."""
    return StateVector(state.n, _evolve_chi(state.amplitudes, state.n, J * t))


def state_at(params: EnsembleParams, t: float) -> StateVector:
    """Initial state of ``params`` evolved for time ``t``."""
    return evolve(build_initial_state(params), params.J, t)


def overlap(a: StateVector, b: StateVector) -> complex:
    """Inner product ``<a|b>``."""
    if a.n != b.n:
        raise DomainError(f"dimension mismatch: n={a.n} vs n={b.n}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def energy_moments(state: StateVector, h: DiagonalHamiltonian) -> tuple[float, float]:
    """Return ``(<H>, <H^2>)``; both are conserved because ``H`` is diagonal."""
    if state.n != h.n:
        raise DomainError(f"dimension mismatch: n={state.n} vs n={h.n}")
    prob = np.abs(state.amplitudes) ** 2
    return float(prob @ h.entries), float(prob @ h.entries**2)


def reduced_bloch_vector(state: StateVector, site: int) -> np.ndarray:
    """Pauli expectation values ``(<sx>, <sy>, <sz>)`` of one spin.

    Parameters
    ----------
    state : StateVector
    site : int
        Spin index, ``0 <= site < n``; spin ``i`` is bit ``i`` of the basis index.

    Returns
    -------
    ndarray, shape (3,)
    """
    n = state.n
    if not (0 <= site < n):
        raise DomainError(f"site must lie in [0, {n}), got {site}")
    # C-order reshape puts bit n-1 on axis 0
    psi = state.amplitudes.reshape((2,) * n)
    psi = np.moveaxis(psi, n - 1 - site, 0).reshape(2, -1)
    rho = psi @ psi.conj().T
    return np.array([2 * rho[0, 1].real, -2 * rho[0, 1].imag, (rho[0, 0] - rho[1, 1]).real])


def parametric_derivative(params: EnsembleParams, t: float, which: str, step: float = 1e-5) -> StateVector:
    """Tangent ``d|psi(theta, phi, chi)>/d(which)`` at ``chi = params.J * t``.

    ``which`` is ``"theta"`` or ``"phi"`` (central differences, error O(step^2))
    or ``"chi"`` (exact: ``-i (H/J) |psi>``).  The result is not normalized.
    """
    chi = params.J * t
    if which == "chi":
        psi = state_at(params, t)
        gen = _spectrum_by_popcount(params.n)[popcounts(params.n)]
        return StateVector(params.n, -1j * gen * psi.amplitudes)
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if which == "theta":
        if params.theta - step < 0 or params.theta + step > np.pi:
            raise DomainError(f"theta +/- step leaves [0, pi] at theta={params.theta}")
        lo = EnsembleParams(params.n, 1.0, params.theta - step, params.phi)
        hi = EnsembleParams(params.n, 1.0, params.theta + step, params.phi)
    elif which == "phi":
        lo = EnsembleParams(params.n, 1.0, params.theta, params.phi - step)
        hi = EnsembleParams(params.n, 1.0, params.theta, params.phi + step)
    else:
        raise DomainError(f"unknown parameter {which!r}; expected theta, phi or chi")
    a = state_at(lo, chi).amplitudes
    b = state_at(hi, chi).amplitudes
    return StateVector(params.n, (b - a) / (2 * step))
