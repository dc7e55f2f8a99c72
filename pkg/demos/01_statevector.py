"""Build a spin-coherent ensemble, evolve it under J(S^z)^2 and watch it return.

Run: python3 demos/01_statevector.py
"""

import numpy as np

from qgeom import statevector as sv

params = sv.EnsembleParams(n=4, J=1.0, theta=np.pi / 3, phi=0.2)
psi0 = sv.build_initial_state(params)
h = sv.hamiltonian(params.n, params.J)

print(f"{params.n} spins, {psi0.amplitudes.size} amplitudes, norm {psi0.norm():.15f}")
print("distinct energies:", sorted(set(h.entries.tolist())))

# amplitudes only depend on how many spins point down
print("\n  chi     |<psi0|psi(chi)>|   <H>      |<sigma_0>|")
for chi in np.linspace(0, 2 * np.pi, 9):
    psi = sv.evolve(psi0, params.J, chi)
    mean, _ = sv.energy_moments(psi, h)
    bloch = np.linalg.norm(sv.reduced_bloch_vector(psi, 0))
    print(f"{chi:6.3f}   {abs(sv.overlap(psi0, psi)):.6f}        {mean:.6f}   {bloch:.6f}")

# even n comes back exactly after chi = 2 pi; odd n picks up exp(-i pi/2)
for n in (4, 5):
    p = sv.build_initial_state(sv.EnsembleParams(n, 1.0, 1.0))
    ratio = sv.overlap(p, sv.evolve(p, 1.0, 2 * np.pi))
    print(f"n={n}: <psi|U(2pi)|psi> = {ratio.real:+.3f}{ratio.imag:+.3f}i")
