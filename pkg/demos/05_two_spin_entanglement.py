"""Two spins: entanglement as a coordinate for curvature, phases and speed.

Run: python3 demos/05_two_spin_entanglement.py
"""

import numpy as np

from qgeom import entanglement as ent

theta = np.pi / 2
print("E(theta=pi/2, chi) against the Bloch-vector value")
for chi in np.linspace(0, np.pi, 7):
    print(f"  chi={chi:5.3f}  E={ent.entanglement(theta, chi):.6f}  oracle={ent.entanglement_numeric(theta, chi):.6f}")

chi = 1.0
reach = ent.entanglement_reach(chi)
print(f"\nat chi={chi} the reachable entanglement is E <= {reach:.6f}")
print("    E      R        gamma_g    gamma_AA     V       tau")
for e in np.linspace(0, reach - 1e-6, 6):
    print(f"{e:.4f}  {ent.curvature_ent(e, chi):7.3f}  {ent.geometric_phase_ent(e, chi):+.5f}  "
          f"{ent.aa_phase_ent(e, chi):+.5f}  {ent.speed_ent(e, chi):.5f}  {ent.optimal_time_ent(e, chi):.5f}")

closed, numeric = ent.critical_entanglement_phase(chi)
print(f"\ngeometric-phase minimum: numeric E={numeric:.10f}, closed form E={closed:.10f}")
e_star, v_star = ent.speed_ent_argmax(chi)
print(f"speed peak: E={e_star:.8f} (threshold {ent.critical_entanglement_speed(chi):.8f}), V={v_star:.8f}")
