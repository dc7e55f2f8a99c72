"""Total, dynamical and geometric phases along the evolution, then the cyclic (AA) phase.

Run: python3 demos/03_phases.py
"""

import numpy as np

from qgeom import phases as ph

n, theta = 3, 0.9
print(f"n={n}, theta={theta}")
print("   chi    total   dynamical  geometric(unwrapped)")
for s, chi in zip(ph.phase_sweep(n, theta, np.linspace(0, 2 * np.pi, 9)), np.linspace(0, 2 * np.pi, 9)):
    print(f"{chi:6.3f}  {s.total:+.4f}  {s.dynamical:+9.4f}  {s.geometric:+.4f}")

print("\ncyclic phase over chi in [0, 2 pi]")
for n in range(2, 6):
    closed = ph.aa_phase_closed(n, theta)
    numeric = ph.aa_phase_numeric(n, theta)
    print(f"n={n}: closed {closed:+.6f}  integrated {numeric:+.6f}  "
          f"difference mod 2pi {ph.phase_distance(closed, numeric):.1e}  topological {ph.topological_phase(n):+.4f}")

# the total phase repeats after 4 pi only for even n; odd n needs 8 pi
for n in (2, 3):
    a, b = ph.total_phase_closed(n, theta, 0.5), ph.total_phase_closed(n, theta, 0.5 + 4 * np.pi)
    print(f"n={n}: total(0.5) = {a:+.6f}, total(0.5 + 4pi) = {b:+.6f}")
