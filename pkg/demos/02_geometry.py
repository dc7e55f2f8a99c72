"""Fubini-Study metric of the evolving ensemble and the curvature of the (theta, chi) manifold.

Run: python3 demos/02_geometry.py
"""

import numpy as np

from qgeom import geometry as geo
from qgeom import statevector as sv

n, theta, chi = 5, 1.1, 0.8
closed = geo.metric_full(n, theta)
numeric = geo.metric_numeric(sv.EnsembleParams(n, 1.0, theta), chi)
print(f"metric at n={n}, theta={theta}, chi={chi}")
print("            closed form        quantum geometric tensor")
for name in ("g_tt", "g_pp", "g_cc", "g_pc", "g_tc"):
    print(f"  {name}   {getattr(closed, name):18.12f}   {getattr(numeric, name):18.12f}")

print("\ncurvature R(theta); negative around the equator once n > 2")
print("theta   " + "".join(f"   n={k:<5d}" for k in range(2, 7)))
for t in np.linspace(0.2, np.pi / 2, 6):
    print(f"{t:5.3f}  " + "".join(f"{geo.curvature_closed(k, t):10.4f}" for k in range(2, 7)))

r_fd = geo.curvature_numeric(3, 0.7)
print(f"\nChristoffel-symbol route at n=3, theta=0.7: {r_fd:.10f} (closed {geo.curvature_closed(3, 0.7):.10f})")
