"""How fast the ensemble moves and how much a larger ensemble shortens the optimal time.

Run: python3 demos/04_brachistochrone.py
"""

from qgeom import dynamics as dyn

print(" n   theta_max   V_max     t_min/t")
for n in (2, 3, 4, 8, 16, 64, 1024):
    print(f"{n:4d}  {dyn.theta_max(n):.6f}  {dyn.speed_max(n):9.4f}  {dyn.brachistochrone_time(n, 1.0):.6f}")

theta, v = dyn.speed_argmax_numeric(6)
print(f"\nnumerical maximum for n=6: theta={theta:.10f}, V={v:.10f}")
print(dyn.brachistochrone_report(4, 1.0, J=1.0, t=2.0))
