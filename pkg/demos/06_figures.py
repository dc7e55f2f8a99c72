"""Write every figure dataset (CSV, JSON, SVG) into ./figures.

Run: python3 demos/06_figures.py [out_dir]
Same as: qgeom figure <id> --out-dir <out_dir>
"""

import sys

from qgeom import sweep

out_dir = sys.argv[1] if len(sys.argv) > 1 else "figures"
for fig in sweep.FIGURES:
    paths = sweep.reproduce_figure(fig, out_dir)
    table = sweep.figure_table(fig)
    print(f"{fig}: {len(table.rows):5d} rows of {', '.join(table.columns)} -> {paths[0].parent}/{fig}.*")
