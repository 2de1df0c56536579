"""How long until a Kac ring repeats itself, as a function of size?

A classical pointer flips the ball entering site 0 every step, and the
dynamics is so rigid that every configuration returns to its start within
2n steps. A measured qubit pointer flips only half the time, and the
return time explodes to about 2**n. This script runs both sweeps, fits a
line to one and a geometric curve to the other, and writes the data plus
a pair of SVG charts into the working directory.
"""

import numpy as np

from kacring import PointerPolicy, fit_geometric, fit_linear, sweep_sites
from kacring.io import write_sweep_csv
from kacring.plots import line_chart

classical = sweep_sites(3, 48, 400, master_seed=1)
write_sweep_csv("scaling_classical.csv", classical)

points = np.asarray([(r.n, r.mean_recurrence) for r in classical])
line = fit_linear(points)
print("classical mean recurrence ~ "
      f"{line.params['slope']:.4f} * n + {line.params['intercept']:.4f}")

powers = points[np.isin(points[:, 0], [4, 8, 16, 32])]
print("restricted to power-of-2 sizes the slope is exactly",
      fit_linear(powers).params["slope"])

quantum = sweep_sites(2, 9, 1500, policy=PointerPolicy.QUANTUM, master_seed=2,
                      cap=1 << 14)
write_sweep_csv("scaling_quantum.csv", quantum)

qpoints = np.asarray([(r.n, r.mean_recurrence) for r in quantum])
geo = fit_geometric(qpoints)
print(f"quantum mean recurrence ~ {geo.params['prefactor']:.3f} * "
      f"{geo.params['base']:.3f} ** n")

line_chart(
    "scaling_classical.svg",
    [("measured", points[:, 0], points[:, 1]),
     ("2n", points[:, 0], 2.0 * points[:, 0])],
    "classical recurrence scales linearly", "sites", "mean recurrence time",
)
line_chart(
    "scaling_quantum.svg",
    [("measured", qpoints[:, 0], np.log2(qpoints[:, 1])),
     ("n", qpoints[:, 0], qpoints[:, 0])],
    "quantum recurrence scales exponentially", "sites", "log2 mean recurrence",
)
print("wrote scaling_classical.{csv,svg} and scaling_quantum.{csv,svg}")
