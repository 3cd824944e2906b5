"""Sweep the bifurcation diagram m -> lambda(m) for the two headline models.

The inverse-square (MEMS) disc folds at the pull-in point (lambda*, m*) =
(0.789, 0.444): beyond that voltage the membrane snaps through.  The
exponential disc has the exact branch u = 2 log((1+c)/(1+c r^2)) with
lambda = 8c/(1+c)^2, so its fold sits at lambda* = 2, m* = 2 log 2 -- a free
end-to-end check of the solver.

Writes branch tables next to this script; plots them if matplotlib is around.
"""

import csv
import math
import pathlib

import numpy as np

from pullin import ProblemSpec, exponential, mems_inverse_power, solve_branch

HERE = pathlib.Path(__file__).parent


def sweep(name, problem, m_max):
    grid = np.geomspace(1e-3, m_max, 200)
    b = solve_branch(problem, grid)
    print(f"{name}: lambda* = {b.lambda_star:.6f}, pull-in distance = {b.m_star:.6f}"
          f" (fold {'found' if b.fold_found else 'NOT bracketed'})")
    path = HERE / f"branch_{name}.csv"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["m", "lambda"])
        w.writerows((p.m, p.lam) for p in b.points)
    print(f"  table -> {path}")
    return b


mems_branch = sweep("mems_disc", ProblemSpec(2.0, mems_inverse_power(2.0)), 1 - 1e-4)
exp_branch = sweep("exp_disc", ProblemSpec(2.0, exponential()), 40.0)

print(f"\nexponential disc closed form: lambda* = 2, m* = 2 log 2 = {2 * math.log(2):.6f}")
print(f"solver deviation: {abs(exp_branch.lambda_star - 2.0):.2e} in lambda*, "
      f"{abs(exp_branch.m_star - 2 * math.log(2)):.2e} in m*")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for ax, b, title in ((axes[0], mems_branch, "inverse-square disc"),
                         (axes[1], exp_branch, "exponential disc")):
        ax.plot(b.lambda_values, b.m_values, lw=1.2)
        ax.axvline(b.lambda_star, color="k", ls=":", lw=0.8)
        ax.set_xlabel(r"$\lambda$")
        ax.set_ylabel("center value m")
        ax.set_title(f"{title}: $\\lambda^*$={b.lambda_star:.4f}")
    fig.tight_layout()
    fig.savefig(HERE / "bifurcation_diagram.png", dpi=130)
    print(f"plot -> {HERE / 'bifurcation_diagram.png'}")
except ImportError:
    print("matplotlib not installed; skipped the plot")
