"""Two-sided envelopes for minimal solutions near pull-in (singular regime).

For the exponential ball at N = 10 the extremal is the explicit singular
profile -2 log r at lambda* = 16.  At any lower voltage the minimal solution
is pinched between the convexity lower bound built on the voltage-rate
profile and the explicit supersolution.  Same story for the inverse-square
ball at N = 9 with lambda* = 46/9.
"""

import csv
import pathlib

import numpy as np

import pullin as pl

HERE = pathlib.Path(__file__).parent

for F, N in ((pl.exponential(), 10.0), (pl.mems_inverse_power(2.0), 9.0)):
    lam_star = pl.singular_extremal(F, N).lambda_star
    prob = pl.ProblemSpec(N, F)
    b = pl.solve_branch(prob)
    print(f"{F.label()} ball, N={N:g}: singular voltage {lam_star:.4f}, "
          f"branch sup {b.lambda_star:.4f}")
    r = np.geomspace(0.01, 1.0, 100)
    rows = []
    for frac in (0.5, 0.9):
        lam = frac * lam_star
        u = pl.minimal_solution(prob, lam, b)
        env = pl.asymptotic_envelopes(F, N, lam)
        lo, up, uv = env.lower(r), env.upper(r), u.at(r)
        print(f"  lambda = {frac} lambda*: "
              f"max(lower - u) = {np.max(lo - uv):+.2e}, "
              f"max(u - upper) = {np.max(uv - up):+.2e}   (<= 0 up to rounding)")
        rows.extend({"lambda": lam, "r": ri, "lower": l, "u": ui, "upper": up_}
                    for ri, l, ui, up_ in zip(r, lo, uv, up))
    path = HERE / f"envelopes_{F.label().replace('(', '_').rstrip(')')}_N{N:g}.csv"
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["lambda", "r", "lower", "u", "upper"])
        w.writeheader()
        w.writerows(rows)
    print(f"  table -> {path}")
