"""Power-law permittivity profiles |x|^alpha and the fractional-dimension
reduction.

On the disc the reduction fixes the effective dimension at 2, which forces
the pull-in distance to be independent of the weight exponent while the
voltage scales by (1+alpha/2)^2 -- reproduced here numerically.  A direct
weighted shoot cross-validates the reduction to ten digits.
"""

import numpy as np

import pullin as pl

MEMS = pl.mems_inverse_power(2.0)

print("disc with weight |x|^alpha: voltage scales, distance does not")
grid = np.geomspace(1e-3, 1 - 1e-4, 150)
base = pl.solve_branch(pl.ProblemSpec(2.0, MEMS), grid)
for alpha in (0.0, 1.0, 3.0, 6.0):
    b = pl.solve_branch(pl.ProblemSpec(2.0, MEMS, alpha), grid)
    factor = (1 + alpha / 2) ** 2
    print(f"  alpha={alpha:>3g}: lambda* = {b.lambda_star:8.4f} "
          f"= {factor:6.2f} x {b.lambda_star / factor:.4f},  m* = {b.m_star:.4f}")

print("\nreduction vs direct weighted shooting, lambda(m) at m = 0.4:")
for N, alpha in ((3.0, 1.0), (2.0, 3.0), (5.0, -1.0)):
    tr = pl.dim_transform(N, alpha)
    direct = pl.shoot(MEMS, N, 0.4, alpha=alpha).lam
    reduced = tr.voltage_factor * pl.shoot(MEMS, tr.N_eff, 0.4).lam
    print(f"  N={N:g}, alpha={alpha:+g}: N_eff={tr.N_eff:.4f}, "
          f"direct={direct:.10f}, reduced={reduced:.10f}, "
          f"rel dev={abs(direct / reduced - 1):.1e}")

print("\nregularity map for the inverse-square ball:")
for N in (7.0, 8.0, 9.0):
    a_crit = pl.alpha_critical_mems(N)
    cls0 = pl.classify_regularity(MEMS, N).value
    print(f"  N={N:g}: alpha=0 -> {cls0}", end="")
    if N >= 8:
        above = pl.classify_regularity(MEMS, N, a_crit * 1.5).value
        print(f"; critical exponent {a_crit:.4f}, alpha=1.5x critical -> {above}")
    else:
        print()

se = pl.singular_extremal(MEMS, 8.0)
print(f"\nexplicit singular extremal at N=8: lambda* = {se.lambda_star:.6f} (= 40/9), "
      f"ode residual at r=0.1: {abs(float(se.ode_residual(0.1))):.1e}")
