"""Tour of the analytic machinery: optimized constants, voltage/distance
bounds, and how the computed branch sits inside the analytic sandwich.
"""

import numpy as np

import pullin as pl

# -- optimized constants -----------------------------------------------------

print("exponential sup-norm constants (minimized over their t-window):")
for N in range(3, 10):
    rep = pl.exp_supnorm_constant(float(N))
    print(f"  N={N}: {rep.value:.6f}  (optimizer t={rep.optimizer:.4f})")

print("\ninverse-square sup-norm constants:")
for N in range(3, 8):
    rep = pl.mems_supnorm_constant(float(N))
    print(f"  N={N}: {rep.value:.6f}  (optimizer t={rep.optimizer:.4f})")

# -- general-domain bound: the unit cube -------------------------------------

cube = pl.DomainStats(lambda1=3 * np.pi ** 2, volume=1.0, N=3.0,
                      inf_f=1.0, sup_f=1.0, f_phi_integral=1.0)
print(f"\nunit cube, inverse-square: sup-norm bound {pl.mems_supnorm_bound(cube).value:.4f}"
      " (weak -- the radial route below does much better on balls)")

# -- radial ball bounds ------------------------------------------------------

for N in (1.0, 2.0):
    rep = pl.mems_ball_supnorm_bound(N)
    closed = pl.mems_ball_supnorm_closed_form(N)
    print(f"ball N={N:g}: radial integral bound {rep.value:.4f} "
          f"(t={rep.optimizer:.3f}), closed form {closed.value:.4f}")

# -- sandwich around the computed branch -------------------------------------

print("\nbound sandwich on the inverse-square ball (computed vs analytic):")
for N in (1.0, 2.0, 3.0):
    stats = pl.ball_stats(N)
    b = pl.solve_branch(pl.ProblemSpec(N, pl.mems_inverse_power(2.0)),
                        np.geomspace(1e-3, 1 - 1e-4, 150))
    upper = pl.pullin_voltage_upper(pl.mems_inverse_power(2.0), stats)
    lower = pl.pullin_distance_lower(pl.mems_inverse_power(2.0), stats)
    ok = pl.stability_necessary_check(pl.mems_inverse_power(2.0), stats,
                                      b.lambda_star, b.m_star)
    print(f"  N={N:g}: lambda*={b.lambda_star:.4f} <= {upper.value:.4f}; "
          f"m*={b.m_star:.4f} >= {lower.value:.4f}; "
          f"stability-necessary check: {ok}")
