"""Radial Sturm-Liouville solver in real dimension N.

Computes the principal Dirichlet eigenvalue of the radial Laplacian on the
unit ball, eigenfunction weight integrals, and the principal eigenvalue of
the linearized operator -Δ - λ F'(u) that decides stability of a solution
branch.  Everything is shooting with bisection on the eigenvalue; the
principal mode is pinned down by counting interior zeros of the shot
eigenfunction, so a poor initial bracket can never silently return a higher
mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq

from .errors import BracketError, DomainValidationError, QuadratureError
from .geometry import volume_unit_ball
from .nonlinearity import Nonlinearity

_SEED_RADIUS = 1e-6
_MAX_POTENTIAL = 2e5  # beyond this the shot eigenfunction overflows double range


@dataclass
class EigenPair:
    """Principal eigenvalue and radial eigenfunction psi on [0, 1].

    psi is normalized by psi(0) = 1.  `normalization` is the factor c such
    that the rescaled eigenfunction c*psi has unit integral over the ball.
    """

    eigenvalue: float
    r: np.ndarray
    psi: np.ndarray
    dimension: float
    normalization: float

    def at(self, r):
        return np.interp(r, self.r, self.psi)


def _shoot_mode(N: float, mu: float, q_at: Callable, q0: float, rtol: float):
    """Integrate psi'' + (N-1)/r psi' + (mu + q(r)) psi = 0 from the center.

    Returns (number of interior zeros, psi(1), solution object).  The
    removable singularity at r = 0 is handled by the second-order series
    psi = 1 - (mu + q(0)) r^2 / (2N).
    """
    s = mu + q0
    eps = _SEED_RADIUS
    y0 = (1.0 - s * eps * eps / (2.0 * N), -s * eps / N)

    def rhs(r, y):
        return (y[1], -(mu + q_at(r)) * y[0] - (N - 1.0) / r * y[1])

    def crossing(r, y):
        return y[0]

    sol = solve_ivp(rhs, (eps, 1.0), y0, method="RK45", rtol=rtol,
                    atol=rtol * 1e-2, events=crossing, dense_output=True)
    if not sol.success:
        raise BracketError(f"eigen shot failed at mu={mu}: {sol.message}")
    zeros = int(np.sum(sol.t_events[0] < 1.0 - 1e-9))
    return zeros, float(sol.y[0][-1]), sol


def _principal_eigenvalue(N: float, q_at: Callable, q0: float,
                          lo: float, hi: float, tol: float, rtol: float) -> float:
    """Smallest mu with psi(1) = 0 and no interior zero, by zero-counting
    bisection followed by a brentq polish on psi(1)."""

    def below(mu) -> bool:
        # True when mu is below the principal eigenvalue.
        zeros, end, _ = _shoot_mode(N, mu, q_at, q0, rtol)
        return zeros == 0 and end > 0.0

    for _ in range(80):
        if below(lo):
            break
        lo = lo * 2.0 if lo < 0 else lo / 2.0 if lo > 1e-12 else -1.0
    else:
        raise BracketError("could not find a lower eigenvalue bracket")
    for _ in range(80):
        if not below(hi):
            break
        hi *= 2.0
    else:
        raise BracketError("could not find an upper eigenvalue bracket")

    scale = max(1.0, abs(lo), abs(hi))
    while hi - lo > max(1e-3 * scale, tol):
        mid = 0.5 * (lo + hi)
        if below(mid):
            lo = mid
        else:
            hi = mid
    # psi(1; mu) decreases through zero on the tight bracket; polish with
    # brentq, falling back to plain bisection if the end values do not
    # straddle zero (possible when hi still sits above a higher mode).
    end = lambda mu: _shoot_mode(N, mu, q_at, q0, rtol)[1]
    try:
        return brentq(end, lo, hi, xtol=tol)
    except ValueError:
        while hi - lo > tol * max(1.0, abs(lo), abs(hi)):
            mid = 0.5 * (lo + hi)
            if below(mid):
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)


def lambda1_ball(N: float, tol: float = 1e-10) -> EigenPair:
    """Principal Dirichlet eigenvalue of -Δ on the unit ball in dimension N.

    Reference points: N=1 gives pi^2/4, N=2 the square of the first zero of
    the Bessel function J0, N=3 gives pi^2.
    """
    if N < 1:
        raise DomainValidationError(f"dimension must be >= 1, got {N}")
    rtol = min(1e-10, tol)
    q_at = lambda r: 0.0
    lam = _principal_eigenvalue(N, q_at, 0.0, 1.0, 4.0 * N * N, tol, rtol)
    _, _, sol = _shoot_mode(N, lam, q_at, 0.0, rtol)
    r = np.linspace(0.0, 1.0, 1025)
    psi = np.empty_like(r)
    psi[0] = 1.0
    psi[1:] = sol.sol(np.maximum(r[1:], _SEED_RADIUS))[0]
    psi[-1] = 0.0  # Dirichlet end, exact by construction

    # integral of psi over the ball via s = r^N, which flattens the r^(N-1) weight
    radial, err = quad(lambda s: sol.sol(max(s ** (1.0 / N), _SEED_RADIUS))[0],
                       0.0, 1.0, epsabs=0.0, epsrel=1e-11, limit=200)
    radial /= N
    c = 1.0 / (N * volume_unit_ball(N) * radial)
    return EigenPair(lam, r, psi, N, c)


def profile_weight_ratio(N: float, alpha: float, tol: float = 1e-10) -> float:
    """Mean of |x|^alpha against the normalized principal eigenfunction.

    Equals the ratio of the radial integrals of r^(N-1+alpha) psi and
    r^(N-1) psi; the ball-volume factors cancel, so fractional N needs no
    special casing.  Requires N + alpha > 0 for integrability.
    """
    if alpha <= -N:
        raise DomainValidationError(
            f"weight exponent alpha={alpha} not integrable in dimension {N}")
    rtol = min(1e-10, tol)
    q_at = lambda r: 0.0
    lam = _principal_eigenvalue(N, q_at, 0.0, 1.0, 4.0 * N * N, tol, rtol)
    _, _, sol = _shoot_mode(N, lam, q_at, 0.0, rtol)
    psi = lambda r: sol.sol(max(r, _SEED_RADIUS))[0]

    def radial_moment(power: float) -> float:
        # substitute s = r^(power+1) so the weight becomes constant
        k = power + 1.0
        val, err = quad(lambda s: psi(s ** (1.0 / k)), 0.0, 1.0,
                        epsabs=0.0, epsrel=1e-11, limit=200)
        if not np.isfinite(val):
            raise QuadratureError(f"weight integral diverged for power {power}")
        return val / k

    return radial_moment(N - 1.0 + alpha) / radial_moment(N - 1.0)


def mu1(N: float, F: Nonlinearity, lam: float, u, tol: float = 1e-8) -> float:
    """Principal eigenvalue of the linearized operator -Δ - λ F'(u).

    `u` is a radial solution object exposing `at(r)` on [0, 1] (monotone
    interpolation of the computed profile).  Positive on the stable branch,
    zero at the fold, negative beyond it.
    """
    if lam < 0:
        raise DomainValidationError(f"voltage must be nonnegative, got {lam}")
    r_grid = np.linspace(0.0, 1.0, 4001)
    # the located boundary zero carries O(integrator tol) noise; clip it away
    u_vals = np.clip(np.asarray(u.at(r_grid), dtype=float), 0.0, None)
    q_grid = lam * np.asarray(F.deriv(u_vals), dtype=float)
    q_max = float(np.max(q_grid))
    if q_max > _MAX_POTENTIAL:
        raise BracketError(
            f"linearization potential {q_max:.3g} exceeds {_MAX_POTENTIAL:.0g}; "
            "the shot eigenfunction would overflow")
    q_at = lambda r: np.interp(r, r_grid, q_grid)
    rtol = min(1e-8, tol)
    lo = -(q_max + 1.0)
    hi = 4.0 * N * N + 10.0
    return _principal_eigenvalue(N, q_at, float(q_grid[0]), lo, hi, tol, rtol)
