"""Extremal three-point configurations in the upper half-plane.

For each hyperbolic half-sidelength u > 0 the equilateral configuration
E*(u) = {i, i e^{t+i theta}, i e^{t-i theta}} has pairwise hyperbolic
distance 2u and unit boundary distance.  Its Euclidean diameter chi(u) is
the largest diameter among all normalized triples of hyperbolic diameter 2u
as long as u stays below the threshold u0 solving 4 cosh^4 u = cosh 4u;
beyond u0 the horizontal diameter 2 sinh 2u of the circumscribed circle
takes over.  Minimizing xi(u) = 2u / log(1 + chi(u)) yields the half-plane
constant kappa(H).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .errors import ConvergenceError
from .halfplane import arcosh, h_dist_halfplane, hyperbolic_disk


def _require_positive(u: float, name: str = "u") -> None:
    if not (u > 0 and math.isfinite(u)):
        raise ValueError(f"{name} must be positive and finite, got {u}")


def theta_of_u(u: float) -> float:
    """Apex half-angle: theta = 2 arctan(tanh(u/2))."""
    _require_positive(u)
    return 2.0 * math.atan(math.tanh(u / 2.0))


def t_of_u(u: float) -> float:
    """Radial log-coordinate: t = arcosh(cosh 2u / cosh u)."""
    _require_positive(u)
    return arcosh(math.cosh(2.0 * u) / math.cosh(u))


def extremal_points(u: float) -> tuple[complex, complex, complex]:
    """The triple (i, i e^{t+i theta}, i e^{t-i theta}) for sidelength 2u."""
    t = t_of_u(u)
    th = theta_of_u(u)
    apex = 1j * math.exp(t) * complex(math.cos(th), math.sin(th))
    return 1j, apex, -apex.conjugate()


def chi(u: float) -> float:
    """Euclidean diameter of E*(u).

    chi(u) = 2 sinh u / (1 + sinh^2 u) * [1 + 2 sinh^2 u
             + sinh u sqrt(3 + 4 sinh^2 u)].
    """
    _require_positive(u)
    s = math.sinh(u)
    return 2.0 * s / (1.0 + s * s) * (1.0 + 2.0 * s * s + s * math.sqrt(3.0 + 4.0 * s * s))


def chi_prime(u: float) -> float:
    """Derivative of chi by the chain rule through s = sinh u."""
    _require_positive(u)
    s = math.sinh(u)
    c = math.cosh(u)
    q = math.sqrt(3.0 + 4.0 * s * s)
    n = s + 2.0 * s**3 + s * s * q
    dn = 1.0 + 6.0 * s * s + 2.0 * s * q + 4.0 * s**3 / q
    d = 1.0 + s * s
    return 2.0 * (dn * d - 2.0 * s * n) / (d * d) * c


def xi(u: float) -> float:
    """xi(u) = 2u / log(1 + chi(u)); the quantity minimized for kappa(H)."""
    _require_positive(u)
    return 2.0 * u / math.log1p(chi(u))


def xi_prime(u: float) -> float:
    """Analytic derivative of xi (cross-checked against finite differences)."""
    _require_positive(u)
    x = chi(u)
    ell = math.log1p(x)
    return 2.0 / ell - 2.0 * u * chi_prime(u) / ((1.0 + x) * ell * ell)


@lru_cache(maxsize=1)
def u0_solve() -> float:
    """Positive solution of 4 cosh^4 u = cosh 4u (about 0.831443).

    Below this threshold the equilateral triple is the unique diameter
    maximizer; above it the horizontal diameter of the circumscribed circle
    is admissible.
    """
    f = lambda u: 4.0 * math.cosh(u) ** 4 - math.cosh(4.0 * u)
    return brentq(f, 0.5, 1.2, xtol=1e-15, rtol=8.9e-16)


def M_of_u(u: float) -> float:
    """Largest Euclidean diameter over normalized triples of h-diameter 2u."""
    _require_positive(u)
    if u < u0_solve():
        return chi(u)
    return 2.0 * math.sinh(2.0 * u)


def monotone_f_check(x: float) -> float:
    """f(x) = x / log(1 + 2 sinh x); strictly increases from 1/2 to 1."""
    _require_positive(x, "x")
    if x > 350.0:
        # log(1 + 2 sinh x) = x + log(1 + e^-x - e^-2x); avoids sinh overflow
        return x / (x + math.log1p(math.exp(-x) - math.exp(-2.0 * x)))
    return x / math.log1p(2.0 * math.sinh(x))


@dataclass(frozen=True)
class ExtremalTriple:
    """Equilateral configuration of hyperbolic sidelength 2u."""

    u: float
    t: float
    theta: float
    points: tuple[complex, complex, complex]


def extremal_triple(u: float) -> ExtremalTriple:
    return ExtremalTriple(u=u, t=t_of_u(u), theta=theta_of_u(u), points=extremal_points(u))


@dataclass(frozen=True)
class KappaSolution:
    """Minimizer data for the half-plane constant."""

    u_star: float
    t_star: float
    theta_star: float
    kappa: float
    triple: ExtremalTriple


def solve_kappa_H(tolerance: float = 1e-13) -> KappaSolution:
    """Locate the interior critical point of xi on (0, u0) and kappa(H).

    Root of the analytic derivative by bracketing bisection; the bracket
    endpoints are checked to have strictly larger xi values so the critical
    point is an interior minimum.
    """
    if tolerance < 1e-14:
        raise ValueError(f"tolerance {tolerance} below attainable precision")
    u0 = u0_solve()
    lo, hi = 1e-6, u0 - 1e-6
    if not (xi_prime(lo) < 0.0 < xi_prime(hi)):
        raise ConvergenceError("derivative does not change sign on the bracket")
    u_star = brentq(xi_prime, lo, hi, xtol=min(tolerance, 1e-13), rtol=8.9e-16)
    kappa = xi(u_star)
    if not (kappa < xi(lo) and kappa < xi(hi)):
        raise ConvergenceError("critical point is not an interior minimum")
    return KappaSolution(
        u_star=u_star,
        t_star=t_of_u(u_star),
        theta_star=theta_of_u(u_star),
        kappa=kappa,
        triple=extremal_triple(u_star),
    )


def brute_force_M(u: float, samples: int = 10_000) -> tuple[float, complex, complex]:
    """Sampled maximum of |z1 - z2| over admissible pairs on the circle.

    The candidate points z1, z2 live on the boundary circle of the
    hyperbolic disk of center i and radius 2u (so the distances to i are
    exactly 2u); the constraints are h(z1, z2) <= 2u and Im z >= 1.  For
    each of ``samples`` angles for z1 the admissible arc of z2 values is
    resolved by bisection and the chord is evaluated at its endpoints (and
    at the antipode when admissible).  Returns (max chord, z1, z2); a lower
    bound on the true maximum converging as the sampling refines.
    """
    _require_positive(u)
    if samples < 1000:
        raise ValueError(f"need at least 1000 samples, got {samples}")
    disk = hyperbolic_disk(1j, 2.0 * u)
    c, R = disk.euclid_center, disk.euclid_radius
    cosh2u = math.cosh(2.0 * u)

    def point(alpha):
        return c.real + R * np.cos(alpha) + 1j * (c.imag + R * np.sin(alpha))

    # Im z >= 1 on the circle c + R e^{i alpha}: sin alpha >= (1 - cosh 2u)/R.
    s0 = (1.0 - cosh2u) / R
    a_lo = math.asin(max(-1.0, s0))
    a_hi = math.pi - a_lo
    alphas = np.linspace(a_lo, a_hi, samples)
    z1 = point(alphas)

    def h_gap(beta):
        z2 = point(beta)
        num = np.abs(z1 - z2)
        den = np.abs(z1 - np.conj(z2))
        return 2.0 * np.arctanh(np.minimum(num / den, 1.0 - 1e-16)) - 2.0 * u

    def crossing(side):
        # Largest admissible angular offset on the given side of alpha.
        limit = np.minimum(alphas + math.pi, a_hi) if side > 0 else np.maximum(
            alphas - math.pi, a_lo
        )
        lo = alphas.copy()
        hi = limit.copy()
        free = h_gap(hi) <= 0.0  # entire half-arc admissible
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            gap = h_gap(mid)
            take_hi = gap > 0.0
            hi = np.where(take_hi, mid, hi)
            lo = np.where(take_hi, lo, mid)
        beta = np.where(free, limit, lo)
        return beta

    best = -1.0
    best_pair = (z1[0], z1[0])
    for side in (+1, -1):
        beta = crossing(side)
        chord = 2.0 * R * np.abs(np.sin(0.5 * (beta - alphas)))
        k = int(np.argmax(chord))
        if chord[k] > best:
            best = float(chord[k])
            best_pair = (complex(z1[k]), complex(point(beta[k])))
    return best, best_pair[0], best_pair[1]
