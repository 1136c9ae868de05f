"""Complete elliptic integrals, the ring modulus mu and capacity transforms.

K(r) is computed by the arithmetic-geometric mean iteration,
K(r) = pi / (2 agm(1, r')) with r' = sqrt(1 - r^2); the Groetzsch ring
modulus is mu(r) = (pi/2) K(r')/K(r) = (pi/2) agm(1, r')/agm(1, r).
"""

from __future__ import annotations

import math

_AGM_TOL = 1e-16


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if a <= 0 or b <= 0:
        raise ValueError(f"agm needs positive arguments, got {a}, {b}")
    for _ in range(64):
        if abs(a - b) <= _AGM_TOL * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def agm_iterations(a: float, b: float) -> int:
    """Number of AGM steps needed to reach relative tolerance 1e-14."""
    n = 0
    while abs(a - b) > 1e-14 * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        n += 1
    return n


def ellip_K(r: float) -> float:
    """Legendre's complete elliptic integral of the first kind.

    K(r) = int_0^1 dx / sqrt((1 - x^2)(1 - r^2 x^2)), 0 <= r < 1.
    """
    if not 0.0 <= r < 1.0:
        raise ValueError(f"modulus must lie in [0, 1), got {r}")
    if r == 0.0:
        return math.pi / 2.0
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    return math.pi / (2.0 * agm(1.0, rp))


def mu(r: float) -> float:
    """Modulus of the Groetzsch ring D \\ [0, r].

    mu(r) = (pi/2) K(r')/K(r); a strictly decreasing bijection of (0, 1)
    onto (0, inf).  Near r = 1 the value is computed from the complementary
    modulus through mu(r) mu(r') = pi^2/4 to dodge cancellation in the
    K ratio.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"modulus must lie in (0, 1), got {r}")
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    if r > 1.0 - 1e-8:
        return (math.pi**2 / 4.0) / mu(rp)
    return (math.pi / 2.0) * agm(1.0, rp) / agm(1.0, r)


def Phi(x: float) -> float:
    """Capacity transform 2 pi / mu(tanh(x/2)); increases from 0 to inf."""
    if not x > 0:
        raise ValueError(f"argument must be positive, got {x}")
    return 2.0 * math.pi / mu(math.tanh(x / 2.0))


def Phi_inverse(y: float, tol: float = 1e-12) -> float:
    """Inverse of Phi by bisection (monotone on (0, inf))."""
    if not y > 0:
        raise ValueError(f"argument must be positive, got {y}")
    lo, hi = 1e-12, 1.0
    while Phi(hi) < y:
        hi *= 2.0
        if hi > 1e6:
            raise ValueError(f"{y} out of reachable range")
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if Phi(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def tau2(t: float) -> float:
    """Capacity of the Teichmueller ring C \\ ([-1, 0] u [t, inf)).

    Closed form pi / mu(1 / sqrt(1 + t)); an external identity validated
    against tau2(1) = 2 and monotonicity, not derived here.
    """
    if not t > 0:
        raise ValueError(f"separation must be positive, got {t}")
    return math.pi / mu(1.0 / math.sqrt(1.0 + t))
