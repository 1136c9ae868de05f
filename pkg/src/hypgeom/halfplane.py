"""Closed-form hyperbolic geometry on the upper half-plane and the unit disk.

The upper half-plane H = {Im z > 0} carries the density 1/Im z, the unit
disk D = {|z| < 1} the density 2/(1-|z|^2).  Points are plain ``complex``
numbers throughout the library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OutsideDomainError

# Inputs this close to a branch boundary are clamped instead of rejected.
_BRANCH_EPS = 1e-15


def _check_finite(*zs: complex) -> None:
    for z in zs:
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"non-finite point {z!r}")


def artanh(x: float) -> float:
    """Inverse hyperbolic tangent via the log form, with a branch guard."""
    if x >= 1.0:
        if x - 1.0 > _BRANCH_EPS:
            raise ValueError(f"artanh argument {x} >= 1")
        x = 1.0 - _BRANCH_EPS
    if x <= -1.0:
        if -1.0 - x > _BRANCH_EPS:
            raise ValueError(f"artanh argument {x} <= -1")
        x = -1.0 + _BRANCH_EPS
    return 0.5 * math.log1p(2.0 * x / (1.0 - x))


def arcosh(x: float) -> float:
    """Inverse hyperbolic cosine via the log form, with a branch guard."""
    if x < 1.0:
        if 1.0 - x > _BRANCH_EPS:
            raise ValueError(f"arcosh argument {x} < 1")
        x = 1.0
    return math.log(x + math.sqrt((x - 1.0) * (x + 1.0)))


def h_dist_halfplane(z: complex, w: complex) -> float:
    """Hyperbolic distance in the upper half-plane.

    h(z, w) = 2 artanh( |z - w| / |z - conj(w)| ).
    """
    z, w = complex(z), complex(w)
    _check_finite(z, w)
    if z.imag <= 0 or w.imag <= 0:
        raise OutsideDomainError(f"points {z}, {w} must have positive imaginary part")
    num = abs(z - w)
    if num == 0.0:
        return 0.0
    return 2.0 * artanh(num / abs(z - w.conjugate()))


def h_dist_disk(z: complex, w: complex) -> float:
    """Hyperbolic distance in the unit disk.

    h(z, w) = 2 artanh| (z - w) / (1 - conj(w) z) |.
    """
    z, w = complex(z), complex(w)
    _check_finite(z, w)
    if abs(z) >= 1 or abs(w) >= 1:
        raise OutsideDomainError(f"points {z}, {w} must lie in the open unit disk")
    num = abs(z - w)
    if num == 0.0:
        return 0.0
    return 2.0 * artanh(num / abs(1.0 - w.conjugate() * z))


def h_dist_rhp(z: complex, w: complex) -> float:
    """Hyperbolic distance in the right half-plane {Re z > 0}."""
    z, w = complex(z), complex(w)
    _check_finite(z, w)
    if z.real <= 0 or w.real <= 0:
        raise OutsideDomainError(f"points {z}, {w} must have positive real part")
    num = abs(z - w)
    if num == 0.0:
        return 0.0
    return 2.0 * artanh(num / abs(z + w.conjugate()))


@dataclass(frozen=True)
class HyperbolicDisk:
    """Hyperbolic disk in H with its Euclidean center and radius.

    For center z0 = x0 + i y0 and hyperbolic radius r the boundary is the
    Euclidean circle |z - c| = R with c = x0 + i y0 cosh r, R = y0 sinh r.
    """

    center: complex
    radius: float
    euclid_center: complex
    euclid_radius: float

    def boundary_point(self, angle: float) -> complex:
        """Point c + i R e^{i*angle}; angle 0 is the top of the circle."""
        return self.euclid_center + 1j * self.euclid_radius * complex(
            math.cos(angle), math.sin(angle)
        )


def hyperbolic_disk(z0: complex, r: float) -> HyperbolicDisk:
    """Hyperbolic disk of center z0 in H and hyperbolic radius r > 0."""
    z0 = complex(z0)
    _check_finite(z0)
    if z0.imag <= 0:
        raise OutsideDomainError(f"center {z0} must lie in the upper half-plane")
    if not (r > 0 and math.isfinite(r)):
        raise ValueError(f"hyperbolic radius must be positive, got {r}")
    c = complex(z0.real, z0.imag * math.cosh(r))
    R = z0.imag * math.sinh(r)
    return HyperbolicDisk(center=z0, radius=r, euclid_center=c, euclid_radius=R)


def phi(r: float) -> float:
    """Hyperbolic length of the horizontal diameter of a disk of radius r.

    phi(r) = 2 log( (sqrt(cosh 2r) + sinh r) / cosh r ); the minimum of the
    hyperbolic distance over Euclidean diameters of the boundary circle.
    """
    if not (r > 0 and math.isfinite(r)):
        raise ValueError(f"radius must be positive, got {r}")
    if r > 300.0:
        # cosh overflows; rescale by e^{-r} (relative error ~e^{-2r}).
        return 2.0 * math.log(math.sqrt(2.0) + 1.0)
    return 2.0 * math.log((math.sqrt(math.cosh(2.0 * r)) + math.sinh(r)) / math.cosh(r))
