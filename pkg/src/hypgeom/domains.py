"""Model domains: membership, boundary distance and hyperbolic distance.

Each domain supplies a Euclidean boundary-distance function and a hyperbolic
distance, either in closed form or as the pullback of the half-plane/disk
distance through a stored conformal map.  Supported domains:

* upper and right half-planes, unit disk (closed forms),
* the expanding disk {|z - R| < R},
* the horizontal strip {|Im z| < a},
* the slit plane C \\ (-inf, 0],
* the lune between two perpendicular circles (unit circle and the image of
  the right half-plane under the Moebius map T(z) = (z + a)/(1 + a z)).

Principal branches are used everywhere (arguments in (-pi, pi]).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, OutsideDomainError
from .halfplane import h_dist_disk, h_dist_halfplane, h_dist_rhp

_NEWTON_CAP = 60


# ---------------------------------------------------------------------------
# conformal building blocks


def strip_map(z: complex, half_width: float = 1.0) -> complex:
    """Map the unit disk onto the strip {|Im w| < half_width}.

    w = (2 a / pi) log((1 + z)/(1 - z)); the segment (-1, 1) goes to the
    real axis.
    """
    z = complex(z)
    if abs(z) >= 1:
        raise OutsideDomainError(f"{z} is not in the unit disk")
    return (2.0 * half_width / math.pi) * cmath.log((1.0 + z) / (1.0 - z))


def strip_map_inverse(w: complex, half_width: float = 1.0) -> complex:
    """Inverse of :func:`strip_map`: z = tanh(pi w / (4 a))."""
    w = complex(w)
    if abs(w.imag) >= half_width:
        raise OutsideDomainError(f"{w} is not in the strip of half-width {half_width}")
    return cmath.tanh(math.pi * w / (4.0 * half_width))


def _lune_T(a: float, z: complex) -> complex:
    return (z + a) / (1.0 + a * z)


def keogh_map(a: float, z: complex) -> complex:
    """Conformal map of the upper half-plane onto the lune G(a).

    Composition T(L(S(M(z)))) with M(z) = (1 + z/2)/(1 - z/2), S the
    principal square root, L(w) = i (w - 1)/(w + 1), T(z) = (z + a)/(1 + a z).
    The map is analytic on |z| < 1 as well, with value a at 0; the positive
    imaginary axis goes to the real segment (-1, a).
    """
    if not 0.0 < a < 1.0:
        raise ValueError(f"lune parameter must be in (0, 1), got {a}")
    z = complex(z)
    if z.imag <= 0 and abs(z) >= 1:
        raise OutsideDomainError(f"{z} is outside H and the analyticity disk")
    m = (1.0 + z / 2.0) / (1.0 - z / 2.0)
    s = cmath.sqrt(m)
    l = 1j * (s - 1.0) / (s + 1.0)
    return _lune_T(a, l)


def keogh_map_derivative(a: float, z: complex) -> complex:
    """Derivative of :func:`keogh_map` by the chain rule."""
    z = complex(z)
    m = (1.0 + z / 2.0) / (1.0 - z / 2.0)
    dm = 1.0 / (1.0 - z / 2.0) ** 2
    s = cmath.sqrt(m)
    ds = 0.5 / s
    l = 1j * (s - 1.0) / (s + 1.0)
    dl = 2j / (s + 1.0) ** 2
    dt = (1.0 - a * a) / (1.0 + a * l) ** 2
    return dt * dl * ds * dm


def keogh_map_inverse(a: float, w: complex) -> complex:
    """Inverse of :func:`keogh_map`, from the lune back to H.

    Closed-form chain of inverses with a Newton polish; raises
    :class:`ConvergenceError` when the polish does not settle.
    """
    w = complex(w)
    l = (w - a) / (1.0 - a * w)
    s = (1j + l) / (1j - l)
    m = s * s
    z = 2.0 * (m - 1.0) / (m + 1.0)
    # Newton polish against the forward map.
    for _ in range(_NEWTON_CAP):
        err = keogh_map(a, z) - w
        if abs(err) < 1e-14:
            break
        d = keogh_map_derivative(a, z)
        step = err / d
        if abs(step) > 0.5:
            step *= 0.5 / abs(step)
        z = z - step
    else:
        raise ConvergenceError(f"lune inversion did not converge at {w}")
    if z.imag <= 0:
        raise ConvergenceError(f"lune inversion left the half-plane at {w}")
    return z


def keogh_taylor_coefficients(a: float, step: float = 1e-3) -> tuple[complex, complex]:
    """Numeric Taylor coefficients (a1, a2) of the lune map at 0.

    Fourth-order central differences at the given step on the real axis
    (the map is analytic on |z| < 1).
    """
    f = lambda x: keogh_map(a, x)
    h = step
    f1 = (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h)
    f2 = (-f(2 * h) + 16 * f(h) - 30 * f(0.0) + 16 * f(-h) - f(-2 * h)) / (12 * h * h)
    return f1, f2 / 2.0


def keogh_F(a: float, x: float, e_star) -> float:
    """Ratio d(E'_x)/d(E'_x, boundary of G) for the scaled extremal triple.

    E'_x is the image of x*E_star under the lune map; the value equals
    |f(x z1) - f(x z2)| / |f(x z0) - a|.  The diameter and nearest-point
    identities are asserted per call; a failed assertion means x is too
    large for the first-order regime.
    """
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    z0, z1, z2 = (complex(p) for p in e_star)
    w0 = keogh_map(a, x * z0)
    w1 = keogh_map(a, x * z1)
    w2 = keogh_map(a, x * z2)
    d12 = abs(w1 - w2)
    if d12 + 1e-13 < max(abs(w0 - w1), abs(w0 - w2)):
        raise ValueError(f"x={x} too large: |w1-w2| is not the diameter of the image")
    if abs(w0.imag) > 1e-9 or not -1.0 < w0.real < a:
        raise ValueError(f"x={x} too large: f(x z0) left the segment (-1, a)")
    return d12 / abs(w0 - a)


def keogh_F_limit(e_star) -> float:
    """Limit of keogh_F as x -> 0+: |z1 - z2| / |z0|."""
    z0, z1, z2 = (complex(p) for p in e_star)
    return abs(z1 - z2) / abs(z0)


def keogh_F_slope(a: float, e_star) -> float:
    """First derivative of keogh_F at x = 0.

    Equals (a |z1 - z2| / (4 |z0|)) * Im(z1 + z2 - z0), positive whenever
    the apex points sit strictly above z0.
    """
    z0, z1, z2 = (complex(p) for p in e_star)
    return a * abs(z1 - z2) / (4.0 * abs(z0)) * (z1 + z2 - z0).imag


def h_dist_slitplane(z: complex, w: complex) -> float:
    """Hyperbolic distance in C \\ (-inf, 0] via the principal square root."""
    z, w = complex(z), complex(w)
    if not _slit_contains(z) or not _slit_contains(w):
        raise OutsideDomainError(f"points {z}, {w} must avoid the slit (-inf, 0]")
    return h_dist_rhp(cmath.sqrt(z), cmath.sqrt(w))


def _slit_contains(z: complex) -> bool:
    return not (z.imag == 0.0 and z.real <= 0.0)


# ---------------------------------------------------------------------------
# domain descriptors


class Domain:
    """Base descriptor; subclasses fill in the geometry."""

    kind: str = "?"
    convex: bool = False
    simply_connected: bool = True

    def contains(self, z: complex) -> bool:
        raise NotImplementedError

    def boundary_distance(self, z: complex) -> float:
        raise NotImplementedError

    def hyperbolic_distance(self, z: complex, w: complex) -> float:
        raise NotImplementedError

    def density(self, z: complex) -> float:
        raise NotImplementedError

    def _require(self, *zs: complex) -> None:
        for z in zs:
            if not self.contains(complex(z)):
                raise OutsideDomainError(f"{z} is not in {self}")

    def params(self) -> dict:
        return {}

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": self.params()}

    def __repr__(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.kind}({ps})"


@dataclass(frozen=True, repr=False)
class UpperHalfPlane(Domain):
    kind = "UpperHalfPlane"
    convex = True

    def contains(self, z):
        return complex(z).imag > 0

    def boundary_distance(self, z):
        self._require(z)
        return complex(z).imag

    def hyperbolic_distance(self, z, w):
        return h_dist_halfplane(z, w)

    def density(self, z):
        self._require(z)
        return 1.0 / complex(z).imag


@dataclass(frozen=True, repr=False)
class RightHalfPlane(Domain):
    kind = "RightHalfPlane"
    convex = True

    def contains(self, z):
        return complex(z).real > 0

    def boundary_distance(self, z):
        self._require(z)
        return complex(z).real

    def hyperbolic_distance(self, z, w):
        return h_dist_rhp(z, w)

    def density(self, z):
        self._require(z)
        return 1.0 / complex(z).real


@dataclass(frozen=True, repr=False)
class UnitDisk(Domain):
    kind = "UnitDisk"
    convex = True

    def contains(self, z):
        return abs(complex(z)) < 1

    def boundary_distance(self, z):
        self._require(z)
        return 1.0 - abs(complex(z))

    def hyperbolic_distance(self, z, w):
        return h_dist_disk(z, w)

    def density(self, z):
        self._require(z)
        return 2.0 / (1.0 - abs(complex(z)) ** 2)


@dataclass(frozen=True, repr=False)
class ExpandingDisk(Domain):
    """The disk {|z - R| < R}; converges to the right half-plane as R grows."""

    R: float
    kind = "ExpandingDisk"
    convex = True

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError(f"R must be positive, got {self.R}")

    def params(self):
        return {"R": self.R}

    def contains(self, z):
        return abs(complex(z) - self.R) < self.R

    def boundary_distance(self, z):
        self._require(z)
        return self.R - abs(complex(z) - self.R)

    def hyperbolic_distance(self, z, w):
        self._require(z, w)
        return h_dist_disk((complex(z) - self.R) / self.R, (complex(w) - self.R) / self.R)

    def density(self, z):
        self._require(z)
        return 2.0 * self.R / (self.R**2 - abs(complex(z) - self.R) ** 2)


@dataclass(frozen=True, repr=False)
class Strip(Domain):
    """The horizontal strip {|Im z| < half_width}."""

    half_width: float = 1.0
    kind = "Strip"
    convex = True

    def __post_init__(self):
        if not self.half_width > 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")

    def params(self):
        return {"half_width": self.half_width}

    def contains(self, z):
        return abs(complex(z).imag) < self.half_width

    def boundary_distance(self, z):
        self._require(z)
        return self.half_width - abs(complex(z).imag)

    def hyperbolic_distance(self, z, w):
        self._require(z, w)
        a = self.half_width
        return h_dist_disk(strip_map_inverse(z, a), strip_map_inverse(w, a))

    def density(self, z):
        self._require(z)
        a = self.half_width
        return (math.pi / (2.0 * a)) / math.cos(math.pi * complex(z).imag / (2.0 * a))


@dataclass(frozen=True, repr=False)
class SlitPlane(Domain):
    """The plane slit along (-inf, 0]."""

    kind = "SlitPlane"

    def contains(self, z):
        return _slit_contains(complex(z))

    def boundary_distance(self, z):
        self._require(z)
        z = complex(z)
        # Nearest point of the ray is 0 when Re z > 0, else the foot on the ray.
        return abs(z) if z.real > 0 else abs(z.imag)

    def hyperbolic_distance(self, z, w):
        return h_dist_slitplane(z, w)

    def density(self, z):
        self._require(z)
        s = cmath.sqrt(complex(z))
        return 1.0 / (2.0 * abs(s) * s.real)


@dataclass(frozen=True, repr=False)
class KeoghLune(Domain):
    """The lune G = D \\ cl(Delta2) with Delta2 = T(right half-plane).

    Delta2 is the disk of center (a + 1/a)/2 and radius (1/a - a)/2,
    orthogonal to the unit circle; the corner points are exp(+-i psi) with
    cos psi = 2a/(1 + a^2).
    """

    a: float
    kind = "KeoghLune"

    def __post_init__(self):
        if not 0.0 < self.a < 1.0:
            raise ValueError(f"lune parameter must be in (0, 1), got {self.a}")

    def params(self):
        return {"a": self.a}

    @property
    def arc_center(self) -> float:
        return 0.5 * (self.a + 1.0 / self.a)

    @property
    def arc_radius(self) -> float:
        return 0.5 * (1.0 / self.a - self.a)

    def contains(self, z):
        z = complex(z)
        return abs(z) < 1 and abs(z - self.arc_center) > self.arc_radius

    def boundary_distance(self, z):
        self._require(z)
        z = complex(z)
        c2, r2 = self.arc_center, self.arc_radius
        candidates = []
        # Foot on the unit circle, admissible if it stays outside Delta2.
        foot1 = z / abs(z) if z != 0 else complex(-1.0, 0.0)
        if abs(foot1 - c2) >= r2:
            candidates.append(1.0 - abs(z))
        # Foot on the circle bounding Delta2, admissible if inside cl(D).
        foot2 = c2 + r2 * (z - c2) / abs(z - c2)
        if abs(foot2) <= 1.0:
            candidates.append(abs(z - c2) - r2)
        # Corner points of the lune.
        cpsi = 2.0 * self.a / (1.0 + self.a**2)
        spsi = math.sqrt(max(0.0, 1.0 - cpsi * cpsi))
        for corner in (complex(cpsi, spsi), complex(cpsi, -spsi)):
            candidates.append(abs(z - corner))
        return min(candidates)

    def hyperbolic_distance(self, z, w):
        self._require(z, w)
        return h_dist_halfplane(
            keogh_map_inverse(self.a, z), keogh_map_inverse(self.a, w)
        )

    def density(self, z):
        self._require(z)
        zeta = keogh_map_inverse(self.a, complex(z))
        return 1.0 / (zeta.imag * abs(keogh_map_derivative(self.a, zeta)))


# ---------------------------------------------------------------------------
# module-level dispatch (uniform call surface used by functionals and CLI)


def boundary_distance(domain: Domain, z: complex) -> float:
    """Euclidean distance from z to the boundary of the domain."""
    return domain.boundary_distance(z)


def rho_density(domain: Domain, z: complex) -> float:
    """Hyperbolic density of the domain at z."""
    return domain.density(z)


def hyperbolic_distance(domain: Domain, z: complex, w: complex) -> float:
    """Hyperbolic distance in the domain (closed form or conformal pullback)."""
    return domain.hyperbolic_distance(z, w)


def j_dist(domain: Domain, z: complex, w: complex) -> float:
    """Distance-ratio metric log(1 + |z-w| / min boundary distance)."""
    z, w = complex(z), complex(w)
    dz = domain.boundary_distance(z)
    dw = domain.boundary_distance(w)
    return math.log1p(abs(z - w) / min(dz, dw))


# ---------------------------------------------------------------------------
# serialization

_SIMPLE_KINDS = {
    "UpperHalfPlane": UpperHalfPlane,
    "RightHalfPlane": RightHalfPlane,
    "UnitDisk": UnitDisk,
    "SlitPlane": SlitPlane,
}

PRESETS = {
    "H": UpperHalfPlane(),
    "D": UnitDisk(),
    "strip1": Strip(1.0),
    "slit": SlitPlane(),
    "rhp": RightHalfPlane(),
}


def domain_from_json(obj: dict) -> Domain:
    """Build a domain from {"kind": ..., "params": {...}}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"malformed domain object {obj!r}")
    kind = obj["kind"]
    params = obj.get("params", {}) or {}
    if kind in _SIMPLE_KINDS:
        return _SIMPLE_KINDS[kind]()
    if kind == "ExpandingDisk":
        return ExpandingDisk(R=float(params["R"]))
    if kind == "Strip":
        return Strip(half_width=float(params.get("half_width", 1.0)))
    if kind == "KeoghLune":
        return KeoghLune(a=float(params["a"]))
    raise ValueError(f"unknown domain kind {kind!r}")


def domain_from_preset(name: str) -> Domain:
    """Resolve a preset name like "H", "strip1" or "keogh:a=0.5"."""
    if name in PRESETS:
        return PRESETS[name]
    if name.startswith("keogh:a="):
        return KeoghLune(a=float(name.split("=", 1)[1]))
    raise ValueError(f"unknown preset {name!r}")
