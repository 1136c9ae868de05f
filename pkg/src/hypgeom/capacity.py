"""Condenser capacity: closed-form ring capacities and lower bounds.

For a continuum E in a simply connected domain, cap >= Phi(kappa * J(E))
with kappa the domain constant (or a proven lower bound for it).  The
half-plane constant enters through a stored two-sided enclosure; bounds are
always evaluated at its lower endpoint so the emitted number is a true
lower bound regardless of solver error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .domains import Domain, Strip, strip_map_inverse
from .elliptic import Phi, mu, tau2
from .errors import DegenerateSetError, HypgeomError
from .functionals import J_functional, h_diam

# Enclosure of the half-plane/convex-domain constant; use the lower endpoint.
KAPPA1_INTERVAL = (0.8750987500, 0.8750987501)
# Proven lower bound for the simply-connected infimum; the sharp value is open.
KAPPA0 = 0.25

BOUND_KINDS = ("kappa0_bound", "kappa1_bound", "teichmuller_bound", "exact")


@dataclass(frozen=True)
class Segment:
    """Closed Euclidean segment, the continuum E of a condenser."""

    a: complex
    b: complex

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateSetError("segment endpoints coincide")

    @property
    def length(self) -> float:
        return abs(complex(self.b) - complex(self.a))

    def sample(self, n: int = 257) -> np.ndarray:
        ts = np.linspace(0.0, 1.0, n)
        return complex(self.a) + ts * (complex(self.b) - complex(self.a))


Condenser = Union[Segment, Sequence[complex]]


@dataclass(frozen=True)
class CapacityBound:
    domain: Domain
    set_descriptor: Condenser
    kind: str
    value: float
    J_value: float


def _as_points(e: Condenser) -> list[complex]:
    if isinstance(e, Segment):
        return [complex(e.a), complex(e.b)]
    return [complex(p) for p in e]


def segment_J(domain: Domain, seg: Segment) -> float:
    """J of a segment: log(1 + length / boundary distance of the segment).

    For a convex domain the boundary distance along the segment is concave,
    so the minimum sits at an endpoint; otherwise the segment is sampled.
    """
    if domain.convex:
        d_bdry = min(domain.boundary_distance(seg.a), domain.boundary_distance(seg.b))
    else:
        d_bdry = min(domain.boundary_distance(p) for p in seg.sample())
    return math.log1p(seg.length / d_bdry)


def _J_of(domain: Domain, e: Condenser) -> float:
    if isinstance(e, Segment):
        return segment_J(domain, e)
    return J_functional(domain, e)


def cap_lower_bound(domain: Domain, e: Condenser, kind: str) -> CapacityBound:
    """Lower bound Phi(kappa J(E)) or the symmetrization bound tau2.

    kind "kappa0_bound" uses the simply-connected constant 1/4;
    "kappa1_bound" requires a convex domain and uses the lower endpoint of
    the stored enclosure of the convex-domain constant;
    "teichmuller_bound" applies to segments on the positive real axis and
    reproduces the circular-symmetrization estimate tau2(a / (b - a)).
    """
    if kind not in ("kappa0_bound", "kappa1_bound", "teichmuller_bound"):
        raise ValueError(f"unknown bound kind {kind!r}")
    if not domain.simply_connected:
        raise HypgeomError("capacity bounds require a simply connected domain")
    J = _J_of(domain, e)
    if kind == "kappa0_bound":
        value = Phi(KAPPA0 * J)
    elif kind == "kappa1_bound":
        if not domain.convex:
            raise HypgeomError(f"kappa1 bound needs a convex domain, got {domain}")
        value = Phi(KAPPA1_INTERVAL[0] * J)
    else:
        if not isinstance(e, Segment):
            raise HypgeomError("teichmuller bound is implemented for segments only")
        a, b = complex(e.a), complex(e.b)
        if a.imag != 0 or b.imag != 0 or min(a.real, b.real) <= 0:
            raise HypgeomError(
                "teichmuller bound needs a segment on the positive real axis"
            )
        lo, hi = sorted((a.real, b.real))
        value = tau2(lo / (hi - lo))
    return CapacityBound(domain=domain, set_descriptor=e, kind=kind, value=value, J_value=J)


def cap_groetzsch(r: float) -> float:
    """Capacity 2 pi / mu(r) of the Groetzsch ring D \\ [0, r]."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"radius must lie in (0, 1), got {r}")
    return 2.0 * math.pi / mu(r)


def cap_strip_segment_exact(a: float, b: float, half_width: float = 1.0) -> float:
    """Exact capacity of a real-axis segment [a, b] in the strip.

    The inverse strip map carries the segment to [p, q] in (-1, 1); a disk
    automorphism moves it to [0, s] with s = (q - p)/(1 - p q), and the
    Groetzsch capacity 2 pi / mu(s) is conformally invariant.
    """
    if not a < b:
        raise ValueError(f"need a < b, got {a}, {b}")
    p = strip_map_inverse(complex(a, 0.0), half_width).real
    q = strip_map_inverse(complex(b, 0.0), half_width).real
    s = (q - p) / (1.0 - p * q)
    return cap_groetzsch(s)


def cap_hyperbolic_diameter_bound(domain: Domain, e: Condenser) -> float:
    """Symmetrization bound Phi(h_diam(E)) for simply connected domains."""
    if not domain.simply_connected:
        raise HypgeomError("bound requires a simply connected domain")
    return Phi(h_diam(domain, _as_points(e)))


def capacity_report(domain: Domain, seg: Segment) -> dict:
    """All bounds (and the exact value where available) for one condenser."""
    bounds = []
    for kind in ("kappa0_bound", "teichmuller_bound", "kappa1_bound"):
        try:
            bounds.append(cap_lower_bound(domain, seg, kind))
        except HypgeomError:
            continue
    h_bound = cap_hyperbolic_diameter_bound(domain, seg)
    exact = None
    if (
        isinstance(domain, Strip)
        and seg.a.imag == 0
        and seg.b.imag == 0
    ):
        lo, hi = sorted((seg.a.real, seg.b.real))
        exact = cap_strip_segment_exact(lo, hi, domain.half_width)
    # The provable chain: kappa0 <= kappa1 <= Phi(h_diam) <= exact.  The
    # symmetrization bound tau2 is reported but not part of the chain.
    chain = [b.value for b in bounds if b.kind != "teichmuller_bound"] + [h_bound]
    if exact is not None:
        chain.append(exact)
    ordering_ok = all(x <= y + 1e-12 for x, y in zip(chain, chain[1:]))
    return {
        "domain": domain.to_json(),
        "segment": [[seg.a.real, seg.a.imag], [seg.b.real, seg.b.imag]],
        "bounds": [
            {"kind": b.kind, "value": b.value, "J": b.J_value} for b in bounds
        ]
        + [{"kind": "hyperbolic_diameter_bound", "value": h_bound, "J": None}],
        "exact": exact,
        "ordering_ok": bool(ordering_ok),
    }
