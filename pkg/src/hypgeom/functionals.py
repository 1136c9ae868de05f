"""Finite-set functionals: diameters, boundary distance, J and ratios.

A point set is an ordered sequence of complex numbers.  Ties in diameter or
nearest-point extraction are broken by first occurrence, so the extracted
pairs are deterministic.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Sequence

from .domains import Domain, j_dist
from .errors import DegenerateSetError

PointSet = Sequence[complex]


def diam(points: PointSet) -> float:
    """Euclidean diameter: max pairwise |z_i - z_j|."""
    if len(points) < 2:
        raise DegenerateSetError("diameter needs at least two points")
    return max(abs(complex(a) - complex(b)) for a, b in combinations(points, 2))


def diam_pair(points: PointSet) -> tuple[complex, complex]:
    """The first pair realizing the Euclidean diameter."""
    if len(points) < 2:
        raise DegenerateSetError("diameter needs at least two points")
    best = max(combinations(points, 2), key=lambda p: abs(complex(p[0]) - complex(p[1])))
    return complex(best[0]), complex(best[1])


def set_boundary_distance(domain: Domain, points: PointSet) -> float:
    """min over the points of the Euclidean boundary distance."""
    if not points:
        raise DegenerateSetError("empty point set")
    return min(domain.boundary_distance(complex(p)) for p in points)


def nearest_boundary_point(domain: Domain, points: PointSet) -> complex:
    """The first point realizing the minimal boundary distance."""
    if not points:
        raise DegenerateSetError("empty point set")
    return complex(min(points, key=lambda p: domain.boundary_distance(complex(p))))


def h_diam(domain: Domain, points: PointSet) -> float:
    """Hyperbolic diameter: max pairwise hyperbolic distance."""
    if len(points) < 2:
        raise DegenerateSetError("hyperbolic diameter needs at least two points")
    return max(
        domain.hyperbolic_distance(complex(a), complex(b))
        for a, b in combinations(points, 2)
    )


def j_diam(domain: Domain, points: PointSet) -> float:
    """Diameter in the distance-ratio metric: max pairwise j."""
    if len(points) < 2:
        raise DegenerateSetError("j-diameter needs at least two points")
    return max(j_dist(domain, complex(a), complex(b)) for a, b in combinations(points, 2))


def J_functional(domain: Domain, points: PointSet) -> float:
    """J(E) = log(1 + d(E) / d(E, boundary))."""
    d = diam(points)
    if d == 0.0:
        raise DegenerateSetError("J undefined for a set of zero diameter")
    return math.log1p(d / set_boundary_distance(domain, points))


def ratio(domain: Domain, points: PointSet) -> float:
    """h_diam(E) / J(E), the quantity whose infimum is the domain constant."""
    return h_diam(domain, points) / J_functional(domain, points)


def reduce_to_triple(domain: Domain, points: PointSet) -> tuple[complex, complex, complex]:
    """Extract {nearest-boundary point, diameter pair} from a larger set.

    The reduction never increases the h/J ratio (the diameter and boundary
    distance of the triple match those of the full set while the hyperbolic
    diameter can only shrink).
    """
    z0 = nearest_boundary_point(domain, points)
    z1, z2 = diam_pair(points)
    return z0, z1, z2
