"""Grid approximation of the quasihyperbolic distance.

Shortest path in an 8-connected grid graph with trapezoidal edge weights
|p - q| * (1/d(p) + 1/d(q)) / 2, where d is the Euclidean boundary distance.
The approximation converges to inf over paths of the integral of |dz|/d(z)
from above as the grid step shrinks (up to the diagonal anisotropy of the
8-neighbourhood).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra

from .domains import Domain
from .errors import OutsideDomainError


def quasihyperbolic_oracle(
    domain: Domain,
    z: complex,
    w: complex,
    resolution: float = 0.02,
    margin: float | None = None,
) -> float:
    """Approximate quasihyperbolic distance between z and w.

    The grid covers the bounding box of the two points, padded by ``margin``
    (default: half the separation plus a few grid steps), anchored so that z
    is a node; w is attached to the corners of its cell.
    """
    z, w = complex(z), complex(w)
    if not domain.contains(z) or not domain.contains(w):
        raise OutsideDomainError(f"window endpoints {z}, {w} must lie in the domain")
    if not resolution > 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if z == w:
        return 0.0
    if margin is None:
        margin = 0.5 * abs(z - w) + 4.0 * resolution

    x_lo = min(z.real, w.real) - margin
    x_hi = max(z.real, w.real) + margin
    y_lo = min(z.imag, w.imag) - margin
    y_hi = max(z.imag, w.imag) + margin
    # Anchor the lattice at z.
    i_lo = math.floor((x_lo - z.real) / resolution)
    i_hi = math.ceil((x_hi - z.real) / resolution)
    j_lo = math.floor((y_lo - z.imag) / resolution)
    j_hi = math.ceil((y_hi - z.imag) / resolution)
    nx = i_hi - i_lo + 1
    ny = j_hi - j_lo + 1

    xs = z.real + resolution * (i_lo + np.arange(nx))
    ys = z.imag + resolution * (j_lo + np.arange(ny))
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    pts = gx.ravel() + 1j * gy.ravel()

    dists = np.empty(pts.size)
    inside = np.empty(pts.size, dtype=bool)
    for k, p in enumerate(pts):
        ok = domain.contains(p)
        inside[k] = ok
        dists[k] = domain.boundary_distance(p) if ok else np.inf

    def node(i: int, j: int) -> int:
        return (i - i_lo) * ny + (j - j_lo)

    rows, cols, weights = [], [], []
    inv = 1.0 / dists
    idx = np.arange(pts.size).reshape(nx, ny)
    for di, dj in ((1, 0), (0, 1), (1, 1), (1, -1)):
        a = idx[max(0, -di) : nx - max(0, di), max(0, -dj) : ny - max(0, dj)].ravel()
        b = idx[max(0, di) : nx - max(0, -di), max(0, dj) : ny - max(0, -dj)].ravel()
        good = inside[a] & inside[b]
        a, b = a[good], b[good]
        step = resolution * math.hypot(di, dj)
        rows.append(a)
        cols.append(b)
        weights.append(step * 0.5 * (inv[a] + inv[b]))

    # Attach w to the corners of its grid cell.
    iw = (w.real - z.real) / resolution
    jw = (w.imag - z.imag) / resolution
    n_grid = pts.size
    w_index = n_grid
    inv_w = 1.0 / domain.boundary_distance(w)
    extra_rows, extra_cols, extra_weights = [], [], []
    corners = {
        (ci, cj)
        for ci in (math.floor(iw), math.ceil(iw))
        for cj in (math.floor(jw), math.ceil(jw))
    }
    for ci, cj in corners:
        k = node(ci, cj)
        if not inside[k]:
            continue
        p = pts[k]
        if p == w:
            w_index = k
            extra_rows, extra_cols, extra_weights = [], [], []
            break
        extra_rows.append(k)
        extra_cols.append(n_grid)
        extra_weights.append(abs(p - w) * 0.5 * (inv[k] + inv_w))
    n_total = n_grid + (1 if w_index == n_grid else 0)
    if w_index == n_grid and not extra_rows:
        raise OutsideDomainError(f"no admissible grid cell around {w}")

    rows = np.concatenate([*rows, np.asarray(extra_rows, dtype=int)])
    cols = np.concatenate([*cols, np.asarray(extra_cols, dtype=int)])
    weights = np.concatenate([*weights, np.asarray(extra_weights)])
    graph = coo_matrix((weights, (rows, cols)), shape=(n_total, n_total))

    src = node(0, 0)
    out = dijkstra(graph.tocsr(), directed=False, indices=src)
    val = out[w_index]
    if not math.isfinite(val):
        raise OutsideDomainError(f"window does not connect {z} to {w} inside the domain")
    return float(val)
