"""Command-line front end.

Subcommands: dist, functional, kappa-h, m-curve, capacity, slit-bound,
keogh-demo.  Output is JSON (default) or CSV with 15 significant digits,
'.' decimal separator and LF line endings; identical requests produce
byte-identical output.  Exit codes: 0 success, 2 malformed request,
3 numeric non-convergence, 4 point outside its domain.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import ROUND_FLOOR, Decimal

from . import __version__
from .capacity import Segment, capacity_report
from .domains import (
    domain_from_json,
    domain_from_preset,
    j_dist,
    keogh_F,
    keogh_F_limit,
    keogh_F_slope,
    keogh_taylor_coefficients,
)
from .errors import ConvergenceError, OutsideDomainError
from .extremal import M_of_u, extremal_points, solve_kappa_H, xi
from .functionals import (
    J_functional,
    diam,
    h_diam,
    j_diam,
    ratio,
    set_boundary_distance,
)
from .quasihyperbolic import quasihyperbolic_oracle

EXIT_SCHEMA = 2
EXIT_NONCONVERGENCE = 3
EXIT_MEMBERSHIP = 4


def _fmt(v: float) -> str:
    return format(v, ".15g")


def _round_down(v: float, digits: int = 15) -> float:
    """Truncate toward zero at the given number of significant digits.

    Emitted lower bounds must never round up at the last shown decimal.
    """
    if v == 0 or not math.isfinite(v):
        return v
    d = Decimal(v)
    exponent = d.adjusted() - digits + 1
    return float(d.quantize(Decimal(1).scaleb(exponent), rounding=ROUND_FLOOR))


def _parse_domain(text: str):
    if text.lstrip().startswith("{"):
        return domain_from_json(json.loads(text))
    return domain_from_preset(text)


def _parse_points(text: str) -> list[complex]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in data
    ):
        raise ValueError("points must be a JSON array of [re, im] pairs")
    return [complex(float(p[0]), float(p[1])) for p in data]


def _emit_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _check_tolerance(tol: float) -> float:
    if not 1e-13 <= tol <= 1e-3:
        raise ValueError(f"tolerance must lie in [1e-13, 1e-3], got {tol}")
    return tol


# ---------------------------------------------------------------------------
# subcommands


def _cmd_dist(args) -> None:
    domain = _parse_domain(args.domain)
    points = _parse_points(args.points)
    if len(points) != 2:
        raise ValueError("dist expects exactly two points")
    z, w = points
    out = {
        "domain": domain.to_json(),
        "h": domain.hyperbolic_distance(z, w),
        "j": j_dist(domain, z, w),
    }
    if args.quasi:
        out["quasihyperbolic"] = quasihyperbolic_oracle(
            domain, z, w, resolution=args.resolution
        )
    _emit_json(out)


def _cmd_functional(args) -> None:
    domain = _parse_domain(args.domain)
    points = _parse_points(args.points)
    _emit_json(
        {
            "domain": domain.to_json(),
            "diam": diam(points),
            "boundary_distance": set_boundary_distance(domain, points),
            "h_diam": h_diam(domain, points),
            "j_diam": j_diam(domain, points),
            "J": J_functional(domain, points),
            "ratio": ratio(domain, points),
        }
    )


def _cmd_kappa_h(args) -> None:
    sol = solve_kappa_H(tolerance=_check_tolerance(args.tolerance))
    _emit_json(
        {
            "u_star": sol.u_star,
            "t_star": sol.t_star,
            "theta_star": sol.theta_star,
            "kappa": sol.kappa,
            "extremal_points": [[p.real, p.imag] for p in sol.triple.points],
        }
    )


def emit_branch_curves(u_from: float, u_to: float, steps: int, stream=None) -> None:
    """CSV stream: u, xi(u), the large-u branch and their piecewise minimum."""
    if not (0.0 < u_from < u_to) or steps < 2:
        raise ValueError(f"bad curve range [{u_from}, {u_to}] with {steps} steps")
    stream = stream or sys.stdout
    stream.write("u,xi,red_branch,thick\n")
    du = (u_to - u_from) / (steps - 1)
    for k in range(steps):
        u = u_from + k * du
        red = u / math.log1p(2.0 * math.sinh(2.0 * u)) * 2.0
        thick = 2.0 * u / math.log1p(M_of_u(u))
        stream.write(
            f"{_fmt(u)},{_fmt(xi(u))},{_fmt(red)},{_fmt(thick)}\n"
        )


def _cmd_m_curve(args) -> None:
    emit_branch_curves(args.u_from, args.u_to, args.steps)


def _cmd_capacity(args) -> None:
    domain = _parse_domain(args.domain)
    data = json.loads(args.segment)
    if not (isinstance(data, list) and len(data) == 2):
        raise ValueError("segment must be a JSON array of two [re, im] pairs")
    seg = Segment(
        complex(float(data[0][0]), float(data[0][1])),
        complex(float(data[1][0]), float(data[1][1])),
    )
    report = capacity_report(domain, seg)
    for b in report["bounds"]:
        b["value"] = _round_down(b["value"])
    _emit_json(report)


def _cmd_slit_bound(args) -> None:
    domain = domain_from_preset("slit")
    w0 = 1.0 + 0.0j
    w1 = complex(2.121820474, 1.198476681)
    w2 = w1.conjugate()
    points = [w0, w1, w2]
    sides = {
        "h01": domain.hyperbolic_distance(w0, w1),
        "h02": domain.hyperbolic_distance(w0, w2),
        "h12": domain.hyperbolic_distance(w1, w2),
    }
    _emit_json(
        {
            "points": [[p.real, p.imag] for p in points],
            "sides": sides,
            "ratio": _round_down(ratio(domain, points)),
        }
    )


def _cmd_keogh_demo(args) -> None:
    a = args.a
    if not 0.0 < a < 1.0:
        raise ValueError(f"lune parameter must be in (0, 1), got {a}")
    a1, a2 = keogh_taylor_coefficients(a)
    sol = solve_kappa_H()
    e_star = extremal_points(sol.u_star)
    x = args.x
    f_val = keogh_F(a, x, e_star)
    slope_fd = (keogh_F(a, x, e_star) - keogh_F(a, x / 2.0, e_star)) / (x / 2.0)
    _emit_json(
        {
            "a": a,
            "a1": [a1.real, a1.imag],
            "a1_exact": [0.0, (1.0 - a * a) / 4.0],
            "a2": [a2.real, a2.imag],
            "a2_exact": [a * (1.0 - a * a) / 16.0, 0.0],
            "F_limit": keogh_F_limit(e_star),
            "F_at_x": f_val,
            "F_slope_exact": keogh_F_slope(a, e_star),
            "F_slope_fd": slope_fd,
            "x": x,
        }
    )


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypgeom", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="hyperbolic and distance-ratio distances")
    p.add_argument("--domain", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--quasi", action="store_true", help="add the grid oracle value")
    p.add_argument("--resolution", type=float, default=0.02)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("functional", help="set functionals of a point set")
    p.add_argument("--domain", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=_cmd_functional)

    p = sub.add_parser("kappa-h", help="half-plane constant and its minimizer")
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.set_defaults(func=_cmd_kappa_h)

    p = sub.add_parser("m-curve", help="CSV of the diameter-curve branches")
    p.add_argument("--from", dest="u_from", type=float, required=True)
    p.add_argument("--to", dest="u_to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=_cmd_m_curve)

    p = sub.add_parser("capacity", help="capacity bounds for a segment condenser")
    p.add_argument("--domain", default="strip1")
    p.add_argument("--segment", required=True)
    p.set_defaults(func=_cmd_capacity)

    p = sub.add_parser("slit-bound", help="slit-plane witness triple and its ratio")
    p.set_defaults(func=_cmd_slit_bound)

    p = sub.add_parser("keogh-demo", help="first-order lune-map checks")
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--x", type=float, default=1e-3)
    p.set_defaults(func=_cmd_keogh_demo)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except OutsideDomainError as exc:
        _emit_error("domain-membership", exc)
        return EXIT_MEMBERSHIP
    except ConvergenceError as exc:
        _emit_error("non-convergence", exc)
        return EXIT_NONCONVERGENCE
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        _emit_error("schema", exc)
        return EXIT_SCHEMA
    return 0


def _emit_error(kind: str, exc: Exception) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")


if __name__ == "__main__":
    sys.exit(main())
