"""Hyperbolic distances, set functionals, extremal configurations and
condenser capacity bounds on plane domains."""

from .capacity import (
    KAPPA0,
    KAPPA1_INTERVAL,
    CapacityBound,
    Segment,
    cap_groetzsch,
    cap_hyperbolic_diameter_bound,
    cap_lower_bound,
    cap_strip_segment_exact,
    capacity_report,
    segment_J,
)
from .domains import (
    Domain,
    ExpandingDisk,
    KeoghLune,
    RightHalfPlane,
    SlitPlane,
    Strip,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    domain_from_json,
    domain_from_preset,
    h_dist_slitplane,
    hyperbolic_distance,
    j_dist,
    keogh_F,
    keogh_F_limit,
    keogh_F_slope,
    keogh_map,
    keogh_map_inverse,
    keogh_taylor_coefficients,
    rho_density,
    strip_map,
    strip_map_inverse,
)
from .elliptic import Phi, Phi_inverse, agm, agm_iterations, ellip_K, mu, tau2
from .errors import (
    ConvergenceError,
    DegenerateSetError,
    HypgeomError,
    OutsideDomainError,
)
from .extremal import (
    ExtremalTriple,
    KappaSolution,
    M_of_u,
    brute_force_M,
    chi,
    chi_prime,
    extremal_points,
    extremal_triple,
    monotone_f_check,
    solve_kappa_H,
    t_of_u,
    theta_of_u,
    u0_solve,
    xi,
    xi_prime,
)
from .functionals import (
    J_functional,
    diam,
    diam_pair,
    h_diam,
    j_diam,
    ratio,
    reduce_to_triple,
    set_boundary_distance,
)
from .halfplane import (
    HyperbolicDisk,
    h_dist_disk,
    h_dist_halfplane,
    h_dist_rhp,
    hyperbolic_disk,
    phi,
)
from .quasihyperbolic import quasihyperbolic_oracle

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
