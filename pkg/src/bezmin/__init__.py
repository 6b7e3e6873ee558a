"""Minimal Bezout cofactors for coprime complex polynomials.

Core objects: Polynomial (dense complex coefficients), RootSet (certified
roots), DeltaReport (separation quantities), ContourSystem (circular-arc
region boundaries), and BezoutSolution (the minimal-degree pair R, S with
A*R + B*S = P).
"""

from .poly import Polynomial
from .roots import RootSet, find_roots, perturb_to_simple
from .separation import (
    DeltaReport,
    check_separation,
    delta,
    delta_report,
    delta_tilde,
    sublevel_member,
)
from .sylvester import (
    BezoutSolution,
    SylvesterMatrix,
    build,
    inverse_norm_report,
    resultant,
    solve,
    solve_monomial_all,
    solve_rhs,
)
from .regions import (
    Arc,
    ContourSystem,
    Disk,
    RegionKind,
    RegionSpec,
    build_region,
    contour_metrics,
    invert_contour,
    membership,
    winding_number,
)
from .backends import (
    certify_main_bound,
    solve_quadrature,
    solve_residue,
    solve_reversed,
)
from .svgout import emit_svg

__all__ = [
    "Polynomial",
    "RootSet",
    "find_roots",
    "perturb_to_simple",
    "DeltaReport",
    "delta",
    "delta_report",
    "delta_tilde",
    "sublevel_member",
    "check_separation",
    "SylvesterMatrix",
    "BezoutSolution",
    "build",
    "solve",
    "solve_rhs",
    "solve_monomial_all",
    "resultant",
    "inverse_norm_report",
    "Arc",
    "ContourSystem",
    "Disk",
    "RegionKind",
    "RegionSpec",
    "build_region",
    "contour_metrics",
    "invert_contour",
    "membership",
    "winding_number",
    "certify_main_bound",
    "solve_quadrature",
    "solve_residue",
    "solve_reversed",
    "emit_svg",
]

__version__ = "0.1.0"
