"""Separation quantities for a coprime pair (A, B).

delta(A, B) is the min of |B| over the roots of A and |A| over the roots of B.
delta_tilde(A, B) is the global minimum over the plane of max(|A(z)|, |B(z)|);
it cannot be certified cheaply, so it is reported as a bracket: a rigorous
lower bound delta / 3**max(N, K) from the sub-level separation result, and a
multistart local-search upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize
from scipy.stats import qmc

from .errors import CommonRootError, SeparationViolation
from .poly import Polynomial
from .roots import RootSet, find_roots

ZERO_THRESHOLD_FACTOR = 1e-12
SANDWICH_TOL = 1e-9


@dataclass
class DeltaReport:
    delta: float
    argmin_witness: complex
    delta_tilde_lower: float | None = None
    delta_tilde_upper: float | None = None
    tilde_witness: complex | None = None
    sandwich_ok: bool | None = None
    T_bound_note: float | None = None
    common_root: bool = False

    def to_json_dict(self) -> dict:
        def c(z):
            return None if z is None else [z.real, z.imag]

        return {
            "delta": self.delta,
            "argmin_witness": c(self.argmin_witness),
            "delta_tilde_lower": self.delta_tilde_lower,
            "delta_tilde_upper": self.delta_tilde_upper,
            "tilde_witness": c(self.tilde_witness),
            "sandwich_ok": self.sandwich_ok,
            "T_bound_note": self.T_bound_note,
            "common_root": self.common_root,
        }


def _delta_value(
    A: Polynomial, B: Polynomial, rootsA: RootSet, rootsB: RootSet
) -> tuple[float, complex]:
    vals_a = [(abs(B(r)), r) for r in rootsA.roots]
    vals_b = [(abs(A(r)), r) for r in rootsB.roots]
    value, witness = min(vals_a + vals_b, key=lambda t: t[0])
    return float(value), complex(witness)


def delta(
    A: Polynomial,
    B: Polynomial,
    rootsA: RootSet,
    rootsB: RootSet,
    zero_threshold_factor: float = ZERO_THRESHOLD_FACTOR,
) -> DeltaReport:
    """Exact-by-construction min over roots; raises CommonRootError when the
    value underflows the zero threshold (downstream solvers must refuse)."""
    if A.normalize().degree < 1 or B.normalize().degree < 1:
        raise ValueError("delta requires two nonconstant polynomials")
    value, witness = _delta_value(A, B, rootsA, rootsB)
    threshold = zero_threshold_factor * max(A.norm(), B.norm())
    report = DeltaReport(delta=value, argmin_witness=witness,
                         common_root=value < threshold)
    if report.common_root:
        raise CommonRootError(
            f"delta = {value:.3e} below common-root threshold {threshold:.3e}",
            report=report,
        )
    return report


def _objective(A: Polynomial, B: Polynomial):
    def f(xy):
        z = complex(xy[0], xy[1])
        return max(abs(A(z)), abs(B(z)))

    return f


def _grid_seeds(radius: float, n_rings: int, n_angles: int) -> list[complex]:
    seeds = [0j]
    for k in range(n_rings):
        r = radius * np.sqrt((k + 0.5) / n_rings)
        for m in range(n_angles):
            theta = 2 * np.pi * (m + 0.5 * (k % 2)) / n_angles
            seeds.append(r * np.exp(1j * theta))
    return seeds


def delta_tilde(
    A: Polynomial,
    B: Polynomial,
    rootsA: RootSet | None = None,
    rootsB: RootSet | None = None,
    n_rings: int = 5,
    n_angles: int = 10,
    restart_tol: float = 1e-10,
    max_restarts: int = 8,
) -> tuple[float, float, complex]:
    """Bracket (lower, upper) for the global min of max(|A|, |B|) plus the
    argmin of the upper search.

    Seeds: all roots of A, B, A', B' and a polar grid over the joint Cauchy
    disk. Each seed runs derivative-free simplex descent (the objective is
    not smooth at the zeros), restarted until gains fall below restart_tol.
    """
    rootsA = rootsA or find_roots(A)
    rootsB = rootsB or find_roots(B)
    dval, _ = _delta_value(A, B, rootsA, rootsB)
    n = A.normalize().degree
    k = B.normalize().degree
    lower = max(dval / 3.0 ** max(n, k), 0.0)

    seeds: list[complex] = list(rootsA.roots) + list(rootsB.roots)
    for q in (A.derivative(), B.derivative()):
        qn = q.normalize()
        if qn.degree >= 1:
            seeds.extend(find_roots(qn).roots)
    radius = max(rootsA.cauchy_bound, rootsB.cauchy_bound)
    seeds.extend(_grid_seeds(radius, n_rings, n_angles))

    f = _objective(A, B)
    best_val = np.inf
    best_z = 0j
    for s in seeds:
        x = np.array([s.real, s.imag])
        val = f(x)
        for _ in range(max_restarts):
            res = optimize.minimize(
                f, x, method="Nelder-Mead",
                options={"maxiter": 50, "xatol": 1e-12, "fatol": 1e-14},
            )
            if res.fun <= val - restart_tol:
                val, x = res.fun, res.x
            else:
                if res.fun < val:
                    val, x = res.fun, res.x
                break
        if val < best_val:
            best_val = val
            best_z = complex(x[0], x[1])
    return lower, float(best_val), best_z


def delta_report(
    A: Polynomial,
    B: Polynomial,
    rootsA: RootSet | None = None,
    rootsB: RootSet | None = None,
) -> DeltaReport:
    """Full report: delta, the delta-tilde bracket, and the sandwich flag.

    Unlike delta(), a common root is reported (delta ~ 0) instead of raised.
    """
    rootsA = rootsA or find_roots(A)
    rootsB = rootsB or find_roots(B)
    try:
        report = delta(A, B, rootsA, rootsB)
    except CommonRootError as exc:
        report = exc.report
    lower, upper, witness = delta_tilde(A, B, rootsA, rootsB)
    report.delta_tilde_lower = lower
    report.delta_tilde_upper = upper
    report.tilde_witness = witness
    report.sandwich_ok = bool(
        lower - SANDWICH_TOL <= upper <= report.delta + SANDWICH_TOL
    )
    return report


def sublevel_member(p: Polynomial, eps: float, z: complex) -> bool:
    """Whether |p(z)| < eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return bool(abs(p(z)) < eps)


@dataclass(frozen=True)
class SeparationReport:
    n_samples: int
    hits_a: int
    hits_b: int
    joint_hits: int
    eps_a: float
    eps_b: float


def check_separation(
    A: Polynomial,
    B: Polynomial,
    rootsA: RootSet,
    rootsB: RootSet,
    delta_value: float,
    n_samples: int,
    seed: int = 0,
) -> SeparationReport:
    """Sample the plane and verify the sub-level sets L(A, delta/3^N) and
    L(B, delta/3^K) never intersect.

    Sampling mixes a Halton set over the joint Cauchy disk with rings around
    every root at the separation-relevant scale. A joint hit is a numerical
    bug (the sets are provably disjoint), so it raises SeparationViolation.
    """
    if A.norm() > 1 + 1e-12 or B.norm() > 1 + 1e-12:
        raise ValueError("separation check requires norm(A), norm(B) <= 1")
    if delta_value <= 0:
        raise ValueError("separation check requires delta > 0")

    n = A.normalize().degree
    k = B.normalize().degree
    eps_a = delta_value / 3.0**n
    eps_b = delta_value / 3.0**k

    radius = max(rootsA.cauchy_bound, rootsB.cauchy_bound)
    n_disk = max(1, int(0.7 * n_samples))
    halton = qmc.Halton(d=2, scramble=True, seed=seed)
    uv = halton.random(n_disk)
    pts_disk = radius * np.sqrt(uv[:, 0]) * np.exp(2j * np.pi * uv[:, 1])

    ring_pts: list[np.ndarray] = []
    all_roots = [(r, rootsB.roots) for r in rootsA.roots]
    all_roots += [(r, rootsA.roots) for r in rootsB.roots]
    n_rings = 8
    budget = n_samples - n_disk
    per_ring = max(4, budget // max(1, len(all_roots) * n_rings))
    for root, others in all_roots:
        d_near = min(abs(root - o) for o in others)
        if d_near == 0:
            d_near = 1e-3 * (1.0 + radius)
        radii = d_near * np.geomspace(1e-3, 1.5, n_rings)
        for i, r in enumerate(radii):
            ang = 2 * np.pi * (np.arange(per_ring) + 0.37 * i) / per_ring
            ring_pts.append(root + r * np.exp(1j * ang))
    pts = np.concatenate([pts_disk] + ring_pts) if ring_pts else pts_disk

    in_a = np.abs(A(pts)) < eps_a
    in_b = np.abs(B(pts)) < eps_b
    joint = int(np.count_nonzero(in_a & in_b))
    report = SeparationReport(
        n_samples=len(pts),
        hits_a=int(np.count_nonzero(in_a)),
        hits_b=int(np.count_nonzero(in_b)),
        joint_hits=joint,
        eps_a=eps_a,
        eps_b=eps_b,
    )
    if joint:
        bad = pts[in_a & in_b][0]
        raise SeparationViolation(
            f"{joint} joint sub-level hits (first at {bad:.6g}); "
            "this indicates a numerical bug"
        )
    return report
