"""Analytic solution backends for A*R + B*S = P.

Three routes to the same unique minimal-degree pair:

* residue/interpolation: for simple roots the contour formulas collapse to
  values at the roots, S(a_i) = P(a_i)/B(a_i) and R(b_j) = P(b_j)/A(b_j),
  so S and R are Lagrange interpolants. This is the well-conditioned form;
  the literal residue sum is kept as a debug oracle.
* direct quadrature of the contour integrals over constructed arc systems.
* the reversal pipeline: solve the companion identity with right-hand side
  z^(N+K-1) for the coefficient-reversed pair, then reverse back. This is
  the route that stays bounded when roots are large.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sylvester
from .errors import (
    BadContour,
    CommonRootError,
    IllConditionedInterpolation,
    MultipleRootsError,
    QuadratureNotConverged,
    ZeroRootError,
)
from .poly import Polynomial
from .regions import Arc, ContourSystem, winding_number
from .roots import RootSet, find_roots
from .sylvester import BezoutSolution


class DifferenceQuotientKernel:
    """g(zeta, z) = (G(zeta) - G(z)) / (zeta - z), a polynomial of degree
    deg(G) - 1 in z whose coefficients are polynomials in zeta."""

    def __init__(self, base: Polynomial):
        self.base = base.normalize()
        self.n = self.base.degree

    def coeffs_in_z(self, zeta):
        """Array c with c[j] = coefficient of z^j; zeta may be an ndarray,
        giving shape (n, len(zeta))."""
        g = self.base
        zeta = np.asarray(zeta, dtype=complex)
        c = np.empty((self.n,) + zeta.shape, dtype=complex)
        c[self.n - 1] = g.coeff(self.n)
        for j in range(self.n - 2, -1, -1):
            c[j] = c[j + 1] * zeta + g.coeff(j + 1)
        return c

    def __call__(self, zeta: complex, z: complex) -> complex:
        c = self.coeffs_in_z(complex(zeta))
        acc = 0j
        for j in range(self.n - 1, -1, -1):
            acc = acc * z + c[j]
        return acc


def _guard_simple(roots: RootSet, who: str) -> None:
    if roots.any_suspect:
        raise MultipleRootsError(
            f"{who} has multiplicity-suspect roots; use the Sylvester "
            "backend or perturb_to_simple first"
        )


def _guard_coprime(A: Polynomial, B: Polynomial, rootsA: RootSet, rootsB: RootSet) -> None:
    threshold = 1e-12 * max(A.norm(), B.norm())
    worst = min(
        min(abs(B(r)) for r in rootsA.roots),
        min(abs(A(r)) for r in rootsB.roots),
    )
    if worst < threshold:
        raise CommonRootError(
            f"separation {worst:.3e} under the common-root threshold"
        )


def _interpolate(nodes, values) -> Polynomial:
    """Coefficients of the unique interpolant, assembled from deflations of
    the full node product scaled by barycentric weights."""
    nodes = [complex(x) for x in nodes]
    full = Polynomial.from_roots(nodes)
    n = len(nodes)
    out = np.zeros(n, dtype=complex)
    for x, y in zip(nodes, values):
        # synthetic division of `full` by (z - x)
        q = np.empty(n, dtype=complex)
        acc = 0j
        for k in range(n, 0, -1):
            acc = full.coeff(k) + x * acc
            q[k - 1] = acc
        qx = 0j
        for k in range(n - 1, -1, -1):
            qx = qx * x + q[k]
        if qx == 0 or not np.isfinite(abs(qx)):
            raise IllConditionedInterpolation(
                f"repeated or degenerate node {x:.6g}"
            )
        w = y / qx
        if not np.isfinite(abs(w)):
            raise IllConditionedInterpolation(
                f"barycentric weight overflow at node {x:.6g}"
            )
        out += w * q
    return Polynomial(out)


def solve_residue(
    A: Polynomial,
    B: Polynomial,
    rootsA: RootSet,
    rootsB: RootSet,
    P: Polynomial | None = None,
) -> BezoutSolution:
    """Closed-form evaluation of the contour formulas for simple roots:
    interpolate P/B at the roots of A and P/A at the roots of B."""
    P = P if P is not None else Polynomial([1.0])
    _guard_simple(rootsA, "A")
    _guard_simple(rootsB, "B")
    _guard_coprime(A, B, rootsA, rootsB)
    n = A.normalize().degree
    k = B.normalize().degree
    if P.degree > n + k - 1:
        raise ValueError("deg P must be at most N+K-1")
    S = _interpolate(rootsA.roots, [P(a) / B(a) for a in rootsA.roots])
    R = _interpolate(rootsB.roots, [P(b) / A(b) for b in rootsB.roots])
    residual = (A * R + B * S - P).norm()
    return BezoutSolution(R=R, S=S, residual=residual, backend="residue")


def residue_sum_solution(
    A: Polynomial,
    B: Polynomial,
    rootsA: RootSet,
    rootsB: RootSet,
    P: Polynomial | None = None,
) -> BezoutSolution:
    """Literal residue summation of the coefficient integrals. Identical in
    exact arithmetic to solve_residue but worse conditioned; debug oracle."""
    P = P if P is not None else Polynomial([1.0])
    _guard_simple(rootsA, "A")
    _guard_simple(rootsB, "B")
    _guard_coprime(A, B, rootsA, rootsB)
    An, Bn = A.normalize(), B.normalize()
    n, k = An.degree, Bn.degree
    dA, dB = A.derivative(), B.derivative()

    s = np.zeros(n, dtype=complex)
    for j in range(n):
        acc = 0j
        for kk in range(j + 1, n + 1):
            integral = sum(
                P(a) * a ** (kk - j - 1) / (dA(a) * B(a)) for a in rootsA.roots
            )
            acc += An.coeff(kk) * integral
        s[j] = acc
    r = np.zeros(k, dtype=complex)
    for j in range(k):
        acc = 0j
        for kk in range(j + 1, k + 1):
            integral = sum(
                P(b) * b ** (kk - j - 1) / (dB(b) * A(b)) for b in rootsB.roots
            )
            acc += Bn.coeff(kk) * integral
        r[j] = acc
    R, S = Polynomial(r), Polynomial(s)
    residual = (A * R + B * S - P).norm()
    return BezoutSolution(R=R, S=S, residual=residual, backend="residue:literal")


# ---------------------------------------------------------------------------
# quadrature backend


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and complex dzeta-weights per arc, flattened."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, f) -> complex:
        return complex(np.sum(self.weights * f(self.nodes)))


def _subdivide(arcs: list[Arc], max_sweep: float, poles: np.ndarray) -> list[Arc]:
    """Split arcs until sweeps are below max_sweep and arc length does not
    exceed the distance to the nearest integrand pole (keeps the
    Gauss-Legendre convergence rate healthy)."""
    out: list[Arc] = []
    stack = list(arcs)
    while stack:
        a = stack.pop()
        mid = a.point(0.5)
        d = float(np.min(np.abs(poles - mid))) if len(poles) else math.inf
        if abs(a.sweep) > max_sweep or (a.length > d and abs(a.sweep) > 1e-3):
            half = a.start_angle + a.sweep / 2.0
            stack.append(Arc(a.circle, a.start_angle, half, a.ccw))
            stack.append(Arc(a.circle, half, a.end_angle, a.ccw))
        else:
            out.append(a)
    return out


def build_rule(
    contour: ContourSystem,
    order: int,
    poles: np.ndarray | None = None,
) -> QuadratureRule:
    arcs = _subdivide(
        contour.arcs, math.pi / 2.0, poles if poles is not None else np.array([])
    )
    x, w = np.polynomial.legendre.leggauss(order)
    nodes = []
    weights = []
    for a in arcs:
        t0, t1 = a.start_angle, a.end_angle
        theta = 0.5 * (t1 - t0) * x + 0.5 * (t1 + t0)
        e = np.exp(1j * theta)
        z = a.circle.center + a.circle.radius * e
        dz = 1j * a.circle.radius * e * 0.5 * (t1 - t0)
        nodes.append(z)
        weights.append(w * dz)
    return QuadratureRule(
        nodes=np.concatenate(nodes), weights=np.concatenate(weights), order=order
    )


def _check_contour(
    contour: ContourSystem, inside: RootSet, outside: RootSet, who: str
) -> None:
    for r in inside.roots:
        if winding_number(contour, r) != 1:
            raise BadContour(f"{who} does not wind once around root {r:.6g}")
    for r in outside.roots:
        if winding_number(contour, r) != 0:
            raise BadContour(f"{who} must exclude root {r:.6g}")


def _coefficients_from_integrals(
    G: Polynomial, moments: np.ndarray
) -> np.ndarray:
    """c_j = sum_{k=j+1}^{n} g_k moments[k-j-1] (the expanded kernel form)."""
    g = G.normalize()
    n = g.degree
    out = np.zeros(n, dtype=complex)
    for j in range(n):
        out[j] = sum(g.coeff(kk) * moments[kk - j - 1] for kk in range(j + 1, n + 1))
    return out


def solve_quadrature(
    A: Polynomial,
    B: Polynomial,
    contours: tuple[ContourSystem, ContourSystem],
    P: Polynomial | None = None,
    rootsA: RootSet | None = None,
    rootsB: RootSet | None = None,
    start_order: int = 16,
    max_order: int = 1024,
    tol: float = 1e-9,
) -> BezoutSolution:
    """Evaluate the coefficient contour integrals by per-arc Gauss-Legendre
    quadrature, doubling the order until every coefficient is stable.

    contours[0] must wind once around each root of A and zero times around
    each root of B; contours[1] the opposite.
    """
    P = P if P is not None else Polynomial([1.0])
    rootsA = rootsA or find_roots(A)
    rootsB = rootsB or find_roots(B)
    gamma1, gamma2 = contours
    _check_contour(gamma1, rootsA, rootsB, "contour 1")
    _check_contour(gamma2, rootsB, rootsA, "contour 2")
    An, Bn = A.normalize(), B.normalize()
    n, k = An.degree, Bn.degree
    if P.degree > n + k - 1:
        raise ValueError("deg P must be at most N+K-1")
    poles = np.array(list(rootsA.roots) + list(rootsB.roots))

    def integrand(maxpow):
        def moments(rule: QuadratureRule) -> np.ndarray:
            base = rule.weights * P(rule.nodes) / (A(rule.nodes) * B(rule.nodes))
            out = np.empty(maxpow, dtype=complex)
            acc = base.copy()
            for m in range(maxpow):
                out[m] = np.sum(acc) / (2j * math.pi)
                acc = acc * rule.nodes
            return out

        return moments

    def solve_at(order: int) -> tuple[np.ndarray, np.ndarray]:
        m1 = integrand(n)(build_rule(gamma1, order, poles))
        m2 = integrand(k)(build_rule(gamma2, order, poles))
        s = _coefficients_from_integrals(An, m1)
        r = _coefficients_from_integrals(Bn, m2)
        return r, s

    order = start_order
    r_prev, s_prev = solve_at(order)
    while order <= max_order:
        order *= 2
        r_new, s_new = solve_at(order)
        change = max(
            float(np.max(np.abs(r_new - r_prev))) if len(r_new) else 0.0,
            float(np.max(np.abs(s_new - s_prev))) if len(s_new) else 0.0,
        )
        if change <= tol:
            R, S = Polynomial(r_new), Polynomial(s_new)
            residual = (A * R + B * S - P).norm()
            return BezoutSolution(
                R=R, S=S, residual=residual, backend="quadrature"
            )
        r_prev, s_prev = r_new, s_new
    raise QuadratureNotConverged(
        f"coefficients still moving at order {max_order}"
    )


def argument_principle_count(
    P: Polynomial,
    contour: ContourSystem,
    start_order: int = 16,
    max_order: int = 512,
    tol: float = 1e-8,
) -> complex:
    """(1/2 pi i) * integral of P'/P over the contour: counts enclosed zeros
    of P weighted by winding. Order doubles until stable."""
    dP = P.derivative()
    roots = np.array(find_roots(P).roots)

    def value(order):
        rule = build_rule(contour, order, roots)
        return rule.integrate(lambda z: dP(z) / P(z)) / (2j * math.pi)

    order = start_order
    prev = value(order)
    while order <= max_order:
        order *= 2
        cur = value(order)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise QuadratureNotConverged(
        f"argument-principle integral unstable at order {max_order}"
    )


# ---------------------------------------------------------------------------
# reversal pipeline


def solve_reversed(
    A: Polynomial,
    B: Polynomial,
    inner: str = "sylvester",
    translation: complex | None = None,
) -> BezoutSolution:
    """Solve via the coefficient-reversed pair and right-hand side z^(N+K-1),
    then reverse the solutions back; A(0) and B(0) must be nonzero (translate
    first when a root sits at the origin)."""
    if translation is not None and translation != 0:
        shifted = solve_reversed(
            A.translate(translation), B.translate(translation), inner=inner
        )
        R = shifted.R.translate(-translation)
        S = shifted.S.translate(-translation)
        residual = (A * R + B * S - Polynomial([1.0])).norm()
        return BezoutSolution(
            R=R, S=S, residual=residual, backend=shifted.backend + "+translate"
        )

    An, Bn = A.normalize(), B.normalize()
    n, k = An.degree, Bn.degree
    if abs(A(0)) < 1e-12 * A.norm() or abs(B(0)) < 1e-12 * B.norm():
        raise ZeroRootError(
            "A(0) or B(0) vanishes; pass a translation to move roots off 0"
        )
    At = An.reverse(n)
    Bt = Bn.reverse(k)
    Pt = Polynomial.monomial(n + k - 1)
    if inner == "sylvester":
        inner_sol = sylvester.solve(At, Bt, Pt)
    elif inner == "residue":
        inner_sol = solve_residue(At, Bt, find_roots(At), find_roots(Bt), Pt)
    else:
        raise ValueError(f"unknown inner backend {inner!r}")
    R = Polynomial([inner_sol.R.coeff(k - 1 - i) for i in range(k)])
    S = Polynomial([inner_sol.S.coeff(n - 1 - i) for i in range(n)])
    residual = (A * R + B * S - Polynomial([1.0])).norm()
    return BezoutSolution(
        R=R, S=S, residual=residual, backend=f"reversed[{inner}]"
    )


# ---------------------------------------------------------------------------
# main-bound certification


@dataclass
class BoundCertification:
    ratio_r: float
    ratio_s: float
    crude_ratio_r: float
    crude_ratio_s: float
    delta: float
    norm_r: float
    norm_s: float
    norm_cap: float
    ceiling: float | None
    passed: bool | None

    def to_json_dict(self) -> dict:
        return dict(self.__dict__)


def certify_main_bound(
    A: Polynomial,
    B: Polynomial,
    solution: BezoutSolution,
    delta_value: float,
    ceiling: float | None = None,
) -> BoundCertification:
    """Ratios norm(R) * delta^2 / max(1, max-norm) (and for S), checked
    against the empirical per-degree ceiling table when available."""
    if delta_value <= 0:
        raise ValueError("certification requires delta > 0")
    n = A.normalize().degree
    k = B.normalize().degree
    cap = max(1.0, A.norm(), B.norm())
    nr, ns = solution.R.norm(), solution.S.norm()
    ratio_r = nr * delta_value**2 / cap
    ratio_s = ns * delta_value**2 / cap
    crude_r = nr * delta_value ** min(n, k)
    crude_s = ns * delta_value ** min(n, k)
    if ceiling is None:
        from .ceilings import lookup_ceiling

        ceiling = lookup_ceiling(n, k)
    passed = None if ceiling is None else bool(max(ratio_r, ratio_s) <= ceiling)
    return BoundCertification(
        ratio_r=ratio_r,
        ratio_s=ratio_s,
        crude_ratio_r=crude_r,
        crude_ratio_s=crude_s,
        delta=delta_value,
        norm_r=nr,
        norm_s=ns,
        norm_cap=cap,
        ceiling=ceiling,
        passed=passed,
    )
