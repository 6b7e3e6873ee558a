"""Root extraction with residual certificates and multiplicity flags.

Roots come from the eigenvalues of the (balanced) companion matrix and are
then polished with a few Newton steps. Every downstream quantity in the
package (separation, contours, interpolation) consumes the RootSet produced
here, so residuals and cluster flags are recorded explicitly rather than
trusted implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DegreeZeroError
from .poly import Polynomial

DEFAULT_RESIDUAL_TOL = 1e-9
CLUSTER_TOL_FACTOR = 1e-7


@dataclass(frozen=True)
class RootSet:
    """All roots of one polynomial plus the certificates downstream code needs.

    residuals[i] = |p(roots[i])|. The set is `verified` when every residual is
    below residual_tolerance * norm(p) * (1 + |root|)**degree. Roots closer to
    each other than the cluster tolerance are flagged multiplicity_suspect;
    the interpolation backends refuse flagged sets, the Sylvester backend does
    not care.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    multiplicity_suspect: tuple[bool, ...]
    cauchy_bound: float
    verified: bool
    residual_tolerance: float = DEFAULT_RESIDUAL_TOL

    @property
    def any_suspect(self) -> bool:
        return any(self.multiplicity_suspect)

    def to_json_dict(self) -> dict:
        return {
            "roots": [[r.real, r.imag] for r in self.roots],
            "residuals": list(self.residuals),
            "multiplicity_suspect": list(self.multiplicity_suspect),
            "cauchy_bound": self.cauchy_bound,
            "verified": self.verified,
        }


def _companion(monic_coeffs: np.ndarray) -> np.ndarray:
    """Companion matrix of a monic polynomial given by all coefficients
    (constant first, leading 1 last)."""
    n = len(monic_coeffs) - 1
    m = np.zeros((n, n), dtype=complex)
    m[1:, :-1] = np.eye(n - 1)
    m[:, -1] = -monic_coeffs[:-1]
    return m


def _balance(m: np.ndarray) -> np.ndarray:
    """Osborne-style diagonal balancing in powers of 2; similarity transform,
    so eigenvalues are unchanged while their conditioning improves."""
    a = m.copy()
    n = a.shape[0]
    for _ in range(8):
        converged = True
        for i in range(n):
            row = np.sum(np.abs(a[i, :])) - abs(a[i, i])
            col = np.sum(np.abs(a[:, i])) - abs(a[i, i])
            if row == 0.0 or col == 0.0:
                continue
            f = 1.0
            c, r = col, row
            while c < r / 2.0:
                c *= 2.0
                r /= 2.0
                f *= 2.0
            while c > r * 2.0:
                c /= 2.0
                r *= 2.0
                f /= 2.0
            if f != 1.0:
                converged = False
                a[i, :] /= f
                a[:, i] *= f
        if converged:
            break
    return a


def find_roots(
    p: Polynomial,
    residual_tolerance: float = DEFAULT_RESIDUAL_TOL,
    newton_steps: int = 3,
) -> RootSet:
    """All complex roots of p, with residuals and cluster flags.

    Raises DegreeZeroError for constant input. A set whose polished residuals
    still exceed tolerance is returned with verified=False rather than raised,
    so callers can inspect it.
    """
    q = p.normalize()
    n = q.degree
    if n < 1:
        raise DegreeZeroError("cannot extract roots of a constant polynomial")
    cs = np.asarray(q.coeffs[: n + 1], dtype=complex)
    lead = cs[-1]
    cauchy_bound = 1.0 + float(np.max(np.abs(cs))) / abs(lead)

    monic = cs / lead
    if n == 1:
        roots = np.array([-monic[0]], dtype=complex)
    else:
        roots = np.linalg.eigvals(_balance(_companion(monic)))

    dp = p.derivative()
    for _ in range(max(0, newton_steps)):
        vals = p(roots)
        dvals = dp(roots)
        ok = np.abs(dvals) > 0
        step = np.zeros_like(roots)
        step[ok] = vals[ok] / dvals[ok]
        # reject steps that overshoot; near multiple roots Newton may not help
        cand = roots - step
        better = np.abs(p(cand)) <= np.abs(vals)
        roots = np.where(better, cand, roots)

    residuals = np.abs(p(roots))
    nrm = p.norm()
    caps = residual_tolerance * nrm * (1.0 + np.abs(roots)) ** n
    verified = bool(np.all(residuals <= caps))

    cluster_tol = CLUSTER_TOL_FACTOR * (1.0 + cauchy_bound)
    suspect = [False] * n
    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < cluster_tol:
                suspect[i] = True
                suspect[j] = True

    order = np.lexsort((roots.imag, roots.real))
    roots = roots[order]
    residuals = residuals[order]
    suspect = [suspect[k] for k in order]

    return RootSet(
        roots=tuple(complex(r) for r in roots),
        residuals=tuple(float(r) for r in residuals),
        multiplicity_suspect=tuple(suspect),
        cauchy_bound=cauchy_bound,
        verified=verified,
        residual_tolerance=residual_tolerance,
    )


def _jittered_roots(roots: np.ndarray, spread: float, cluster_tol: float) -> np.ndarray:
    """Separate clustered roots by deterministic offsets of size `spread`."""
    out = roots.astype(complex).copy()
    n = len(out)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(out[i] - out[j]) < cluster_tol:
                # rotate the pair apart; direction varies with indices so
                # triple clusters separate too
                phase = np.exp(2j * np.pi * (i + 2 * j) / (2 * n + 3))
                out[j] = out[j] + spread * phase
    return out


def perturb_to_simple(
    A: Polynomial, B: Polynomial, epsilon: float
) -> tuple[Polynomial, Polynomial]:
    """Nearby pair with pairwise-distinct roots in each polynomial.

    The construction jitters clustered roots, re-expands, and rescales back to
    the original coefficient norm, so the returned norms match the inputs
    exactly and the coefficient change stays below epsilon.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")

    def one(p: Polynomial, budget: float) -> Polynomial:
        q = p.normalize()
        if q.degree < 1:
            return p
        rs = find_roots(q)
        if not rs.any_suspect:
            return p
        lead = q.coeffs[q.degree]
        nrm = p.norm()
        cluster_tol = CLUSTER_TOL_FACTOR * (1.0 + rs.cauchy_bound)
        spread = budget
        while True:
            jr = _jittered_roots(np.asarray(rs.roots), spread, cluster_tol)
            cand = Polynomial.from_roots(jr, lead)
            cand = cand.scale(nrm / cand.norm())
            delta_norm = (cand - p).norm()
            sep = min(
                abs(jr[i] - jr[j])
                for i in range(len(jr))
                for j in range(i + 1, len(jr))
            ) if len(jr) > 1 else np.inf
            if delta_norm <= budget and sep > 0:
                return cand
            spread /= 2.0
            if spread < 1e-300:
                raise ArithmeticError("jitter underflow in perturb_to_simple")

    return one(A, epsilon / 2.0), one(B, epsilon / 2.0)
