"""Empirical per-degree ceilings for the coefficient-bound ratio.

The theory guarantees norm(R) * delta^2 / max(1, norms) is bounded by a
constant depending only on the degrees, but gives no usable value. The table
shipped in data/ceilings.json holds, for each degree pair up to (8, 8), ten
times the maximum ratio observed over a seeded random ensemble. It is a
calibration artifact, not a proven constant; regenerate with
scripts/generate_ceilings.py.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import numpy as np

DATA_PATH = Path(__file__).parent / "data" / "ceilings.json"
SAFETY_FACTOR = 10.0


@lru_cache(maxsize=1)
def _load() -> dict:
    if not DATA_PATH.exists():
        return {}
    with open(DATA_PATH) as fh:
        return json.load(fh)


def lookup_ceiling(n: int, k: int) -> float | None:
    table = _load().get("ceilings", {})
    return table.get(f"{n},{k}")


def _batch_unit_disk(rng: np.random.Generator, shape) -> np.ndarray:
    return np.sqrt(rng.random(shape)) * np.exp(2j * np.pi * rng.random(shape))


def _batch_roots(coeffs: np.ndarray) -> np.ndarray:
    """Eigenvalues of the companion matrices of a (batch, deg+1) coefficient
    array with nonvanishing leading column."""
    b, d1 = coeffs.shape
    d = d1 - 1
    monic = coeffs / coeffs[:, -1:]
    comp = np.zeros((b, d, d), dtype=complex)
    if d > 1:
        comp[:, 1:, :-1] = np.eye(d - 1)
    comp[:, :, -1] = -monic[:, :-1]
    return np.linalg.eigvals(comp)


def _batch_eval(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Horner evaluation of each row polynomial at each row of points."""
    acc = np.zeros_like(z)
    for k in range(coeffs.shape[1] - 1, -1, -1):
        acc = acc * z + coeffs[:, k : k + 1]
    return acc


def _batch_sylvester(ca: np.ndarray, cb: np.ndarray, n: int, k: int) -> np.ndarray:
    b = ca.shape[0]
    m = np.zeros((b, n + k, n + k), dtype=complex)
    for c in range(k):
        m[:, c : c + n + 1, c] = ca
    for c in range(n):
        m[:, c : c + k + 1, k + c] = cb
    return m


def max_ratio_for_degrees(
    rng: np.random.Generator,
    n: int,
    k: int,
    n_instances: int,
    delta_floor: float = 1e-4,
) -> float:
    """Largest observed norm(R,S) * delta^2 over the normalized ensemble."""
    ca = _batch_unit_disk(rng, (n_instances, n + 1))
    cb = _batch_unit_disk(rng, (n_instances, k + 1))
    ok = (np.abs(ca[:, -1]) > 1e-6) & (np.abs(cb[:, -1]) > 1e-6)
    ca, cb = ca[ok], cb[ok]

    alphas = _batch_roots(ca)
    betas = _batch_roots(cb)
    delta = np.minimum(
        np.min(np.abs(_batch_eval(cb, alphas)), axis=1),
        np.min(np.abs(_batch_eval(ca, betas)), axis=1),
    )
    keep = delta >= delta_floor
    ca, cb, delta = ca[keep], cb[keep], delta[keep]
    if len(ca) == 0:
        return 0.0

    mats = _batch_sylvester(ca, cb, n, k)
    rhs = np.zeros((len(ca), n + k, 1), dtype=complex)
    rhs[:, 0, 0] = 1.0
    x = np.linalg.solve(mats, rhs)[:, :, 0]
    norms = np.max(np.abs(x), axis=1)
    return float(np.max(norms * delta**2))


def generate_table(
    seed: int = 20240601,
    n_instances: int = 10_000,
    max_degree: int = 8,
    delta_floor: float = 1e-4,
) -> dict:
    rng = np.random.default_rng(seed)
    ceilings = {}
    for n in range(1, max_degree + 1):
        for k in range(1, max_degree + 1):
            ratio = max_ratio_for_degrees(rng, n, k, n_instances, delta_floor)
            ceilings[f"{n},{k}"] = SAFETY_FACTOR * ratio
    return {
        "seed": seed,
        "n_instances": n_instances,
        "delta_floor": delta_floor,
        "safety_factor": SAFETY_FACTOR,
        "note": "10x the max of norm(R,S)*delta^2 over a seeded normalized "
        "ensemble per degree pair; empirical calibration, not a proven bound",
        "ceilings": ceilings,
    }


def write_table(path: Path | str = DATA_PATH, **kwargs) -> dict:
    table = generate_table(**kwargs)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(table, fh, indent=1, sort_keys=True)
        fh.write("\n")
    _load.cache_clear()
    return table
