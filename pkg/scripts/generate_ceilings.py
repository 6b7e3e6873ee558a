#!/usr/bin/env python3
"""Regenerate the empirical ratio-ceiling table shipped with the package."""

import argparse

from bezmin.ceilings import DATA_PATH, write_table

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--instances", type=int, default=10_000)
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--out", default=str(DATA_PATH))
    args = ap.parse_args()
    table = write_table(
        args.out,
        seed=args.seed,
        n_instances=args.instances,
        max_degree=args.max_degree,
    )
    worst = max(table["ceilings"].items(), key=lambda kv: kv[1])
    print(f"wrote {args.out}; largest ceiling {worst[1]:.3f} at ({worst[0]})")
