"""Verify the O3 witnesses: oriented, ceil(5n/2) arcs, 3-dicritical, potential <= -2.

    python scripts/verify_o3.py --n-min 12 --n-max 24 --out o3.json
"""

from __future__ import annotations

import argparse
import json
import math
import time
from dataclasses import asdict, dataclass

from dicritical import classify_by_potential, is_k_dicritical, o3
from dicritical.bounds import ceil_fraction, lower_bound_o3


@dataclass
class Config:
    n_min: int = 12
    n_max: int = 16
    out: str | None = None


@dataclass
class Row:
    n: int
    m: int
    target_m: int
    lower_m: int
    oriented: bool
    dicritical: bool
    rho: int
    seconds: float


def run(cfg: Config) -> list[Row]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        D = o3(n).digraph
        t0 = time.perf_counter()
        rep = is_k_dicritical(D, 3)
        elapsed = time.perf_counter() - t0
        rows.append(Row(n, D.m, math.ceil(5 * n / 2), ceil_fraction(lower_bound_o3(n)),
                        D.is_oriented(), rep.is_dicritical, classify_by_potential(D).rho, elapsed))
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-min", type=int, default=Config.n_min)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--out")
    cfg = Config(**vars(p.parse_args()))
    rows = run(cfg)
    print(f"{'n':>4} {'m':>4} {'5n/2':>5} {'lower':>5} {'orient':>6} {'dicrit':>6} {'rho':>5} {'sec':>7}")
    for r in rows:
        print(f"{r.n:>4} {r.m:>4} {r.target_m:>5} {r.lower_m:>5} {str(r.oriented):>6} "
              f"{str(r.dicritical):>6} {r.rho:>5} {r.seconds:>7.3f}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=2)
    if not all(r.dicritical and r.oriented and r.m == r.target_m and r.rho <= -2 for r in rows):
        raise SystemExit(1)


if __name__ == "__main__":
    main()
