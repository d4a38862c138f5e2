"""Tabulate G^i_k sizes against the (2k-3)n upper ratio and the general lower bound.

Writes CSV to stdout or --out.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from dicritical import family_sizes, lower_bound_ok, upper_ratio


@dataclass
class Config:
    k_max: int = 12
    i_max: int = 3
    out: str | None = None


def rows(cfg: Config):
    for k in range(3, cfg.k_max + 1):
        for i in range(1, cfg.i_max + 1):
            fs = family_sizes(i, k)
            lower = lower_bound_ok(k, fs.n)
            yield {
                "k": k, "i": i, "n": fs.n, "m": fs.m,
                "ratio": f"{float(fs.ratio):.6f}", "upper_ratio": upper_ratio(k),
                "lower_slope": f"{float(lower / fs.n):.6f}",
                "gap": f"{float(upper_ratio(k) - fs.ratio):.6f}",
            }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k-max", type=int, default=Config.k_max)
    p.add_argument("--i-max", type=int, default=Config.i_max)
    p.add_argument("--out")
    cfg = Config(**vars(p.parse_args()))
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    data = list(rows(cfg))
    writer = csv.DictWriter(fh, fieldnames=list(data[0]))
    writer.writeheader()
    writer.writerows(data)
    if cfg.out:
        fh.close()


if __name__ == "__main__":
    main()
