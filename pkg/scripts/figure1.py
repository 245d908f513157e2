"""Per-entry digits lost for the Chebyshev differentiation matrix, all three algorithms.

Writes one error-map CSV per algorithm plus a summary line on stdout.

    python3 scripts/figure1.py --N 32 --M 8 --out results/figure1
"""

import argparse
import csv
import time
from dataclasses import dataclass, fields
from pathlib import Path

from fdkit import chebyshev_diff_matrix, chebyshev_grid
from fdkit.oracle import digits_lost, error_map_rows, exact_diff_matrix
from fdkit.spectral import ALGORITHMS


@dataclass
class Figure1Config:
    N: int = 32
    M: int = 8
    digits: int = 50
    out: str = "results/figure1"


def parse_config() -> Figure1Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(Figure1Config):
        p.add_argument(f"--{f.name}", type=type(f.default), default=f.default)
    return Figure1Config(**vars(p.parse_args()))


def main(cfg: Figure1Config) -> dict:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    ref = exact_diff_matrix(chebyshev_grid(cfg.N), cfg.M, cfg.digits)
    summary = {}
    for alg in ALGORITHMS:
        D = chebyshev_diff_matrix(cfg.N, cfg.M, alg)
        summary[alg] = digits_lost(D, ref).max_digits
        with open(out / f"{alg}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["algorithm", "i", "j", "rel_error", "digits_lost"])
            w.writerows(error_map_rows(D, ref, alg, cfg.digits))
    print(f"N={cfg.N} M={cfg.M} max digits lost: "
          + ", ".join(f"{a} {d:.1f}" for a, d in summary.items())
          + f" ({time.perf_counter() - t0:.1f}s)")
    return summary


if __name__ == "__main__":
    main(parse_config())
