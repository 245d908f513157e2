"""Max digits lost against the oracle as N and M vary (Chebyshev grids).

    python3 scripts/figure2.py --sizes 8,16,32,64 --orders 1,2,4,8,16
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from fdkit import chebyshev_diff_matrix, chebyshev_grid
from fdkit.oracle import digits_lost, exact_diff_matrix
from fdkit.spectral import ALGORITHMS


@dataclass
class Figure2Config:
    sizes: tuple = (8, 16, 32, 64)
    orders: tuple = (1, 2, 4, 8, 16)
    digits: int = 50


def _ints(text):
    return tuple(int(x) for x in text.split(","))


def parse_config() -> Figure2Config:
    d = Figure2Config()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=_ints, default=d.sizes)
    p.add_argument("--orders", type=_ints, default=d.orders)
    p.add_argument("--digits", type=int, default=d.digits)
    return Figure2Config(**vars(p.parse_args()))


def main(cfg: Figure2Config) -> list:
    w = csv.writer(sys.stdout)
    w.writerow(["N", "M", *ALGORITHMS])
    rows = []
    for N in cfg.sizes:
        for M in cfg.orders:
            if M > N - 1:
                continue
            ref = exact_diff_matrix(chebyshev_grid(N), M, cfg.digits)
            lost = [digits_lost(chebyshev_diff_matrix(N, M, a), ref).max_digits for a in ALGORITHMS]
            rows.append((N, M, *lost))
            w.writerow(rows[-1])
    return rows


if __name__ == "__main__":
    main(parse_config())
