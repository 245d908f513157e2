"""Observed convergence of a stencil on exp(z) against the analyze() prediction.

    python3 scripts/convergence.py --grid=-2/3,0,1,2 --m 2
"""

import argparse
import math
from dataclasses import dataclass

from fdkit import all_weights_partial, analyze
from fdkit.cli import parse_grid


@dataclass
class ConvergenceConfig:
    grid: str = "-1,0,1"
    m: int = 2
    kmin: int = 3
    kmax: int = 10


def parse_config() -> ConvergenceConfig:
    d = ConvergenceConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--grid", default=d.grid)
    p.add_argument("--m", type=int, default=d.m)
    p.add_argument("--kmin", type=int, default=d.kmin)
    p.add_argument("--kmax", type=int, default=d.kmax)
    return ConvergenceConfig(**vars(p.parse_args()))


def main(cfg: ConvergenceConfig) -> list:
    z, _ = parse_grid(cfg.grid)
    rep = analyze(z, cfg.m)
    w = all_weights_partial(z, cfg.m).order(cfg.m)
    print(f"order {rep.order} (boost {rep.boost}), leading term {rep.leading_term}")
    print(f"{'h':>10} {'error':>12} {'predicted':>12} {'ratio':>8} {'slope':>6}")
    rows, prev = [], None
    for k in range(cfg.kmin, cfg.kmax + 1):
        h = 2.0**-k
        err = math.fsum(wk * math.exp(h * zk) for wk, zk in zip(w, z)) / h**cfg.m - 1.0
        pred = rep.leading_coefficient * h**rep.order
        slope = math.log2(abs(prev / err)) if prev else float("nan")
        print(f"{h:10.3e} {err:12.4e} {pred:12.4e} {err / pred:8.4f} {slope:6.2f}")
        rows.append((h, err, pred))
        prev = err
    return rows


if __name__ == "__main__":
    main(parse_config())
