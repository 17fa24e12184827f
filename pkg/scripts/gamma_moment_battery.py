"""Quadrature versus closed form for the Gamma moment families, with timings."""

from __future__ import annotations

import argparse
import csv
import itertools
import sys
import time
from dataclasses import dataclass

from expoly import gamma_integrals as gi


@dataclass
class BatteryConfig:
    max_n: int = 10
    params: tuple[float, ...] = (0.5, 1.0, 2.0, 3.0)
    shifts: tuple[float, ...] = (0.0, 1.0, -1.0)
    zero_tol: float = 1e-10


def rows(cfg: BatteryConfig):
    for n, a, s in itertools.product(range(cfg.max_n + 1), cfg.params, cfg.shifts):
        t0 = time.perf_counter()
        q = gi.moment_single_quad(n, a, s)
        c = gi.moment_single_closed(n, a, s).float_value
        yield "single", n, a, None, s, q, c, time.perf_counter() - t0
        for b in cfg.params:
            t0 = time.perf_counter()
            q = gi.moment_pair_quad(n, a, b, s)
            c = gi.moment_pair_closed(n, a, b, s).float_value
            yield "pair", n, a, b, s, q, c, time.perf_counter() - t0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=BatteryConfig.max_n)
    cfg = BatteryConfig(max_n=p.parse_args().max_n)
    w = csv.writer(sys.stdout)
    w.writerow(["family", "n", "a", "b", "shift", "abs_err", "rel_err", "err_estimate", "T", "seconds"])
    worst = 0.0
    for fam, n, a, b, s, q, c, dt in rows(cfg):
        err = abs(q.value - c)
        rel = err / abs(c) if abs(c) > cfg.zero_tol else float("nan")
        if rel == rel:
            worst = max(worst, rel)
        w.writerow([fam, n, a, b, s, f"{err:.2e}", f"{rel:.2e}", f"{q.abs_error_estimate:.2e}",
                    q.truncation_T, f"{dt:.4f}"])
    print(f"# worst relative error {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
