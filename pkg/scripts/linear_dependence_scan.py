"""Scan the truncated linear-dependence residual |sum_{n<=N} phi_n(x)(2 pi i k)^n/n!|.

Shows for which (x, N) the partial sums have settled.  For |x| near 1 the
terms keep growing well past N = 80, so the residual there is large.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import asdict, dataclass, field

from expoly.numeric_series import linear_dependence_residual, linear_dependence_terms


@dataclass
class ScanConfig:
    xs: list[float] = field(default_factory=lambda: [-1.0, -0.1, -0.01, 0.001, 0.01, 0.1, 1.0])
    ks: list[int] = field(default_factory=lambda: [1])
    ns: list[int] = field(default_factory=lambda: [10, 20, 40, 60, 80])


def scan(cfg: ScanConfig):
    for x in cfg.xs:
        for k in cfg.ks:
            terms = [abs(t) for t in linear_dependence_terms(x, k, max(cfg.ns))]
            peak = max(range(len(terms)), key=terms.__getitem__) + 1
            for n in cfg.ns:
                yield {"x": x, "k": k, "N": n, "residual": linear_dependence_residual(x, k, n),
                       "largest_term_index": peak, "last_term": terms[n - 1]}


def main() -> None:
    cfg = ScanConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--x", type=float, nargs="+", default=cfg.xs)
    p.add_argument("--k", type=int, nargs="+", default=cfg.ks)
    p.add_argument("--N", type=int, nargs="+", default=cfg.ns)
    args = p.parse_args()
    cfg = ScanConfig(args.x, args.k, args.N)
    print("# config:", asdict(cfg), file=sys.stderr)
    w = csv.DictWriter(sys.stdout, ["x", "k", "N", "residual", "largest_term_index", "last_term"])
    w.writeheader()
    for row in scan(cfg):
        w.writerow({k: (f"{v:.3e}" if isinstance(v, float) and k != "x" else v) for k, v in row.items()})


if __name__ == "__main__":
    main()
