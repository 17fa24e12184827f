"""Root profile of phi_n: leftmost root, smallest gap, and the interlacing check."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from expoly.exp_poly import phi_roots


@dataclass
class RootConfig:
    max_n: int = 25


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=RootConfig.max_n)
    cfg = RootConfig(p.parse_args().max_n)
    prev = None
    print(f"{'n':>3} {'leftmost':>14} {'min gap':>11} interlaces")
    for n in range(1, cfg.max_n + 1):
        r = phi_roots(n)
        gap = min((b - a for a, b in zip(r, r[1:])), default=float("nan"))
        # both share the root 0; the nonzero roots interlace strictly
        inter = "-" if prev is None else str(all(r[i] < prev[i] < r[i + 1] for i in range(n - 2)))
        print(f"{n:>3} {r[0]:>14.6f} {gap:>11.3e} {inter}")
        prev = r


if __name__ == "__main__":
    main()
