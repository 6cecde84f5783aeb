"""Exhaustive hunt for k-coloured tournaments whose smallest absorbing set exceeds a target.

Walks canonical orientations on n vertices, all colourings with the first arc fixed,
and prints the largest minimum found per n.

    python3 scripts/explore_absorbing.py -k 3 --max-n 5 --jobs 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from monopath.errors import BudgetExceeded
from monopath.kernels import scan_absorbing_above
from monopath.model import serialize_cdt


@dataclass
class ExploreConfig:
    k: int = 3
    min_n: int = 3
    max_n: int = 5
    jobs: int = 1
    budget: int | None = None


def explore(cfg: ExploreConfig) -> None:
    for n in range(cfg.min_n, cfg.max_n + 1):
        best = None
        target = 1
        t0 = time.perf_counter()
        try:
            while (hit := scan_absorbing_above(cfg.k, n, target, jobs=cfg.jobs, budget=cfg.budget)) is not None:
                best = hit
                target = hit[1]
        except BudgetExceeded as exc:
            print(f"n={n}: budget exhausted ({exc})")
            break
        dt = time.perf_counter() - t0
        if best is None:
            print(f"n={n}: every instance has an absorbing vertex ({dt:.1f}s)")
            continue
        T, size, S = best
        print(f"n={n}: largest minimum absorbing set {size}, e.g. S={list(S)} ({dt:.1f}s)")
        print(serialize_cdt(T), end="")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-k", type=int, default=ExploreConfig.k)
    ap.add_argument("--min-n", type=int, default=ExploreConfig.min_n)
    ap.add_argument("--max-n", type=int, default=ExploreConfig.max_n)
    ap.add_argument("--jobs", type=int, default=ExploreConfig.jobs)
    ap.add_argument("--budget", type=int, default=None)
    explore(ExploreConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
