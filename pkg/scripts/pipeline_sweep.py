"""Run the one-colour embed-or-duo pipeline over random tournaments and tabulate duo sizes.

    python3 scripts/pipeline_sweep.py --runs 2000 --max-n 150
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from monopath.duo import Duo, duo_construct, verify_duo
from monopath.enumgen import random_instance
from monopath.model import cycle_graph
from monopath.ramsey import build_t, check_quasi_mono_c3_all_colourings


@dataclass
class SweepConfig:
    runs: int = 1000
    max_n: int = 100
    motif_len: int = 5
    seed: int = 0


def sweep(cfg: SweepConfig) -> Counter:
    P = build_t(cycle_graph(cfg.motif_len))
    if not check_quasi_mono_c3_all_colourings(P, 1).holds:
        raise SystemExit(f"pattern from C{cfg.motif_len} has a colouring with no quasi-monochromatic triangle")
    rng = random.Random(cfg.seed)
    sizes: Counter = Counter()
    for i in range(cfg.runs):
        T = random_instance(rng.randint(1, cfg.max_n), 1, cfg.seed * 1_000_003 + i)
        res = duo_construct(T, P)
        if not isinstance(res, Duo) or not verify_duo(T, res):
            raise SystemExit(f"run {i}: expected a valid duo, got {res!r}")
        sizes[res.size] += 1
    return sizes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=SweepConfig.runs)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--motif-len", type=int, default=SweepConfig.motif_len)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    cfg = SweepConfig(**vars(ap.parse_args()))
    sizes = sweep(cfg)
    print(f"{cfg.runs} runs, n <= {cfg.max_n}, pattern on {cfg.motif_len} vertices")
    for size in sorted(sizes):
        print(f"  duo size {size}: {sizes[size]}")


if __name__ == "__main__":
    main()
