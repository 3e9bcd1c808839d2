"""Wall-clock cost of enumeration as the number of statements grows.

    python3 scripts/timing.py --sizes 4 6 8 10 --samples 5
"""
from __future__ import annotations

import argparse
import statistics
import time
from dataclasses import dataclass, field

from adfsem.extensions import enumerate_extensions
from adfsem.labelings import preferred_labelings
from adfsem.verify import random_instance


@dataclass(frozen=True)
class TimingConfig:
    sizes: tuple[int, ...] = (4, 6, 8, 10)
    samples: int = 5
    density: float = 0.4
    semantics: tuple[str, ...] = field(default=("cc-preferred", "aa-preferred", "stable"))


def measure(cfg: TimingConfig) -> None:
    print(f"{'n':>3} " + " ".join(f"{s:>14}" for s in cfg.semantics) + f" {'pref-labeling':>14}")
    for n in cfg.sizes:
        cols = []
        for sem in cfg.semantics:
            times = []
            for k in range(cfg.samples):
                D = random_instance(n, k, cfg.density)
                start = time.perf_counter()
                enumerate_extensions(D, sem)
                times.append(time.perf_counter() - start)
            cols.append(statistics.median(times))
        times = []
        for k in range(cfg.samples):
            D = random_instance(n, k, cfg.density)
            start = time.perf_counter()
            preferred_labelings(D, max_statements=max(n, 12))
            times.append(time.perf_counter() - start)
        cols.append(statistics.median(times))
        print(f"{n:>3} " + " ".join(f"{t:>13.4f}s" for t in cols))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=list(TimingConfig.sizes))
    ap.add_argument("--samples", type=int, default=TimingConfig.samples)
    ap.add_argument("--density", type=float, default=TimingConfig.density)
    args = ap.parse_args()
    measure(TimingConfig(sizes=tuple(args.sizes), samples=args.samples, density=args.density))


if __name__ == "__main__":
    main()
