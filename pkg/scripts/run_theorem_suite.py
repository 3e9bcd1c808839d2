"""Run the theorem suite, the oracle comparison and the Dung differential on random inputs.

    python3 scripts/run_theorem_suite.py --count 500 --max-size 5 --json out.json
"""
from __future__ import annotations

import argparse
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from adfsem.fixtures import all_fixtures
from adfsem.verify import (
    Report, check_dung_differential, check_oracle_equivalence, random_af, random_instance,
    run_theorem_suite,
)


@dataclass(frozen=True)
class SuiteConfig:
    count: int = 200
    max_size: int = 5
    oracle_max_size: int = 4
    density: float = 0.5
    seed: int = 0
    afs: int = 100
    jobs: int = 1


def _one(cfg: SuiteConfig, k: int) -> Report:
    seed = cfg.seed + k
    rep = Report()
    D = random_instance(1 + k % cfg.max_size, seed, cfg.density)
    rep.extend(run_theorem_suite(D))
    if D.n <= cfg.oracle_max_size:
        rep.extend(check_oracle_equivalence(D))
    if k < cfg.afs:
        rep.extend(check_dung_differential(random_af(1 + k % 5, seed), f"af-{seed}"))
    return rep


def run(cfg: SuiteConfig) -> Report:
    rep = Report()
    for D in all_fixtures().values():
        rep.extend(run_theorem_suite(D, oracles=D.n <= cfg.oracle_max_size))
    ks = range(max(cfg.count, cfg.afs))
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            parts = list(pool.map(_one, [cfg] * len(ks), ks))
    else:
        parts = [_one(cfg, k) for k in ks]
    for part in parts:
        rep.extend(part)
    return rep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SuiteConfig.count)
    ap.add_argument("--max-size", type=int, default=SuiteConfig.max_size)
    ap.add_argument("--density", type=float, default=SuiteConfig.density)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    ap.add_argument("--afs", type=int, default=SuiteConfig.afs)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", type=Path, help="write the full report here")
    args = ap.parse_args()
    cfg = SuiteConfig(count=args.count, max_size=args.max_size, density=args.density,
                      seed=args.seed, afs=args.afs, jobs=args.jobs)
    start = time.perf_counter()
    rep = run(cfg)
    elapsed = time.perf_counter() - start
    per = Counter(r.theorem for r in rep.records)
    bad = Counter(r.theorem for r in rep.failures)
    for theorem in sorted(per):
        print(f"{theorem:<48} {per[theorem]:>6} checks  {bad[theorem]:>3} failures")
    print(f"{len(rep.records)} records, {len(rep.failures)} failures, {elapsed:.1f}s")
    if args.json:
        args.json.write_text(rep.to_json())
    raise SystemExit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
