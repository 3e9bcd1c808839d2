"""Print every extension family and the labelings of the sample instances.

    python3 scripts/reproduce_tables.py [--instance D2] [--instance D1 ...]
"""
from __future__ import annotations

import argparse

from adfsem.extensions import SEMANTICS, enumerate_extensions
from adfsem.fixtures import FIXTURE_TEXT, fixture
from adfsem.labelings import LABELING_SEMANTICS, labelings
from adfsem.ranges import acyclic_discarded_set, discarded_set


def fmt(ext) -> str:
    return "{" + ",".join(ext) + "}"


def report(name: str) -> None:
    D = fixture(name)
    print(f"== {name}")
    width = max(map(len, SEMANTICS))
    for sem in SEMANTICS:
        print(f"  {sem:<{width}}  " + " ".join(fmt(e) for e in enumerate_extensions(D, sem)))
    print("  discarded sets (conflict-free E: range / acyclic range)")
    for E in enumerate_extensions(D, "conflict-free"):
        print(f"    {fmt(E):<12} {fmt(sorted(discarded_set(D, E))):<12} {fmt(sorted(acyclic_discarded_set(D, E)))}")
    for sem in LABELING_SEMANTICS:
        if sem == "model":
            print(f"  labelings/{sem}: {len(labelings(D, sem))}")
            continue
        labs = labelings(D, sem)
        print(f"  labelings/{sem} ({len(labs)}): " + " ".join(map(str, labs)))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instance", action="append", choices=sorted(FIXTURE_TEXT))
    args = ap.parse_args()
    for name in args.instance or ["D1", "D1p", "D2", "A1", "A2"]:
        report(name)


if __name__ == "__main__":
    main()
