"""Survey the worked example theories.

For each theory: count the self-bicommutant nodes, the systems built on
them, the ordered compatible pairs, and run every verification suite.
Useful as a smoke test and as a quick reference table when exploring a
new input file.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from emergent import (
    are_compatible,
    enumerate_self_bicommutant,
    enumerate_systems,
    load_theory,
    named_theories,
    run_suites,
)
from emergent.checks import SUITES


def survey(name: str, theory) -> None:
    start = time.perf_counter()
    nodes = enumerate_self_bicommutant(theory)
    systems = enumerate_systems(theory)
    compatible = sum(
        1
        for a in systems
        for b in systems
        if are_compatible(theory, a, b) is not None
    )
    results = run_suites(theory, tuple(sorted(SUITES)))
    violations = sum(len(r.violations) for r in results)
    notices = sum(len(r.notices) for r in results)
    elapsed = time.perf_counter() - start
    print(
        f"{name:14s} degree={theory.degree:3d} order={theory.group.order:4d} "
        f"nodes={len(nodes):3d} systems={len(systems):3d} "
        f"compatible={compatible:3d} violations={violations} "
        f"notices={notices} ({elapsed:.1f}s)"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--input", help="survey a JSON theory file instead")
    parser.add_argument(
        "--skip",
        default="s3x3x3",
        help="comma-separated names to skip (default skips the slow 27-state theory)",
    )
    args = parser.parse_args()
    if args.input:
        theory, _ = load_theory(args.input)
        survey(Path(args.input).stem, theory)
        return 0
    skip = set(args.skip.split(",")) if args.skip else set()
    for name, theory in named_theories().items():
        if name in skip:
            print(f"{name:14s} skipped")
            continue
        survey(name, theory)
    return 0


if __name__ == "__main__":
    sys.exit(main())
