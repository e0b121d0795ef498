"""Regenerate the JSON theory fixtures used by the test suite and CLI.

Each fixture is a single JSON document:

    {"degree": N, "generators": {"global": [[...], ...]},
     "subgroups": {name: [generator indices]}, "limits": {"max_order": N}}

Good inputs cover the worked example theories; the bad_* and *_capped
files exercise the input-error and resource-limit exits.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from emergent import Perm, symmetric_group

S3_GENS = [[1, 0, 2], [1, 2, 0]]
S4_GENS = [[1, 0, 2, 3], [1, 2, 3, 0]]


def product_cell_gens(cells: int) -> list[list[int]]:
    """Coordinate-wise generators for independent three-state cells."""
    degree = 3 ** cells
    gens = []
    for axis in range(cells):
        stride = 3 ** (cells - 1 - axis)
        for cell_map in ((1, 0, 2), (1, 2, 0)):
            images = []
            for p in range(degree):
                digit = (p // stride) % 3
                images.append(p + (cell_map[digit] - digit) * stride)
            gens.append(images)
    return gens


def diagonal_coset_gens() -> list[list[int]]:
    """Left and right translation images on the six states of a 3-cell."""
    s3 = symmetric_group(3)
    points = list(s3.elements)
    index = {x: i for i, x in enumerate(points)}
    gens = []
    for g in (Perm((1, 0, 2)), Perm((1, 2, 0))):
        gens.append([index[g * x] for x in points])
    for g in (Perm((1, 0, 2)), Perm((1, 2, 0))):
        g_inv = g.inverse()
        gens.append([index[x * g_inv] for x in points])
    return gens


def fixtures() -> dict[str, dict]:
    return {
        "s3.json": {"degree": 3, "generators": {"global": S3_GENS}},
        "s4.json": {"degree": 4, "generators": {"global": S4_GENS}},
        "s3x3.json": {
            "degree": 9,
            "generators": {"global": product_cell_gens(2)},
            "subgroups": {"rows": [0, 1], "cols": [2, 3]},
        },
        "s3x3x3.json": {
            "degree": 27,
            "generators": {"global": product_cell_gens(3)},
            "subgroups": {"first": [0, 1], "second": [2, 3], "third": [4, 5]},
        },
        "s3_diagonal.json": {
            "degree": 6,
            "generators": {"global": diagonal_coset_gens()},
            "subgroups": {"left": [0, 1], "right": [2, 3]},
        },
        "s3_capped.json": {
            "degree": 3,
            "generators": {"global": S3_GENS},
            "limits": {"max_order": 2},
        },
        "bad_permutation.json": {
            "degree": 3,
            "generators": {"global": [[0, 0, 1]]},
        },
        "not_transitive.json": {
            "degree": 4,
            "generators": {"global": [[1, 0, 2, 3]]},
        },
        "not_centreless.json": {
            "degree": 2,
            "generators": {"global": [[1, 0]]},
        },
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        default=str(Path(__file__).resolve().parent.parent / "fixtures"),
        help="output directory",
    )
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, payload in fixtures().items():
        path = out / name
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        print(f"wrote {path}")
    bad = out / "bad_syntax.json"
    bad.write_text('{"degree": 3, "generators":\n')
    print(f"wrote {bad}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
