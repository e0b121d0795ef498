"""Command-line interface.

Subcommands:

    lattice     enumerate the subgroup lattice (JSON or DOT)
    systems     enumerate systems and their compatibilities (JSON)
    scan-mixed  classify global states as product or entangled per node
    check       run verification suites; nonzero exit on violations
    quantum     closed-form composability facts for a sector decomposition

Exit codes: 0 success, 1 property violation, 2 bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import load_theory, theory_from_dict
from .checks import SUITES, SuiteResult, run_suites
from .errors import (
    DegreeMismatch,
    InvalidTheory,
    ParseError,
    PointOutOfRange,
    ResourceLimit,
    TheoryError,
    ZeroDimension,
)
from .lattice import SbcLattice, enumerate_self_bicommutant
from .perms import GlobalTheory
from .sectors import (
    GENERAL,
    SpecialPairReport,
    centre_rank,
    check_special_pair_claims,
    classify,
    commutant_decomp,
    group_dimension,
    parse_decomposition,
    system_count,
)
from .states import is_product_state
from .systems import are_compatible, enumerate_systems

INPUT_ERRORS = (ParseError, InvalidTheory, DegreeMismatch, PointOutOfRange, ZeroDimension)


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load(args) -> GlobalTheory:
    import pathlib

    try:
        text = pathlib.Path(args.input).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {args.input}: {exc}") from exc
    if args.max_order is not None:
        if not isinstance(data, dict):
            raise ParseError("a theory description must be a JSON object")
        data = dict(data)
        limits = dict(data.get("limits") or {})
        limits["max_order"] = args.max_order
        data["limits"] = limits
    theory, _ = theory_from_dict(data)
    return theory


def lattice_json(theory: GlobalTheory, lattice: SbcLattice) -> dict:
    nodes = []
    for i, node in enumerate(lattice.nodes):
        nodes.append(
            {
                "index": i,
                "order": node.order,
                "members": [list(p) for p in node.members],
                "commutant": lattice.commutant_index[i],
                "self_commutant": lattice.commutant_index[i] == i,
            }
        )
    return {
        "degree": theory.degree,
        "node_count": len(lattice.nodes),
        "nodes": nodes,
        "hasse": [list(edge) for edge in lattice.hasse_edges],
    }


def lattice_dot(theory: GlobalTheory, lattice: SbcLattice) -> str:
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i, node in enumerate(lattice.nodes):
        shape = ' peripheries=2' if lattice.commutant_index[i] == i else ""
        lines.append(f'  n{i} [label="{i}: order {node.order}"{shape}];')
    for low, high in lattice.hasse_edges:
        lines.append(f"  n{low} -> n{high};")
    seen = set()
    for i, j in enumerate(lattice.commutant_index):
        if i == j or (j, i) in seen:
            continue
        seen.add((i, j))
        lines.append(f"  n{i} -> n{j} [style=dashed, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_lattice(args) -> int:
    theory = _load(args)
    lattice = enumerate_self_bicommutant(theory)
    if args.format == "dot":
        sys.stdout.write(lattice_dot(theory, lattice))
    else:
        sys.stdout.write(_dump(lattice_json(theory, lattice)))
    return 0


def cmd_systems(args) -> int:
    theory = _load(args)
    lattice = enumerate_self_bicommutant(theory)
    systems = enumerate_systems(theory)
    payload = {
        "degree": theory.degree,
        "systems": [
            {
                "index": i,
                "node": lattice.node_index[s.transf],
                "order": s.transf.order,
                "pure_states": [list(st.sorted_points) for st in s.pure_orbit],
            }
            for i, s in enumerate(systems)
        ],
        "compatible": [
            [i, j, witness]
            for i, a in enumerate(systems)
            for j, b in enumerate(systems)
            if (witness := are_compatible(theory, a, b)) is not None
        ],
    }
    sys.stdout.write(_dump(payload))
    return 0


def cmd_scan_mixed(args) -> int:
    theory = _load(args)
    lattice = enumerate_self_bicommutant(theory)
    nodes = []
    both = []
    for i, node in enumerate(lattice.nodes):
        pure = [
            p for p in theory.points if is_product_state(theory, node, p).pure
        ]
        mixed = [p for p in theory.points if p not in set(pure)]
        if pure and mixed:
            both.append(i)
        nodes.append(
            {
                "index": i,
                "order": node.order,
                "pure_points": pure,
                "mixed_points": mixed,
            }
        )
    payload = {"degree": theory.degree, "nodes": nodes, "nodes_with_both": both}
    sys.stdout.write(_dump(payload))
    return 0


def render_check_report(results: tuple[SuiteResult, ...]) -> tuple[str, int]:
    payload = {"suites": [r.as_dict() for r in results]}
    payload["ok"] = all(r.ok for r in results)
    code = 0 if payload["ok"] else 1
    return _dump(payload), code


def cmd_check(args) -> int:
    theory = _load(args)
    names = tuple(SUITES) if args.suite == "all" else (args.suite,)
    results = run_suites(theory, names)
    text, code = render_check_report(results)
    sys.stdout.write(text)
    return code


def quantum_report(text: str) -> dict:
    decomp = parse_decomposition(text)
    kind = classify(decomp)
    payload = {
        "decomposition": str(decomp),
        "commutant": str(commutant_decomp(decomp)),
        "kind": kind,
        "centre_rank": centre_rank(decomp),
        "system_count": system_count(decomp),
        "group_dimension": group_dimension(decomp),
        "total_dimension": decomp.total_dimension,
    }
    if kind == GENERAL:
        payload["claims"] = None
        payload["note"] = (
            "closed-form composability claims cover only the purely "
            "multiplicative and purely additive shapes"
        )
    else:
        report: SpecialPairReport = check_special_pair_claims(decomp)
        payload["claims"] = {
            "orthogonal": report.orthogonal,
            "orthocomplementary": report.orthocomplementary,
            "join": str(report.join),
            "join_full": report.join_full,
        }
    return payload


def cmd_quantum(args) -> int:
    sys.stdout.write(_dump(quantum_report(args.decomposition)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emergent",
        description="Finite-model engine for emergent subsystems of reversible theories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p) -> None:
        p.add_argument("--input", required=True, help="JSON theory description")
        p.add_argument(
            "--max-order",
            type=int,
            default=None,
            help="cap on the generated group order",
        )

    p_lattice = sub.add_parser("lattice", help="enumerate the subgroup lattice")
    add_input(p_lattice)
    p_lattice.add_argument(
        "--format", choices=("json", "dot"), default="json", help="output format"
    )
    p_lattice.set_defaults(func=cmd_lattice)

    p_systems = sub.add_parser("systems", help="enumerate systems")
    add_input(p_systems)
    p_systems.set_defaults(func=cmd_systems)

    p_scan = sub.add_parser(
        "scan-mixed", help="classify global states as product or entangled"
    )
    add_input(p_scan)
    p_scan.set_defaults(func=cmd_scan_mixed)

    p_check = sub.add_parser("check", help="run verification suites")
    add_input(p_check)
    p_check.add_argument(
        "--suite",
        choices=("lattice", "states", "systems", "processes", "pmcat", "all"),
        default="all",
        help="which suite to run",
    )
    p_check.set_defaults(func=cmd_check)

    p_quantum = sub.add_parser(
        "quantum", help="sector-calculus claims for a decomposition"
    )
    p_quantum.add_argument(
        "--decomposition",
        required=True,
        help="sector list such as '2x3+1x1'",
    )
    p_quantum.set_defaults(func=cmd_quantum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TheoryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
