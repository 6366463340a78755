"""Exact ECH capacities of concave toric domains from the command line.

Exit codes: 0 success, 1 usage error (bad flags or malformed domain text),
2 computation error (step guard, closed form unavailable, enumeration limit),
3 oracle mismatch from ``oracle-compare``.  ECHCAPS_MAX_DEPTH overrides the
weight-expansion step guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .capacities import (
    caps_closed,
    caps_disjoint_union,
    caps_domain,
    caps_profile,
    gromov_width,
)
from .domains import Union, parse_domain, to_profile
from .errors import EchcapsError, ParameterError, ParseError
from .geometry import format_rational, parse_rational
from .lattice_paths import DEFAULT_ENUMERATION_LIMIT, caps_from_paths
from .embeddings import obstruction, pack_balls
from .svg import profile_svg, write_svg
from .weights import (
    DEFAULT_MAX_STEPS,
    triangle_decomposition,
    weight_expansion,
    weight_expansion_truncated,
)

USAGE_ERROR = 1
COMPUTATION_ERROR = 2
ORACLE_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); the contract wants 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="echcaps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    caps = sub.add_parser("caps", help="capacity sequence of a domain")
    caps.add_argument("--domain", required=True, help="domain DSL text")
    caps.add_argument("--kmax", type=int, required=True)
    caps.add_argument(
        "--method", choices=("auto", "weights", "paths", "closed"), default="auto"
    )
    caps.add_argument("--format", choices=("json", "csv"), default="json")

    weights = sub.add_parser("weights", help="weight expansion of a domain")
    weights.add_argument("--domain", required=True)
    weights.add_argument("--truncate", type=int, default=None, metavar="DEPTH")
    weights.add_argument(
        "--triangles", action="store_true", help="emit the triangle decomposition instead"
    )

    gromov = sub.add_parser("gromov", help="Gromov width of a domain")
    gromov.add_argument("--domain", required=True)

    embed = sub.add_parser("embed", help="capacity obstruction to an embedding")
    embed.add_argument("--source", required=True)
    embed.add_argument("--target", required=True)
    embed.add_argument("--kmax", type=int, required=True)

    pack = sub.add_parser("pack", help="ball packing into zec(1;b;c) scaled by lambda*")
    pack.add_argument("--weights", required=True, help="comma-separated ball sizes")
    pack.add_argument("--b", required=True)
    pack.add_argument("--c", required=True)
    pack.add_argument("--svg", default=None, metavar="PATH")

    oracle = sub.add_parser(
        "oracle-compare", help="run the weight and path routes and compare"
    )
    oracle.add_argument("--domain", required=True)
    oracle.add_argument("--kmax", type=int, required=True)
    return parser


def _max_steps_from_env() -> int:
    raw = os.environ.get("ECHCAPS_MAX_DEPTH")
    if raw is None:
        return DEFAULT_MAX_STEPS
    try:
        value = int(raw)
    except ValueError as exc:
        raise _UsageError(f"ECHCAPS_MAX_DEPTH must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise _UsageError("ECHCAPS_MAX_DEPTH must be positive")
    return value


def _emit(payload) -> None:
    print(json.dumps(payload))


def _run_caps(args, max_steps: int) -> int:
    expr = parse_domain(args.domain)
    if args.kmax < 0:
        raise _UsageError("--kmax must be nonnegative")
    if args.method == "auto":
        seq = caps_domain(expr, args.kmax, max_steps)
    elif args.method == "closed":
        seq = caps_closed(expr, args.kmax)
    elif args.method == "weights":
        if isinstance(expr, Union):
            seq = caps_disjoint_union(
                [caps_profile(to_profile(m), args.kmax, max_steps) for m in expr.members],
                args.kmax,
            )
        else:
            seq = caps_profile(to_profile(expr), args.kmax, max_steps)
    else:  # paths
        if isinstance(expr, Union):
            raise _UsageError("--method paths does not support union domains")
        seq = caps_from_paths(to_profile(expr), args.kmax)
    values = [format_rational(v) for v in seq]
    if args.format == "csv":
        print("k,value")
        for k, v in enumerate(values):
            print(f"{k},{v}")
    else:
        _emit({"domain": args.domain.strip(), "kmax": args.kmax, "capacities": values})
    return 0


def _run_weights(args, max_steps: int) -> int:
    expr = parse_domain(args.domain)
    if isinstance(expr, Union):
        raise _UsageError("weight expansion applies to a single domain")
    profile = to_profile(expr)
    if profile.infinite_tail:
        raise ParameterError("weight expansion needs a bounded domain")
    if args.triangles:
        placed = triangle_decomposition(profile, max_steps)
        _emit(
            [
                [[format_rational(p.x), format_rational(p.y)] for p in tri.vertices]
                for tri in placed
            ]
        )
        return 0
    if args.truncate is None:
        expansion = weight_expansion(profile, max_steps)
    else:
        if args.truncate < 0:
            raise _UsageError("--truncate must be nonnegative")
        expansion = weight_expansion_truncated(profile, args.truncate, max_steps)
    _emit([format_rational(w) for w in expansion])
    return 0


def _run_gromov(args) -> int:
    expr = parse_domain(args.domain)
    _emit({"domain": args.domain.strip(), "gromov_width": format_rational(gromov_width(expr))})
    return 0


def _run_embed(args) -> int:
    source = parse_domain(args.source)
    target = parse_domain(args.target)
    result = obstruction(source, target, args.kmax)
    _emit(
        {
            "lambda_min": format_rational(result.lambda_min),
            "argmax_k": result.argmax_k,
            "ratios": [format_rational(r) for r in result.ratios],
        }
    )
    return 0


def _run_pack(args) -> int:
    sizes = [parse_rational(part) for part in args.weights.split(",") if part.strip()]
    plan = pack_balls(sizes, parse_rational(args.b), parse_rational(args.c))
    payload = {
        "lambda_star": format_rational(plan.lambda_star),
        "k_star": plan.k_star,
        "thresholds": [format_rational(t) for t in plan.thresholds],
        "weights": [format_rational(w) for w in plan.weights],
        "order": list(plan.order),
        "triangles": [
            {
                "size": format_rational(tri.size),
                "vertices": [[format_rational(p.x), format_rational(p.y)] for p in tri.vertices],
            }
            for tri in plan.triangles
        ],
        "target": {
            "vertices": [
                [format_rational(v.x), format_rational(v.y)] for v in plan.target.vertices
            ],
            "infinite_tail": plan.target.infinite_tail,
        },
    }
    _emit(payload)
    if args.svg:
        write_svg(args.svg, profile_svg(plan.target, plan.triangles))
    return 0


def _run_oracle_compare(args, max_steps: int) -> int:
    expr = parse_domain(args.domain)
    if isinstance(expr, Union):
        raise _UsageError("oracle-compare applies to a single domain")
    if args.kmax < 0:
        raise _UsageError("--kmax must be nonnegative")
    profile = to_profile(expr)
    by_weights = caps_profile(profile, args.kmax, max_steps)
    by_paths = caps_from_paths(profile, args.kmax)
    mismatched = False
    print("k\tweights\tpaths\tverdict")
    for k in range(args.kmax + 1):
        same = by_weights[k] == by_paths[k]
        mismatched = mismatched or not same
        print(
            f"{k}\t{format_rational(by_weights[k])}\t{format_rational(by_paths[k])}"
            f"\t{'ok' if same else 'MISMATCH'}"
        )
    print("MISMATCH" if mismatched else "MATCH")
    return ORACLE_MISMATCH if mismatched else 0


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        max_steps = _max_steps_from_env()
        if args.command == "caps":
            return _run_caps(args, max_steps)
        if args.command == "weights":
            return _run_weights(args, max_steps)
        if args.command == "gromov":
            return _run_gromov(args)
        if args.command == "embed":
            return _run_embed(args)
        if args.command == "pack":
            return _run_pack(args)
        return _run_oracle_compare(args, max_steps)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ParseError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except EchcapsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return COMPUTATION_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
