"""Command-line surface.

Subcommands::

    solve       decide cover solvability of an instance file
    reach       decide reachability of --target
    canonical   decide whether every vertex is reachable
    number      cover pebbling number (instance demand or --demand-kind)
    pi          pebbling number
    oracle      breadth-first reference decision
    verify      check a move certificate against an instance
    gamma       exact potential of --target
    reduce      build one of the three hardness constructions

Exit codes: 0 solvable / verified / value computed; 1 unsolvable / invalid
certificate; 2 usage or format error; 3 search budget exceeded.  Reports go
to stderr in text mode so stdout stays pipeable (solve/reach print bare
certificates, reduce prints a re-parsable instance file); ``--json`` swaps
both for a single JSON document on stdout with exact integers throughout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import Demand, EdgeViolation, gamma, verify_solution
from .formats import (
    FormatError,
    Instance,
    certificate_to_movelist,
    parse_certificate,
    parse_instance,
    parse_x4c,
    write_certificate,
    write_instance,
)
from .numbers import ZeroDemand, cover_pebbling_number, pebbling_number
from .reductions import (
    ReducedInstance,
    reduce_cover_to_canonical,
    reduce_to_cover_solvability,
    reduce_to_number_threshold,
)
from .solver import (
    BudgetExceeded,
    is_canonical_solvable,
    is_cover_solvable,
    oracle_solvable,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", metavar="FILE", help="instance file")
    common.add_argument(
        "--node-cap",
        type=int,
        default=10**7,
        metavar="N",
        help="search node cap (default 10^7)",
    )
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument(
        "--seed", type=int, default=None, metavar="N", help="seed for randomized runs"
    )

    parser = argparse.ArgumentParser(
        prog="pebbling", description="Exact graph pebbling engine."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="decide cover solvability")
    p = sub.add_parser("reach", parents=[common], help="decide reachability")
    p.add_argument("--target", required=True, metavar="NAME")
    sub.add_parser("canonical", parents=[common], help="decide canonical solvability")
    p = sub.add_parser("number", parents=[common], help="cover pebbling number")
    p.add_argument(
        "--demand-kind",
        metavar="KIND",
        help="unit or reach:<name>; default is the instance demand",
    )
    sub.add_parser("pi", parents=[common], help="pebbling number")
    sub.add_parser("oracle", parents=[common], help="breadth-first reference decision")
    p = sub.add_parser("verify", parents=[common], help="check a certificate")
    p.add_argument("--certificate", required=True, metavar="FILE")
    p = sub.add_parser("gamma", parents=[common], help="exact potential of a vertex")
    p.add_argument("--target", required=True, metavar="NAME")
    p = sub.add_parser("reduce", parents=[common], help="build a hardness instance")
    p.add_argument(
        "kind", choices=["x4c-cover", "x4c-number", "cover-to-canonical"]
    )
    p.add_argument("--x4c", metavar="FILE", help="exact-cover input file")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_instance(args: argparse.Namespace) -> Instance:
    if not args.instance:
        raise FormatError(1, "--instance FILE is required for this command")
    return parse_instance(_read(args.instance))


def _emit(args: argparse.Namespace, report: dict, stdout_text: str = "") -> None:
    if args.json:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        if stdout_text:
            sys.stdout.write(stdout_text)
        summary = report.get("status") or report.get("value")
        print(f"{report['command']}: {summary}", file=sys.stderr)
        for key in ("witness", "unreachable", "violated_vertex", "threshold", "target"):
            if report.get(key) not in (None, []):
                print(f"  {key}: {report[key]}", file=sys.stderr)


def _certificate_json(instance: Instance, ml) -> list[dict]:
    return [
        {"from": instance.names[u], "to": instance.names[w], "count": q}
        for u, w, q in ml.items()
    ]


def _cmd_solve(args: argparse.Namespace, demand: Demand | None = None) -> int:
    instance = _load_instance(args)
    d = demand if demand is not None else instance.demand
    result = is_cover_solvable(
        instance.graph, instance.config, d, node_cap=args.node_cap
    )
    report = {
        "command": args.command,
        "status": result.status,
        "witness": instance.names[result.witness] if result.witness is not None else None,
        "certificate": _certificate_json(instance, result.certificate)
        if result.certificate is not None
        else None,
        "nodes_expanded": result.nodes_expanded,
        "max_depth": result.max_depth,
    }
    text = (
        write_certificate(instance, result.certificate) if result.solvable else ""
    )
    _emit(args, report, text)
    return EXIT_OK if result.solvable else EXIT_NEGATIVE


def _cmd_reach(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    target = instance.index_of(args.target)
    return _cmd_solve(args, Demand.reach(instance.graph.n, target))


def _cmd_canonical(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    result = is_canonical_solvable(
        instance.graph, instance.config, node_cap=args.node_cap
    )
    report = {
        "command": "canonical",
        "status": "canonical" if result.canonical else "not-canonical",
        "unreachable": [instance.names[v] for v in result.unreachable],
    }
    _emit(args, report)
    return EXIT_OK if result.canonical else EXIT_NEGATIVE


def _resolve_demand_kind(instance: Instance, kind: str) -> Demand:
    if kind == "unit":
        return Demand.unit(instance.graph.n)
    if kind.startswith("reach:"):
        return Demand.reach(instance.graph.n, instance.index_of(kind.split(":", 1)[1]))
    raise FormatError(1, f"demand kind must be unit or reach:<name>, got {kind!r}")


def _cmd_number(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    if args.demand_kind:
        d = _resolve_demand_kind(instance, args.demand_kind)
    else:
        d = instance.demand
    result = cover_pebbling_number(instance.graph, d, node_cap=args.node_cap)
    report = {
        "command": "number",
        "value": result.value,
        "extremal_config": {
            instance.names[i]: x
            for i, x in enumerate(result.extremal_config.counts)
            if x
        },
        "configs_checked": result.configs_checked,
    }
    _emit(args, report, f"{result.value}\n")
    return EXIT_OK


def _cmd_pi(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    result = pebbling_number(instance.graph, node_cap=args.node_cap)
    report = {
        "command": "pi",
        "value": result.value,
        "extremal_config": {
            instance.names[i]: x
            for i, x in enumerate(result.extremal_config.counts)
            if x
        },
        "configs_checked": result.configs_checked,
    }
    _emit(args, report, f"{result.value}\n")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    solvable = oracle_solvable(
        instance.graph, instance.config, instance.demand, state_cap=args.node_cap
    )
    report = {"command": "oracle", "status": "solvable" if solvable else "unsolvable"}
    _emit(args, report)
    return EXIT_OK if solvable else EXIT_NEGATIVE


def _cmd_verify(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    records = parse_certificate(_read(args.certificate))
    try:
        ml = certificate_to_movelist(instance, records)
    except KeyError as exc:
        raise FormatError(1, str(exc))
    try:
        ok = verify_solution(instance.graph, instance.config, instance.demand, ml)
    except EdgeViolation as exc:
        report = {"command": "verify", "status": "invalid", "violated_vertex": None,
                  "reason": str(exc)}
        _emit(args, report)
        return EXIT_NEGATIVE
    violated = None
    if not ok:
        final = list(instance.config.counts)
        for u, w, q in ml.items():
            final[u] -= 2 * q
            final[w] += q
        for k in range(instance.graph.n):
            if final[k] < instance.demand.counts[k]:
                violated = instance.names[k]
                break
    report = {
        "command": "verify",
        "status": "verified" if ok else "invalid",
        "violated_vertex": violated,
    }
    _emit(args, report)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_gamma(args: argparse.Namespace) -> int:
    instance = _load_instance(args)
    target = instance.index_of(args.target)
    value = gamma(instance.graph, instance.config, instance.demand, target)
    frac = value.as_fraction()
    report = {
        "command": "gamma",
        "status": str(frac),
        "vertex": args.target,
        "numerator": value.numerator,
        "log2_denominator": value.log2_denominator,
        "negative": value.is_negative,
    }
    _emit(args, report, f"{frac}\n")
    return EXIT_OK


def reduced_to_instance(red: ReducedInstance) -> Instance:
    """File-level view of a construction: demand from its kind and target."""
    if red.demand is not None:
        demand = red.demand
        kind = "unit" if demand.counts == (1,) * red.graph.n else None
    else:
        demand = Demand.reach(red.graph.n, red.target)
        kind = f"reach:{red.vertex_names[red.target]}"
    return Instance(red.vertex_names, red.graph, red.config, demand, kind)


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.kind in ("x4c-cover", "x4c-number"):
        if not args.x4c:
            raise FormatError(1, "--x4c FILE is required for this reduction")
        inst = parse_x4c(_read(args.x4c))
        red = (
            reduce_to_cover_solvability(inst)
            if args.kind == "x4c-cover"
            else reduce_to_number_threshold(inst)
        )
    else:
        instance = _load_instance(args)
        red = reduce_cover_to_canonical(instance.graph, instance.config)
    out = reduced_to_instance(red)
    text = write_instance(out)
    report = {
        "command": "reduce",
        "status": red.kind,
        "trivial": red.trivial,
        "threshold": red.threshold,
        "target": red.vertex_names[red.target] if red.target is not None else None,
        "vertex_roles": dict(zip(red.vertex_names, red.vertex_roles)),
        "config": {
            name: x for name, x in zip(red.vertex_names, red.config.counts) if x
        },
        "edges": sorted(
            sorted((red.vertex_names[u], red.vertex_names[v]))
            for u, v in red.graph.edges
        ),
        "instance_text": text,
    }
    _emit(args, report, text)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "reach": _cmd_reach,
    "canonical": _cmd_canonical,
    "number": _cmd_number,
    "pi": _cmd_pi,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "gamma": _cmd_gamma,
    "reduce": _cmd_reduce,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, ZeroDemand, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
