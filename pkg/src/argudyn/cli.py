"""Command-line interface: extension membership checks, enumeration, the
four dynamic-extension decision problems, instance generators, and the
benchmark harness.

Exit codes: 0 success (and YES under --strict), 1 NO under --strict,
2 usage or runtime errors (single-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .bench import SUITES, run_bench
from .core import ArgumentationFramework, ArgumentSet, Semantics
from .enumeration import enumerate_extensions
from .errors import ArgudynError, IoError
from .formats import load_cnf, load_framework, write_apx
from .gadgets import (
    GadgetOutput,
    gen_adjust_from_small,
    gen_center_from_small,
    gen_cnf_adjust,
    gen_cnf_center,
    gen_cnf_small,
    gen_mcq_small,
    random_kpartite,
)
from .instances import (
    ProblemInstance,
    adjust_instance,
    center_instance,
    repair_instance,
    small_instance,
)
from .solvers import ENGINES, SolveResult, sigma_member_mask, solve_instance

_SEMANTICS_CHOICES = tuple(s.value for s in Semantics)
_GEN_KINDS = ("mcq", "adjust", "center", "cnf-small", "cnf-adjust", "cnf-center")


@dataclass(frozen=True)
class CliConfig:
    command: str
    output_format: str
    strict: bool
    enum_cap: int | None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "json"),
        default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 when the answer is NO",
    )
    common.add_argument(
        "--enum-cap",
        type=int,
        default=None,
        help="override the enumeration cap for this invocation",
    )

    parser = argparse.ArgumentParser(
        prog="argudyn",
        description="Decide small, repair, adjust, and center questions "
        "about argumentation-framework extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", parents=[common], help="test one set for extension membership"
    )
    p_check.add_argument("--af", required=True, help="framework file (.apx/.tgf)")
    p_check.add_argument("--set", required=True, help="comma-separated arguments")
    p_check.add_argument("--semantics", required=True, choices=_SEMANTICS_CHOICES)

    p_enum = sub.add_parser(
        "enumerate", parents=[common], help="list all extensions"
    )
    p_enum.add_argument("--af", required=True)
    p_enum.add_argument("--semantics", required=True, choices=_SEMANTICS_CHOICES)

    p_solve = sub.add_parser(
        "solve", parents=[common], help="decide one of the four problems"
    )
    p_solve.add_argument("problem", choices=("small", "repair", "adjust", "center"))
    p_solve.add_argument("--af", required=True)
    p_solve.add_argument("--semantics", required=True, choices=_SEMANTICS_CHOICES)
    p_solve.add_argument("-k", type=int, default=None, help="distance/size budget")
    p_solve.add_argument("--set", default=None, help="repair: starting set")
    p_solve.add_argument("--e0", default=None, help="adjust: current extension")
    p_solve.add_argument("--target", default=None, help="adjust: argument to toggle")
    p_solve.add_argument("--e1", default=None, help="center: first extension")
    p_solve.add_argument("--e2", default=None, help="center: second extension")
    p_solve.add_argument("--engine", choices=ENGINES, default="delta")
    p_solve.add_argument(
        "--require-nonempty",
        action="store_true",
        help="adjust/center: accept only nonempty witnesses",
    )

    p_gen = sub.add_parser(
        "gen", parents=[common], help="emit a generated instance as APX + JSON"
    )
    p_gen.add_argument("what", choices=_GEN_KINDS)
    p_gen.add_argument("--out", required=True, help="APX output path")
    p_gen.add_argument(
        "--semantics",
        choices=_SEMANTICS_CHOICES,
        default=None,
        help="default: adm (mcq/adjust/center) or prf (cnf-*)",
    )
    p_gen.add_argument("--parts", type=int, default=3, help="mcq: part count")
    p_gen.add_argument("--part-size", type=int, default=3, help="mcq: max part size")
    p_gen.add_argument("--edge-prob", type=float, default=0.5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--cnf", default=None, help="cnf-*: DIMACS input path")
    p_gen.add_argument("--base-af", default=None, help="adjust/center: base framework")
    p_gen.add_argument("-k", type=int, default=None)

    p_bench = sub.add_parser(
        "bench", parents=[common], help="run a benchmark suite to CSV"
    )
    p_bench.add_argument("--suite", required=True, choices=SUITES)
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.add_argument("--seed", type=int, default=0)

    return parser


def _split_names(text: str) -> list[str]:
    return [token.strip() for token in text.split(",") if token.strip()]


def _set_of(af: ArgumentationFramework, text: str) -> ArgumentSet:
    return af.set_of(_split_names(text))


def _decision_exit(answer: bool, config: CliConfig) -> int:
    return 0 if answer or not config.strict else 1


def _print_decision(result: SolveResult, config: CliConfig) -> None:
    if config.output_format == "json":
        payload = {
            "answer": result.answer,
            "witness": (
                list(result.witness.names) if result.witness is not None else None
            ),
            "stats": {
                "candidates": result.stats.candidates,
                "nodes": result.stats.nodes,
                "seconds": result.stats.seconds,
            },
        }
        print(json.dumps(payload))
        return
    print("YES" if result.answer else "NO")
    if result.witness is not None:
        print("witness: " + ",".join(result.witness.names))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _cmd_check(args: argparse.Namespace, config: CliConfig) -> int:
    af = load_framework(args.af)
    sigma = Semantics.parse(args.semantics)
    member = bool(
        sigma_member_mask(af, _set_of(af, args.set).mask, sigma, config.enum_cap)
    )
    if config.output_format == "json":
        print(json.dumps({"answer": member}))
    else:
        print("YES" if member else "NO")
    return _decision_exit(member, config)


def _cmd_enumerate(args: argparse.Namespace, config: CliConfig) -> int:
    af = load_framework(args.af)
    sigma = Semantics.parse(args.semantics)
    extensions = enumerate_extensions(af, sigma, cap=config.enum_cap)
    if config.output_format == "json":
        payload = {
            "semantics": sigma.value,
            "extensions": [list(e.names) for e in extensions],
        }
        print(json.dumps(payload))
    else:
        for extension in extensions:
            print("{" + ",".join(extension.names) + "}")
    return 0


def _solve_instance_from_args(args: argparse.Namespace) -> ProblemInstance:
    af = load_framework(args.af)
    sigma = Semantics.parse(args.semantics)
    if args.problem == "small":
        _require(args.k is not None, "solve small requires -k")
        return small_instance(af, sigma, args.k)
    if args.problem == "repair":
        _require(args.set is not None, "solve repair requires --set")
        _require(args.k is not None, "solve repair requires -k")
        return repair_instance(af, _set_of(af, args.set), sigma, args.k)
    if args.problem == "adjust":
        _require(args.e0 is not None, "solve adjust requires --e0")
        _require(args.target is not None, "solve adjust requires --target")
        _require(args.k is not None, "solve adjust requires -k")
        return adjust_instance(
            af, _set_of(af, args.e0), args.target.strip(), sigma, args.k
        )
    _require(args.e1 is not None, "solve center requires --e1")
    _require(args.e2 is not None, "solve center requires --e2")
    return center_instance(af, _set_of(af, args.e1), _set_of(af, args.e2), sigma)


def _cmd_solve(args: argparse.Namespace, config: CliConfig) -> int:
    instance = _solve_instance_from_args(args)
    result = solve_instance(
        instance,
        engine=args.engine,
        cap=config.enum_cap,
        require_nonempty=args.require_nonempty,
    )
    _print_decision(result, config)
    return _decision_exit(result.answer, config)


def _instance_summary(instance: ProblemInstance) -> dict:
    summary: dict = {
        "kind": instance.kind.value,
        "semantics": instance.semantics.value,
        "k": instance.parameter(),
    }
    if instance.s is not None:
        summary["s"] = list(instance.s.names)
    if instance.e0 is not None:
        summary["e0"] = list(instance.e0.names)
    if instance.target is not None:
        summary["target"] = instance.target
    if instance.e1 is not None:
        summary["e1"] = list(instance.e1.names)
        summary["e2"] = list(instance.e2.names)
    return summary


def _generate(args: argparse.Namespace) -> GadgetOutput:
    default = "prf" if args.what.startswith("cnf-") else "adm"
    sigma = Semantics.parse(args.semantics or default)
    if args.what == "mcq":
        rng = random.Random(args.seed)
        graph = random_kpartite(
            rng, k=args.parts, max_part_size=args.part_size, edge_prob=args.edge_prob
        )
        return gen_mcq_small(graph, sigma)
    if args.what in ("adjust", "center"):
        _require(args.base_af is not None, f"gen {args.what} requires --base-af")
        _require(args.k is not None, f"gen {args.what} requires -k")
        base = load_framework(args.base_af)
        if args.what == "adjust":
            return gen_adjust_from_small(base, args.k, sigma)
        return gen_center_from_small(base, args.k, sigma)
    _require(args.cnf is not None, f"gen {args.what} requires --cnf")
    formula = load_cnf(args.cnf)
    generator = {
        "cnf-small": gen_cnf_small,
        "cnf-adjust": gen_cnf_adjust,
        "cnf-center": gen_cnf_center,
    }[args.what]
    return generator(formula, sigma)


def _cmd_gen(args: argparse.Namespace, config: CliConfig) -> int:
    output = _generate(args)
    af = output.instance.framework
    sidecar = {
        "provenance": output.provenance,
        "name_map": output.name_map,
        "instance": _instance_summary(output.instance),
    }
    try:
        Path(args.out).write_text(write_apx(af), encoding="utf-8")
        Path(str(args.out) + ".json").write_text(
            json.dumps(sidecar, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    except OSError as exc:
        raise IoError(f"cannot write {args.out}: {exc}") from exc
    summary = _instance_summary(output.instance)
    if config.output_format == "json":
        print(
            json.dumps(
                {
                    "out": str(args.out),
                    "n_arguments": af.n,
                    "n_attacks": len(af.attacks),
                    "instance": summary,
                }
            )
        )
    else:
        print(
            f"wrote {args.out}: {af.n} arguments, {len(af.attacks)} attacks; "
            f"{summary['kind']} under {summary['semantics']}, k={summary['k']}"
        )
    return 0


def _cmd_bench(args: argparse.Namespace, config: CliConfig) -> int:
    records = run_bench(args.suite, seed=args.seed, out_path=args.out)
    if config.output_format == "json":
        print(json.dumps({"out": str(args.out), "records": len(records)}))
    else:
        print(f"wrote {args.out}: {len(records)} records")
    return 0


_HANDLERS = {
    "check": _cmd_check,
    "enumerate": _cmd_enumerate,
    "solve": _cmd_solve,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = CliConfig(
        command=args.command,
        output_format=args.format,
        strict=args.strict,
        enum_cap=args.enum_cap,
    )
    try:
        return _HANDLERS[args.command](args, config)
    except (ArgudynError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
