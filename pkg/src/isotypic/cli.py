"""Command-line frontend.

Subcommands emit JSON on stdout (human-readable text behind --pretty).
Exit codes: 0 success / all suites pass, 1 violations found, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import character_table
from .linalg import Matrix
from .matroid import decide_appears, gamas_condition, rank_partition
from .partitions import Partition
from .selfcheck import TrialSpec, check_trial, run_verification
from .tensors import (
    VectorConfiguration,
    generalized_matrix_function,
    gram_matrix,
    nonzero_after_symmetrize,
    symmetrize,
)

_INPUT_ERRORS = (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_config(path: str) -> VectorConfiguration:
    return VectorConfiguration.from_json_obj(_load_json(path))


def _cmd_character_table(args) -> int:
    table = character_table(args.n)
    if args.pretty:
        classes = [rho.to_text() for rho in table.classes]
        width = max(len(c) for c in classes) + 2
        header = " " * width + "".join(f"{c:>{width}}" for c in classes)
        print(header)
        print(" " * width + "".join(f"{s:>{width}}" for s in table.class_sizes))
        for lam, values in table.rows.items():
            print(
                f"{lam.to_text():>{width}}"
                + "".join(f"{v:>{width}}" for v in values)
            )
    else:
        _emit(table.to_json_obj())
    return 0


def _cmd_symmetrize(args) -> int:
    cfg = _load_config(args.config)
    lam = Partition.from_text(args.shape)
    tensor = symmetrize(cfg, lam)
    if args.pretty:
        if tensor.is_zero():
            print("0")
        for idx, val in sorted(tensor.entries.items()):
            print(f"{val} * e{list(idx)}")
    else:
        _emit(tensor.to_json_obj())
    return 0


_METHODS = ("brute", "gram", "gamas", "dominance")


def _cmd_decide(args) -> int:
    cfg = _load_config(args.config)
    lam = Partition.from_text(args.shape)
    methods = _METHODS if args.method == "all" else (args.method,)
    answers = {}
    certificate = None
    for method in methods:
        if method == "brute":
            answers[method] = nonzero_after_symmetrize(cfg, lam)
        elif method == "gram":
            answers[method] = generalized_matrix_function(gram_matrix(cfg), lam) != 0
        elif method == "gamas":
            certificate = gamas_condition(cfg, lam)
            answers[method] = certificate is not None
        elif method == "dominance":
            answers[method] = decide_appears(cfg, lam)
    agreed = len(set(answers.values())) == 1
    appears = answers[methods[0]]
    result = {
        "appears": appears,
        "certificate": certificate.to_json_obj() if certificate else None,
        "methods_agreed": agreed,
    }
    if args.pretty:
        verdict = "appears" if appears else "does not appear"
        print(f"shape {lam.to_text() or '()'} {verdict} "
              f"({'methods agree' if agreed else 'METHODS DISAGREE: ' + str(answers)})")
        if certificate:
            for block in certificate.blocks:
                print(f"  independent block: {list(block)}")
    else:
        _emit(result)
    return 0


def _cmd_rank_partition(args) -> int:
    cfg = _load_config(args.config)
    rho = rank_partition(cfg)
    if args.pretty:
        print(f"rho = {list(rho.rho)}; covers {rho.covered} of {cfg.n} vectors")
    else:
        _emit(rho.to_json_obj())
    return 0


def _cmd_gmf(args) -> int:
    if (args.matrix is None) == (args.config is None):
        raise ValueError("gmf needs exactly one of --matrix or --config")
    if args.matrix:
        matrix = Matrix.from_json_obj(_load_json(args.matrix))
    else:
        matrix = gram_matrix(_load_config(args.config))
    lam = Partition.from_text(args.shape)
    value = generalized_matrix_function(matrix, lam)
    if args.pretty:
        print(f"d_chi(A) for shape {lam.to_text() or '()'} = {value}")
    else:
        _emit({"value": str(value)})
    return 0


def _parse_dims(text: str) -> tuple[int, ...]:
    return tuple(int(d) for d in text.split(","))


def _cmd_selfcheck(args) -> int:
    spec = TrialSpec(
        seed=args.seed,
        n_max=args.n_max,
        dims=_parse_dims(args.dims),
        trials_per_cell=args.trials,
        entry_range=args.entry_range,
        p_duplicate=args.p_dup,
        p_scale=args.p_scale,
        p_zero=args.p_zero,
    )
    report = run_verification(spec, jobs=args.jobs)
    if args.pretty:
        print(
            f"{report.cells_run} cells, {report.trials_run} trials, "
            f"{len(report.violations)} violations"
        )
        for violation in report.violations:
            print(f"  [{violation['suite']}] n={violation['n']} d={violation['d']} "
                  f"trial={violation['trial_index']} shape={violation['shape']}: "
                  f"expected {violation['expected']}, got {violation['actual']}")
    else:
        _emit(report.to_json_obj())
    print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_replay(args) -> int:
    report = _load_json(args.report)
    spec = TrialSpec.from_json_obj(report["spec"])
    record = report["violations"][args.index]
    suite = record["suite"]
    if record.get("config") is not None:
        fresh = check_trial(
            spec, record["n"], record["d"], record["trial_index"], suites={suite}
        )
    else:
        from . import selfcheck as _sc

        if suite == "character_orthogonality":
            fresh = _sc._character_suite(min(spec.n_max, 8))
        elif suite == "idempotent_system":
            fresh = _sc._idempotent_suite(min(spec.n_max, 5))
        elif suite == "schur_weyl_rank":
            fresh = _sc._rank_law_suite(min(spec.n_max, 5), spec.dims)
        else:
            raise ValueError(f"unknown suite {suite!r}")
    reproduced = any(
        v["suite"] == suite and v["shape"] == record["shape"] for v in fresh
    )
    result = {"record": record, "reproduced": reproduced, "violations": fresh}
    if args.pretty:
        print(f"replay of violation #{args.index} ({suite}): "
              + ("reproduced" if reproduced else "not reproduced"))
    else:
        _emit(result)
    return 1 if reproduced else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotypic",
        description="Exact deciders for nonvanishing of symmetrized tensors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character-table", help="character table of S_n as JSON")
    p.add_argument("n", type=int)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_character_table)

    p = sub.add_parser("symmetrize", help="apply the shape's projector to a configuration")
    p.add_argument("--config", required=True, help="VectorConfiguration JSON file")
    p.add_argument("--shape", required=True, help="partition, e.g. '2,1'")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_symmetrize)

    p = sub.add_parser("decide", help="decide whether the shape appears")
    p.add_argument("--config", required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--method", choices=_METHODS + ("all",), default="all")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("rank-partition", help="rank partition of a configuration")
    p.add_argument("--config", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_rank_partition)

    p = sub.add_parser("gmf", help="generalized matrix function of a matrix")
    p.add_argument("--matrix", help="matrix JSON file: {\"entries\": [[...], ...]}")
    p.add_argument("--config", help="configuration file; uses its Gram matrix")
    p.add_argument("--shape", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_gmf)

    p = sub.add_parser("selfcheck", help="run the verification harness")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--dims", default="1,2,3")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--entry-range", type=int, default=3)
    p.add_argument("--p-dup", type=float, default=0.3)
    p.add_argument("--p-scale", type=float, default=0.3)
    p.add_argument("--p-zero", type=float, default=0.05)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_selfcheck)

    p = sub.add_parser("replay", help="re-run a single violation from a report")
    p.add_argument("--report", required=True, help="selfcheck JSON output file")
    p.add_argument("--index", type=int, default=0, help="violation index")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
