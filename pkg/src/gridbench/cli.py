"""Command-line front end: generate, validate, evaluate, render, list."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GridBenchError
from .framework import apply_variation, lookup, task_ids
from .grid import PALETTE, render_text
from .harness import (
    emit_dataset,
    evaluate,
    format_percent,
    format_report,
    golden_check,
    save_task_file,
    load_task_file,
)
from .rng import new_stream


def _parse_override(text: str) -> tuple[str, object]:
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise ValueError(f"override {text!r} is not of the form key=value")
    return key, _parse_value(raw)


def _parse_value(raw: str) -> object:
    if "," in raw:
        return [_parse_scalar(part) for part in raw.split(",")]
    return _parse_scalar(raw)


def _parse_scalar(raw: str) -> object:
    token = raw.strip()
    if token in ("true", "false"):
        return token == "true"
    if token in PALETTE:
        return PALETTE[token]
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"cannot parse override value {token!r}") from None


def _cmd_generate(args) -> int:
    out_dir = Path(args.out)
    if args.set:
        if args.task is None:
            print("error: --set requires --task", file=sys.stderr)
            return 2
        overrides = dict(_parse_override(item) for item in args.set)
        result = apply_variation(args.task, overrides, args.count, args.seed)
        if not result.verifier_checked:
            print(
                f"warning: task {args.task}: variation is outside the verifier "
                "domain; examples were not consistency-checked",
                file=sys.stderr,
            )
        out_dir.mkdir(parents=True, exist_ok=True)
        file_name = f"{args.task}.json"
        save_task_file(out_dir / file_name, result.task_set)
        manifest = {
            "master_seed": args.seed,
            "tasks": [
                {
                    "id": args.task,
                    "train_count": len(result.task_set.train),
                    "test_count": len(result.task_set.test),
                    "file": file_name,
                }
            ],
        }
        (out_dir / "manifest.json").write_text(
            json.dumps(manifest, separators=(",", ":")), encoding="utf-8"
        )
    else:
        ids = [args.task] if args.task else task_ids()
        manifest = emit_dataset(ids, args.count, args.seed, out_dir)
    for entry in manifest["tasks"]:
        print(
            f"wrote {out_dir / entry['file']} "
            f"({entry['train_count']} train + {entry['test_count']} test)"
        )
    print(f"wrote {out_dir / 'manifest.json'}")
    return 0


def _cmd_validate(args) -> int:
    ids = [args.task] if args.task else task_ids()
    checked = passed = 0
    for task_id in ids:
        golden_path = None
        if args.golden_dir:
            candidate = Path(args.golden_dir) / f"{task_id}.json"
            if candidate.is_file():
                golden_path = candidate
        result = golden_check(task_id, golden_path)
        if result is None:
            print(f"Skipping task {task_id} (no golden data)")
            continue
        checked += 1
        passed += int(result)
        print(f"Testing task {task_id} ... {'pass' if result else 'FAIL'}")
    percent = 100.0 * passed / checked if checked else 0.0
    print(f"Examples pass for {passed}/{checked} tasks ({format_percent(percent)}%)")
    return 0 if passed == checked else 1


def _cmd_evaluate(args) -> int:
    programs = {task_id: lookup(task_id).verifier for task_id in task_ids()}
    report = evaluate(args.examples, programs)
    print(format_report(report))
    return 0 if report.tasks_passed == report.tasks_total else 1


def _cmd_render(args) -> int:
    if args.file:
        task_set = load_task_file(args.file)
        pool = task_set.train if args.split == "train" else task_set.test
        if not 0 <= args.index < len(pool):
            print(
                f"error: {args.file}: {args.split} has {len(pool)} examples, "
                f"index {args.index} is out of range",
                file=sys.stderr,
            )
            return 1
        example = pool[args.index]
    elif args.task:
        gen = lookup(args.task)
        rng = new_stream(args.seed, args.task, args.index)
        example = gen.generate(rng=rng)
    else:
        print("error: render needs --task or --file", file=sys.stderr)
        return 2
    print("input:")
    print(render_text(example.input), end="")
    print("output:")
    print(render_text(example.output), end="")
    return 0


def _cmd_list(args) -> int:
    for task_id in task_ids():
        print(task_id)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridbench",
        description="Generate, validate and evaluate ARC-style grid task datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit task files and a manifest")
    gen.add_argument("--task", help="generate only this task id")
    gen.add_argument("--count", type=int, default=3, help="train examples per task")
    gen.add_argument("--seed", type=int, default=0, help="master seed")
    gen.add_argument("--out", default="dataset", help="output directory")
    gen.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="parameter override (repeatable); requires --task",
    )
    gen.set_defaults(func=_cmd_generate)

    val = sub.add_parser("validate", help="check golden fixtures")
    val.add_argument("--task", help="validate only this task id")
    val.add_argument("--golden-dir", help="directory of external golden <task_id>.json files")
    val.set_defaults(func=_cmd_validate)

    ev = sub.add_parser("evaluate", help="run bundled verifiers over a dataset directory")
    ev.add_argument("--examples", required=True, help="directory of task files")
    ev.set_defaults(func=_cmd_evaluate)

    ren = sub.add_parser("render", help="print one example as digit rows")
    ren.add_argument("--task", help="task id to generate from")
    ren.add_argument("--file", help="task file to read instead of generating")
    ren.add_argument("--index", type=int, default=0, help="example index")
    ren.add_argument("--split", choices=("train", "test"), default="train")
    ren.add_argument("--seed", type=int, default=0, help="master seed (with --task)")
    ren.set_defaults(func=_cmd_render)

    lst = sub.add_parser("list", help="print registered task ids")
    lst.set_defaults(func=_cmd_list)
    return parser


def run(argv) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GridBenchError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except KeyError as err:
        message = err.args[0] if err.args else str(err)
        print(f"error: {message}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
