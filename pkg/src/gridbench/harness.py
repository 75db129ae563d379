"""Dataset files, golden-set validation, and verifier-success evaluation.

Task files use the ARC JSON layout: an object with exactly the keys
"train" and "test", each a list of {"input": rows, "output": rows}
objects, where rows are lists of lists of color codes 0-9. Files are
written compactly (no whitespace) so identical task sets serialize to
identical bytes.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import FormatError, VerifierDomainError
from .framework import generate_task_set, lookup
from .grid import Example, Grid, TaskSet


def save_task_file(path, task_set: TaskSet) -> None:
    """Write a task set as compact ARC JSON."""
    payload = {
        "train": [
            {"input": ex.input.to_lists(), "output": ex.output.to_lists()}
            for ex in task_set.train
        ],
        "test": [
            {"input": ex.input.to_lists(), "output": ex.output.to_lists()}
            for ex in task_set.test
        ],
    }
    Path(path).write_text(json.dumps(payload, separators=(",", ":")), encoding="utf-8")


def load_task_file(path) -> TaskSet:
    """Read and strictly validate an ARC JSON task file."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise FormatError(f"{path}: line {err.lineno}: {err.msg}") from None
    if not isinstance(payload, dict) or set(payload) != {"train", "test"}:
        raise FormatError(
            f"{path}: top level must be an object with exactly 'train' and 'test'"
        )
    return TaskSet(
        train=_read_examples(path, payload, "train"),
        test=_read_examples(path, payload, "test"),
    )


def _read_examples(path: Path, payload: dict, split: str) -> list[Example]:
    items = payload[split]
    if not isinstance(items, list) or not items:
        raise FormatError(f"{path}: '{split}' must be a non-empty list")
    examples = []
    for i, item in enumerate(items):
        where = f"{path}: {split}[{i}]"
        if not isinstance(item, dict) or set(item) != {"input", "output"}:
            raise FormatError(f"{where}: expected exactly 'input' and 'output'")
        pair = []
        for key in ("input", "output"):
            try:
                pair.append(Grid(item[key]))
            except ValueError as err:
                raise FormatError(f"{where}.{key}: {err}") from None
        examples.append(Example(input=pair[0], output=pair[1]))
    return examples


def emit_dataset(task_list, per_task_train: int, master_seed: int, out_dir) -> dict:
    """Write one ``<task_id>.json`` per task plus a manifest.

    Each file holds ``per_task_train`` train examples and one test
    example. Two runs with identical arguments produce byte-identical
    directory contents. Returns the manifest, which is also written as
    ``manifest.json``.
    """
    if per_task_train < 1:
        raise ValueError("per_task_train must be positive")
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    manifest_tasks = []
    for task_id in sorted(task_list):
        task_set = generate_task_set(task_id, per_task_train, 1, master_seed)
        file_name = f"{task_id}.json"
        save_task_file(directory / file_name, task_set)
        manifest_tasks.append(
            {
                "id": task_id,
                "train_count": len(task_set.train),
                "test_count": len(task_set.test),
                "file": file_name,
            }
        )
    manifest = {"master_seed": master_seed, "tasks": manifest_tasks}
    (directory / "manifest.json").write_text(
        json.dumps(manifest, separators=(",", ":")), encoding="utf-8"
    )
    return manifest


@dataclass(frozen=True)
class TaskScore:
    """Example tally for one task; the task passes only if every example does."""

    pass_count: int
    total_count: int
    passed: bool

    def __post_init__(self) -> None:
        if not 0 <= self.pass_count <= self.total_count:
            raise ValueError("pass_count must lie in [0, total_count]")
        if self.passed != (self.total_count > 0 and self.pass_count == self.total_count):
            raise ValueError("passed must equal (pass_count == total_count > 0)")


@dataclass(frozen=True)
class EvalReport:
    """Per-task pass/fail tallies plus the overall success percentage."""

    per_task: dict[str, TaskScore]
    skipped: tuple[str, ...]
    tasks_passed: int
    tasks_total: int
    percent: float

    def __post_init__(self) -> None:
        passed = sum(1 for score in self.per_task.values() if score.passed)
        if self.tasks_passed != passed or self.tasks_total != len(self.per_task):
            raise ValueError("task tallies do not match per_task")
        expected = 100.0 * passed / self.tasks_total if self.tasks_total else 0.0
        if abs(self.percent - expected) > 1e-9:
            raise ValueError("percent does not match tallies")

    @classmethod
    def from_scores(cls, scores: dict[str, tuple[int, int]], skipped=()) -> "EvalReport":
        per_task = {
            task_id: TaskScore(p, t, t > 0 and p == t)
            for task_id, (p, t) in scores.items()
        }
        passed = sum(1 for score in per_task.values() if score.passed)
        total = len(per_task)
        return cls(
            per_task=per_task,
            skipped=tuple(skipped),
            tasks_passed=passed,
            tasks_total=total,
            percent=100.0 * passed / total if total else 0.0,
        )


def evaluate(example_dir, programs: dict[str, Callable[[Grid], Grid]]) -> EvalReport:
    """Run each program over every stored example of its task.

    Every train and test pair counts equally. A program that raises on
    an example fails that example; tasks present in the directory but
    missing from ``programs`` are skipped and listed in the report.
    """
    directory = Path(example_dir)
    scores: dict[str, tuple[int, int]] = {}
    skipped = []
    for path in sorted(directory.glob("*.json")):
        if path.name == "manifest.json":
            continue
        task_id = path.stem
        if task_id not in programs:
            skipped.append(task_id)
            continue
        program = programs[task_id]
        task_set = load_task_file(path)
        passed = total = 0
        for example in (*task_set.train, *task_set.test):
            total += 1
            try:
                result = program(example.input.copy())
                if not isinstance(result, Grid):
                    result = Grid(result)
            except Exception:
                continue
            if result == example.output:
                passed += 1
        scores[task_id] = (passed, total)
    return EvalReport.from_scores(scores, skipped)


def format_percent(value: float) -> str:
    """Up to two decimals, trailing zeros trimmed: 100 -> '100', 16.25 -> '16.25'."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return text or "0"


def format_report(report: EvalReport) -> str:
    """One status line per task, then the overall tally."""
    lines = []
    for task_id in sorted(report.per_task):
        status = "pass" if report.per_task[task_id].passed else "FAIL"
        lines.append(f"Testing task {task_id} ... {status}")
    for task_id in report.skipped:
        lines.append(f"Skipping task {task_id} (no program)")
    lines.append(
        f"Examples pass for {report.tasks_passed}/{report.tasks_total} tasks "
        f"({format_percent(report.percent)}%)"
    )
    return "\n".join(lines)


def _bundled_golden(task_id: str) -> TaskSet | None:
    resource = resources.files("gridbench").joinpath(f"golden/{task_id}.json")
    if not resource.is_file():
        return None
    with resources.as_file(resource) as path:
        return load_task_file(path)


def golden_check(task_id: str, golden_path=None) -> bool | None:
    """Check a task against golden example data.

    For a task with a built-in fixture the fixture's output is compared
    cell for cell against the golden task set (an explicit file, or the
    snapshot bundled with the package). A task without a fixture is
    checked by running its verifier over the supplied golden examples.
    Returns None when there is no golden data to check against.
    """
    gen = lookup(task_id)
    if golden_path is not None:
        golden = load_task_file(golden_path)
    else:
        golden = _bundled_golden(task_id)
    if golden is None:
        return None
    if gen.validate is not None:
        return gen.validate() == golden
    try:
        return all(
            gen.verifier(example.input) == example.output
            for example in (*golden.train, *golden.test)
        )
    except VerifierDomainError:
        return False
