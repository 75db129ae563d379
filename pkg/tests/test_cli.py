"""Command-line behavior."""

import json

import pytest

from gridbench.cli import run


def test_list(capsys):
    assert run(["list"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "05269061",
        "1e0a9b12",
        "543a7ed5",
        "67a423a3",
    ]


def test_generate_defaults_emit_all_tasks(tmp_path, capsys):
    out = tmp_path / "d"
    assert run(["generate", "--out", str(out), "--seed", "7"]) == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == [
        "05269061.json",
        "1e0a9b12.json",
        "543a7ed5.json",
        "67a423a3.json",
        "manifest.json",
    ]
    stdout = capsys.readouterr().out
    assert stdout.count("3 train + 1 test") == 4
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["master_seed"] == 7


def test_generate_single_task_with_count(tmp_path):
    out = tmp_path / "d"
    assert run(["generate", "--task", "543a7ed5", "--count", "10", "--seed", "7", "--out", str(out)]) == 0
    payload = json.loads((out / "543a7ed5.json").read_text(encoding="utf-8"))
    assert len(payload["train"]) == 10
    assert len(payload["test"]) == 1


def test_generate_unknown_task_fails_cleanly(tmp_path, capsys):
    assert run(["generate", "--task", "00000000", "--out", str(tmp_path / "d")]) == 1
    assert "unknown task" in capsys.readouterr().err


def test_generate_rejects_non_positive_count(tmp_path, capsys):
    assert run(["generate", "--count", "0", "--out", str(tmp_path / "d")]) == 1
    assert "positive" in capsys.readouterr().err


def test_generate_variation_override(tmp_path):
    out = tmp_path / "d"
    assert run(
        [
            "generate", "--task", "543a7ed5", "--count", "2", "--seed", "3",
            "--out", str(out), "--set", "size=20", "--set", "boxes=4",
        ]
    ) == 0
    payload = json.loads((out / "543a7ed5.json").read_text(encoding="utf-8"))
    assert len(payload["train"][0]["input"]) == 20


def test_generate_variation_outside_domain_warns(tmp_path, capsys):
    out = tmp_path / "d"
    assert run(
        [
            "generate", "--task", "543a7ed5", "--count", "1", "--seed", "3",
            "--out", str(out), "--set", "colors=red,red,red",
        ]
    ) == 0
    assert "outside the verifier domain" in capsys.readouterr().err


def test_generate_set_requires_task(tmp_path, capsys):
    assert run(["generate", "--set", "size=20", "--out", str(tmp_path / "d")]) == 2
    assert "--set requires --task" in capsys.readouterr().err


def test_validate_reports_bundled_fixture(capsys):
    assert run(["validate"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "Testing task 543a7ed5 ... pass" in lines
    assert lines[-1] == "Examples pass for 1/1 tasks (100%)"


def test_validate_with_golden_dir(tmp_path, capsys):
    from gridbench import generate_task_set, save_task_file

    save_task_file(tmp_path / "1e0a9b12.json", generate_task_set("1e0a9b12", 2, 1, 5))
    assert run(["validate", "--golden-dir", str(tmp_path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "Testing task 1e0a9b12 ... pass" in lines
    assert lines[-1] == "Examples pass for 2/2 tasks (100%)"


def test_evaluate_freshly_emitted_dataset(tmp_path, capsys):
    out = tmp_path / "d"
    assert run(["generate", "--out", str(out), "--seed", "9"]) == 0
    capsys.readouterr()
    assert run(["evaluate", "--examples", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "Examples pass for 4/4 tasks (100%)"


def test_evaluate_corrupted_file_fails(tmp_path, capsys):
    out = tmp_path / "d"
    assert run(["generate", "--out", str(out), "--seed", "9"]) == 0
    path = out / "1e0a9b12.json"
    payload = json.loads(path.read_text(encoding="utf-8"))
    payload["train"][0]["output"][0][0] = (payload["train"][0]["output"][0][0] + 1) % 10
    path.write_text(json.dumps(payload, separators=(",", ":")), encoding="utf-8")
    capsys.readouterr()
    assert run(["evaluate", "--examples", str(out)]) == 1
    lines = capsys.readouterr().out.splitlines()
    assert "Testing task 1e0a9b12 ... FAIL" in lines
    assert lines[-1] == "Examples pass for 3/4 tasks (75%)"


def test_render_generated_example(capsys):
    assert run(["render", "--task", "1e0a9b12", "--seed", "3", "--index", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("input:\n")
    assert "output:\n" in out
    body = [line for line in out.splitlines() if line and ":" not in line]
    assert all(line.isdigit() for line in body)


def test_render_from_file(tmp_path, capsys):
    from gridbench import generate_task_set, save_task_file

    path = tmp_path / "t.json"
    save_task_file(path, generate_task_set("05269061", 2, 1, 4))
    assert run(["render", "--file", str(path), "--split", "test", "--index", "0"]) == 0
    assert "output:" in capsys.readouterr().out


def test_render_index_out_of_range(tmp_path, capsys):
    from gridbench import generate_task_set, save_task_file

    path = tmp_path / "t.json"
    save_task_file(path, generate_task_set("05269061", 2, 1, 4))
    assert run(["render", "--file", str(path), "--index", "5"]) == 1
    assert "out of range" in capsys.readouterr().err


def test_render_needs_source(capsys):
    assert run(["render"]) == 2
    assert "needs --task or --file" in capsys.readouterr().err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 2


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as info:
        run(["list", "--bogus"])
    assert info.value.code == 2


def test_generate_output_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(["generate", "--out", str(a), "--seed", "13"]) == 0
    assert run(["generate", "--out", str(b), "--seed", "13"]) == 0
    for path in sorted(a.iterdir()):
        assert path.read_bytes() == (b / path.name).read_bytes()
