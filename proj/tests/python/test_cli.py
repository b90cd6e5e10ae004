"""End-to-end checks of the command-line interface."""

import json
import os
import subprocess

CLI = os.environ["PARRIG_CLI"]
DATA = os.environ["PARRIG_DATA"]


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def data(name):
    return os.path.join(DATA, name)


def test_verdict_human():
    result = run("verdict", data("c4.json"))
    assert result.returncode == 0
    assert result.stdout.strip() == "flexible, 2 classes, 1 dof"


def test_verdict_json():
    result = run("--json", "verdict", data("c4.json"))
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload == {"command": "verdict", "flexible": True, "classes": 2, "dof": 1}


def test_check_flags_walk_violation():
    result = run("check", data("crossingprop_middle.json"))
    assert result.returncode == 1
    assert "VIOLATED" in result.stdout
    assert "witness cycle" in result.stdout

    as_json = run("--json", "check", data("crossingprop_middle.json"))
    assert as_json.returncode == 1
    payload = json.loads(as_json.stdout)
    assert payload["walk_independent"] is False
    assert payload["violations"]
    witness = payload["violations"][0]
    assert witness["cycle"][0] == witness["cycle"][-1]


def test_check_passes_clean_framework():
    result = run("check", data("eqclasses_left.json"))
    assert result.returncode == 0
    assert "walk-independence: ok" in result.stdout


def test_classes_from_stdin():
    with open(data("exflex.json")) as handle:
        text = handle.read()
    result = run("--json", "classes", "-", stdin=text)
    assert result.returncode == 0
    assert json.loads(result.stdout)["count"] == 3


def test_tiling_gen_pipes_into_classes():
    patch = run("tiling", "gen", "3636", "--extent", "2", "--augment")
    assert patch.returncode == 0
    doc = json.loads(patch.stdout)
    assert doc["format"] == "parrig/1"
    assert doc["metadata"]["tiling"] == "[3.6.3.6]"
    assert doc["metadata"]["extent"] == 2
    assert doc["metadata"]["augmented"] is True

    counted = run("--json", "classes", "-", stdin=patch.stdout)
    assert counted.returncode == 0
    assert json.loads(counted.stdout)["count"] == 4


def test_tiling_gen_deterministic():
    first = run("tiling", "gen", "[3.4.6.4;3^2.4.3.4]", "--extent", "2", "--augment")
    second = run("tiling", "gen", "[3.4.6.4;3^2.4.3.4]", "--extent", "2", "--augment")
    assert first.returncode == 0
    assert second.returncode == 0
    assert first.stdout == second.stdout


def test_tiling_gen_warns_without_hexagons():
    result = run("tiling", "gen", "44", "--extent", "1", "--augment")
    assert result.returncode == 0
    assert "warning:" in result.stderr
    assert json.loads(result.stdout)["metadata"]["augmented"] is False


def test_nac_verify_verdicts():
    ok = run("nac", "verify", data("c4.json"), "--colors", "BRRB")
    assert ok.returncode == 0
    assert "valid NAC-coloring" in ok.stdout

    bad = run("--json", "nac", "verify", data("c4.json"), "--colors", "RBBB")
    assert bad.returncode == 1
    payload = json.loads(bad.stdout)
    assert payload["ok"] is False
    assert payload["witness_cycle"][0] == payload["witness_cycle"][-1]


def test_usage_errors_exit_2():
    missing = run("verdict", data("does_not_exist.json"))
    assert missing.returncode == 2
    assert missing.stderr.startswith("error:")

    no_subcommand = run()
    assert no_subcommand.returncode == 2

    bad_input = run("verdict", "-", stdin="not json")
    assert bad_input.returncode == 2
    assert bad_input.stderr.startswith("error:")

    unknown_tiling = run("tiling", "gen", "nope", "--extent", "1")
    assert unknown_tiling.returncode == 2
    assert "unknown tiling" in unknown_tiling.stderr
