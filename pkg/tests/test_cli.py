import json
import os
from pathlib import Path

import pytest

from permafix import cli
from permafix.permutations import integer_partitions

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("PERMAFIX_UPDATE_GOLDEN") == "1"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_describe_hexagon(capsys):
    code, rep = run_json(capsys, "describe", "--sigma", "(12)", "--n", "4")
    assert code == 0
    assert rep["status"] == "pass"
    assert rep["results"]["dimension"] == 2
    assert len(rep["results"]["vertices"]) == 6
    assert len(rep["results"]["generators"]) == 3


def test_describe_single_cycle(capsys):
    code, rep = run_json(capsys, "describe", "--type", "9")
    assert code == 0
    res = rep["results"]
    assert res["dimension"] == 0
    assert [v["point"] for v in res["vertices"]] == [["5"] * 9]
    assert res["generators"] == []


def test_describe_s9_vertices(capsys):
    code, rep = run_json(capsys, "describe", "--type", "4,3,2")
    assert code == 0
    points = {tuple(v["point"]) for v in rep["results"]["vertices"]}
    expected = {
        ("5/2",) * 4 + ("6",) * 3 + ("17/2",) * 2,
        ("5/2",) * 4 + ("8",) * 3 + ("11/2",) * 2,
        ("11/2",) * 4 + ("2",) * 3 + ("17/2",) * 2,
        ("9/2",) * 4 + ("8",) * 3 + ("3/2",) * 2,
        ("15/2",) * 4 + ("2",) * 3 + ("9/2",) * 2,
        ("15/2",) * 4 + ("4",) * 3 + ("3/2",) * 2,
    }
    assert points == expected


def test_describe_text_output(capsys):
    code, out, _ = run(capsys, "describe", "--sigma", "(12)", "--n", "4")
    assert code == 0
    assert "vertices (6):" in out
    assert "status: pass" in out
    assert "." not in out.split("vertices")[1].replace("...", "")  # no floats anywhere


@pytest.mark.parametrize("argv, volume", [
    (("--type", "1,1,1,1,1,1,1", "--verify", "full"), "16807"),
    (("--type", "3,2,1"), "6"),
    (("--type", "2,2", "--verify", "full"), "2"),
    (("--sigma", "2 1 4 3"), "2"),
])
def test_volume_examples(capsys, argv, volume):
    code, rep = run_json(capsys, "volume", *argv)
    assert code == 0
    res = rep["results"]
    assert res["closed_form"] == volume
    verify = rep["input"]["verify"]
    if verify in ("tiling", "full"):
        assert res["tiling"] == volume
    if verify == "full":
        assert res["oracle"] == volume
        assert rep["checks"] == {"per_tree_self_check": "pass", "tiling": "pass", "oracle": "pass"}


def test_volume_full_over_small_partitions(capsys):
    for n in range(1, 7):
        for lam in integer_partitions(n):
            text = ",".join(map(str, lam.lengths))
            code, _, _ = run(capsys, "volume", "--type", text, "--verify", "full")
            assert code == 0, text


def test_volume_threads(capsys):
    code, rep = run_json(capsys, "volume", "--type", "2,1,1,1,1", "--verify", "full", "--threads", "2")
    assert code == 0 and rep["results"]["oracle"] == "216"


@pytest.mark.parametrize("lengths, counts", [
    ("4,2", [0, 5, 0, 9]),
    ("1,1", [2, 3, 4]),
    ("2,1", [1, 3, 3, 5]),
])
def test_ehrhart_examples(capsys, lengths, counts):
    t_max = str(len(counts))
    code, rep = run_json(capsys, "ehrhart", "--type", lengths, "--t-max", t_max)
    assert code == 0
    rows = rep["results"]["rows"]
    assert [r["count"] for r in rows] == counts
    assert all(r["match"] for r in rows)


def test_ehrhart_without_prediction(capsys):
    code, rep = run_json(capsys, "ehrhart", "--type", "1,1,1", "--t-max", "3", "--method", "enumerate")
    assert code == 0
    assert [r["count"] for r in rep["results"]["rows"]] == [7, 19, 37]
    assert "predicted" not in rep["results"]["rows"][0]


def test_subgroup_s9_example(capsys):
    code, rep = run_json(capsys, "subgroup", "--n", "9", "--gen", "(173)(46)(89)", "--gen", "(27)(68)")
    assert code == 0
    res = rep["results"]
    assert res["join"] == "1237|4689|5"
    assert res["sigma"] == "(1237)(4689)"
    assert res["volume"]["closed_form"] == "9"


def test_subgroup_single_generator(capsys):
    code, rep = run_json(capsys, "subgroup", "--n", "5", "--gen", "(13)(25)")
    assert code == 0
    assert rep["results"]["join"] == "13|25|4"
    assert rep["results"]["partitions"] == ["13|25|4"]


def test_subgroup_joins_to_one_block(capsys):
    code, rep = run_json(capsys, "subgroup", "--n", "3", "--gen", "(12)", "--gen", "(23)", "--verify", "full")
    assert code == 0
    assert rep["results"]["sigma"] == "(123)"
    assert rep["results"]["volume"]["closed_form"] == "1"
    assert rep["results"]["volume"]["oracle"] == "1"


@pytest.mark.parametrize("argv", [
    ("describe", "--sigma", "(15)", "--n", "4"),
    ("describe", "--sigma", "(12)"),
    ("describe",),
    ("describe", "--sigma", "(12)", "--n", "4", "--type", "2,2"),
    ("volume", "--type", "2,x"),
    ("ehrhart", "--type", "2,1", "--t-max", "0"),
    ("subgroup", "--n", "3"),
    ("subgroup", "--gen", "(12)"),
    ("volume", "--type", "2,1", "--threads", "0"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err and out == ""


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "describe", "--sigma", "(1 5)", "--n", "4")
    assert code == 2
    assert "'5'" in err and "position" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["describe", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["volume", "--type", "2,1", "--verify", "maybe"])
    assert info.value.code == 2


def test_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "volume_closed_form", lambda lam: 12345)
    code, rep = run_json(capsys, "volume", "--type", "3,2,1", "--verify", "tiling")
    assert code == 1
    assert rep["status"] == "fail"
    assert rep["checks"]["tiling"] == "fail"


def test_per_tree_mismatch_exits_1(capsys, monkeypatch):
    import permafix.volume as vol

    monkeypatch.setattr(vol, "tree_volume_by_minors", lambda lam, T: 0)
    code, rep = run_json(capsys, "volume", "--type", "2,1,1", "--verify", "tiling", "--self-check", "1")
    assert code == 1
    assert rep["checks"]["per_tree_self_check"] == "fail"
    assert rep["results"]["tiling"] is None


def test_selftest_is_reproducible(capsys, monkeypatch):
    monkeypatch.setenv("PERMAFIX_SEED", "1234")
    code, first = run_json(capsys, "selftest", "--rounds", "20")
    assert code == 0
    assert first["input"]["seed"] == 1234
    assert set(first["checks"].values()) == {"pass"}
    code, second = run_json(capsys, "selftest", "--rounds", "20")
    assert first == second


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "permafix", "volume", "--type", "3,2,1", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["closed_form"] == "6"


GOLDEN_CASES = {
    "describe_hexagon": ["describe", "--sigma", "(12)", "--n", "4"],
    "describe_432": ["describe", "--type", "4,3,2"],
    "volume_321_full": ["volume", "--type", "3,2,1", "--verify", "full"],
    "ehrhart_42": ["ehrhart", "--type", "4,2", "--t-max", "4"],
    "subgroup_s9": ["subgroup", "--n", "9", "--gen", "(173)(46)(89)", "--gen", "(27)(68)"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_json(capsys, name):
    code, out, _ = run(capsys, *GOLDEN_CASES[name], "--json")
    assert code == 0
    path = GOLDEN / f"{name}.json"
    if UPDATE:
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out)
    assert json.loads(out) == json.loads(path.read_text())
    # stable across runs, and every rational is a string
    assert run(capsys, *GOLDEN_CASES[name], "--json")[1] == out
    assert not any(isinstance(v, float) for v in _leaves(json.loads(out)))


def _leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _leaves(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _leaves(v)
    else:
        yield obj
