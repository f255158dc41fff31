"""End-to-end checks of the command-line interface.

The binary path comes from the JMEXPAND_CLI environment variable.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("JMEXPAND_CLI", "jmexpand")


def run(*args, expect=0):
    result = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=600
    )
    assert result.returncode == expect, result.stderr
    return result.stdout


def run_json(*args, expect=0):
    return json.loads(run("--json", *args, expect=expect))


def test_expand_single():
    record = run_json("expand", "--family", "a", "--k", "3",
                      "--partition", "4")
    assert record["command"] == "expand"
    assert record["result"]["entries"] == [{"partition": [4], "value": "5"}]
    human = run("expand", "--family", "b", "--k", "2", "--partition", "3")
    assert human.splitlines()[-1].split() == ["3", "2"]


def test_expand_table():
    record = run_json("expand", "--family", "c", "--k", "3",
                      "--all-of-size", "3")
    table = {tuple(e["partition"]): e["value"]
             for e in record["result"]["entries"]}
    assert table[(2, 1)] == "4"
    assert table[(3,)] == "0"


def test_oracle_symmetric():
    record = run_json("oracle", "--group", "sym", "--function", "h",
                      "--k", "2", "--n", "3")
    table = {tuple(e["partition"]): e["value"]
             for e in record["result"]["entries"]}
    assert table == {(1, 1, 1): "3", (2, 1): "0", (3,): "2"}


def test_oracle_hecke():
    record = run_json("oracle", "--group", "hecke", "--function", "e",
                      "--k", "1", "--n", "2")
    table = {tuple(e["partition"]): e["value"]
             for e in record["result"]["entries"]}
    assert table == {(2,): "1", (1, 1): "0"}


def test_oracle_verification():
    record = run_json("oracle", "--group", "partial", "--function", "h",
                      "--k", "2", "--n", "4", "--verify-recurrence")
    assert record["verified"] is True
    record = run_json("oracle", "--group", "sym", "--function", "p",
                      "--k", "3", "--n", "4", "--verify-recurrence")
    assert record["verified"] is True


def test_series():
    record = run_json("series", "--which", "cycle", "--n", "4",
                      "--order", "5")
    assert record["result"]["coefficients"] == ["0", "0", "0", "5", "0", "70"]
    record = run_json("series", "--which", "F211", "--n", "4", "--order", "3")
    assert record["result"]["coefficients"][-1] == "1"


def test_asymptotics():
    assert run("asymptotics", "--which", "subleading",
               "--partition", "2").strip() == "1"
    assert run("asymptotics", "--which", "leading",
               "--partition", "3,2").strip() == "2"


def test_conjecture():
    record = run_json("conjecture", "--kmax", "3", "--nmax", "4",
                      "--alphas", "1,2")
    assert record["result"]["all_pass"] is True
    assert all(row["pass"] for row in record["result"]["instances"])


def test_exit_codes():
    run("expand", "--family", "nope", "--k", "1", "--partition", "2",
        expect=2)
    run("oracle", "--group", "sym", "--function", "h", "--k", "2", "--n",
        "30", expect=3)
    run("nonsense-subcommand", expect=2)


def test_degenerate_alpha_exit_code():
    result = subprocess.run(
        [CLI, "conjecture", "--kmax", "2", "--nmax", "2", "--alphas", "-1"],
        capture_output=True, text=True, timeout=600,
    )
    assert result.returncode == 5
    assert "-1" in result.stderr


def test_json_flag_after_subcommand():
    record = json.loads(run("expand", "--json", "--family", "a", "--k", "3",
                            "--partition", "4"))
    assert record["result"]["entries"][0]["value"] == "5"


def test_cache_round_trip(tmp_path):
    path = tmp_path / "cache.txt"
    run("--cache", str(path), "expand", "--family", "a", "--k", "3",
        "--partition", "4")
    content = path.read_text().splitlines()
    assert content[0] == "jmexpand-cache 1"
    assert "a 3 4 5" in content
    # a second invocation starts from the stored table
    out = run("--cache", str(path), "expand", "--family", "a", "--k", "3",
              "--partition", "4")
    assert out.splitlines()[-1].split() == ["4", "5"]


def test_json_values_round_trip():
    record = run_json("expand", "--family", "a", "--k", "6",
                      "--all-of-size", "6")
    for e in record["result"]["entries"]:
        int(e["value"])  # decimal strings, no floats anywhere
