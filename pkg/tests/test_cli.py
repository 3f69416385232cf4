"""Command line surface: output schemas, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from sturmian_spectra.cli import (
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    RunConfig,
    main,
)

FIB = "[0; 2, (1)]"


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cf_json_schema(capsys):
    code, out, err = _run(capsys, "cf", FIB, "--format", "json")
    assert code == EXIT_OK and err == ""
    obj = json.loads(out)
    assert obj["cf"] == FIB
    assert obj["value"]["decimal"].startswith("0.3819660112501051")
    assert obj["lambda"]["decimal"].startswith("2.2360679774997896")
    assert [int(c["q"]) for c in obj["convergents"][:6]] == [1, 2, 3, 5, 8, 13]


def test_cf_rational_has_no_lambda(capsys):
    code, out, _ = _run(capsys, "cf", "[0; 3]", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["lambda"] is None
    assert obj["value"]["decimal"].startswith("0.3333333")


def test_cf_text_mentions_the_constant(capsys):
    code, out, _ = _run(capsys, "cf", FIB)
    assert code == EXIT_OK
    assert "2.236067977499789696409173668731276235441" in out


def test_classes_json_matches_known_partition(capsys):
    code, out, _ = _run(capsys, "classes", FIB, "-k", "2", "-m", "5",
                        "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["k"] == 2 and obj["m"] == 5
    members = [tuple(c["words"]) for c in obj["classes"]]
    assert members == [
        ("00100",), ("00101", "01001"), ("01010",), ("10010", "10100")]
    for c in obj["classes"]:
        assert "decimal" in c["interval"]["length"]


def test_classes_emit_circle_lists_the_cuts(capsys):
    code, out, _ = _run(capsys, "classes", FIB, "-k", "2", "-m", "5",
                        "--emit-circle", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert len(obj["cuts"]) == 4
    assert obj["cuts"][0]["decimal"] == "0"


def test_exponent_json_with_verification(capsys):
    code, out, _ = _run(capsys, "exponent", FIB, "-k", "2", "-m", "5",
                        "--verify", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["exponent"] == 5
    assert obj["witness"] == "0100101001010010010100101"
    assert obj["verified"] is True
    assert obj["step"]["decimal"].startswith("0.0901699437")


def test_theta_json_is_exact_and_decimal(capsys):
    code, out, _ = _run(capsys, "theta", FIB, "-k", "2", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    theta = obj["theta"]
    assert (theta["p"], theta["q"], theta["d"], theta["r"]) == ("-5", "3", "5", "2")
    assert theta["decimal"] == "0.8541019662496845446137605030969143531609"


def test_spectrum_json_is_one_object_per_line(capsys):
    code, out, _ = _run(capsys, "spectrum", "-k", "2", "--base", "[0; (1)]",
                        "--pool", "4", "--format", "json")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 4
    first = json.loads(lines[0])
    assert first["cf"] == "[0; (1)]"
    assert first["theta"]["decimal"].startswith("0.8541019662")
    assert all(json.loads(line)["k"] == 2 for line in lines)


def test_spectrum_csv_shape(capsys):
    code, out, _ = _run(capsys, "spectrum", "-k", "2", "--base", "[0; (1)]",
                        "--pool", "5", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "cf,k,theta_decimal"
    assert len(lines) == 6
    assert lines[1].startswith("[0; (1)],2,0.85410196624968454461")


def test_linfty_json_schema(capsys):
    code, out, _ = _run(capsys, "linfty", "7/3", "--stages", "4",
                        "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["quotients"] == [1, 1, 2, 9, 107, 11744]
    assert obj["padding_ok"] is True
    assert obj["prefix"] == "[0; 1, 1, 2, 9, 107, 11744]"
    last = obj["stages"][-1]
    assert last["error"]["decimal"] == "0"


def test_parse_error_is_json_on_stderr(capsys):
    code, out, err = _run(capsys, "cf", "not-a-cf")
    assert code == EXIT_USAGE
    assert out == ""
    payload = json.loads(err)
    assert payload["error"]["type"] == "parse_error"


def test_rational_slope_is_a_usage_error_for_classes(capsys):
    code, _, err = _run(capsys, "classes", "[0; 3]", "-k", "2", "-m", "5")
    assert code == EXIT_USAGE
    assert json.loads(err)["error"]["type"] == "parse_error"


def test_nonpositive_length_is_rejected_by_the_parser(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classes", FIB, "-k", "2", "-m", "0"])
    assert info.value.code == 2


def test_resource_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("STURMIAN_SPECTRA_CAP", "40")
    code, out, err = _run(capsys, "exponent", FIB, "-k", "1", "-m", "51",
                          "--verify")
    assert code == EXIT_RESOURCE
    payload = json.loads(err)
    assert payload["error"]["type"] == "resource_cap"
    assert payload["error"]["cap"] == 40


def test_repeated_runs_are_identical(capsys):
    outputs = set()
    for _ in range(2):
        code, out, _ = _run(capsys, "spectrum", "-k", "2", "--base", "[0; (1)]",
                            "--pool", "6", "--format", "json")
        assert code == EXIT_OK
        outputs.add(out)
    assert len(outputs) == 1


def test_worker_count_does_not_change_the_output(capsys):
    _, serial, _ = _run(capsys, "spectrum", "-k", "2", "--base", "[0; (1)]",
                        "--pool", "6", "--format", "csv")
    _, parallel, _ = _run(capsys, "spectrum", "-k", "2", "--base", "[0; (1)]",
                          "--pool", "6", "--workers", "2", "--format", "csv")
    assert serial == parallel


def test_console_script_round_trip():
    """The installed entry point produces byte-identical repeated output."""
    cmd = [sys.executable, "-m", "sturmian_spectra", "theta", FIB, "-k", "2",
           "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["theta"]["d"] == "5"


def test_run_config_serializes_cleanly():
    config = RunConfig(command="theta", cf_text=FIB, k=2)
    obj = config.to_json()
    assert obj["command"] == "theta" and obj["k"] == 2
    assert "m" not in obj  # unset fields stay out of the record
    json.dumps(obj)
