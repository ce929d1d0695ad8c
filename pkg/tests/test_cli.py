"""Command line behavior: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from enriques.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_components_markdown(capsys):
    rc, out = run_cli(capsys, "components", "--genus", "5", "--format", "markdown")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "# genus 5: 4 component(s)"
    assert lines[1].startswith("| component | profile |")
    assert any("E^-_{5;2,2,4,4,4,4,4,4,4,4}" in l for l in lines)


def test_components_json(capsys):
    rc, out = run_cli(capsys, "components", "--genus", "3", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["genus"] == 3 and data["count"] == 2
    first = data["components"][0]
    assert set(first) == {
        "name",
        "genus",
        "phi",
        "eps",
        "two_divisible",
        "coefficients",
        "unirational",
    }


def test_components_csv_quotes_commas(capsys):
    rc, out = run_cli(capsys, "components", "--genus", "2", "--format", "csv")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "name,genus,phi,eps,two_divisible,coefficients,unirational"
    assert '"1,1,2,2,2,2,2,2,2,2"' in lines[1]


def test_components_phi_filter(capsys):
    rc, out = run_cli(
        capsys, "components", "--genus", "6", "--phi", "3", "--format", "json"
    )
    assert rc == 0
    names = [m["name"] for m in json.loads(out)["components"]]
    assert "E_{6;3,3,3,3,3,3,3,3,3,3}" in names


def test_phivector_from_coefficients(capsys):
    rc, out = run_cli(
        capsys,
        "phivector",
        "--coeffs",
        "4;7,6,5,4,3,2,1;3,2",
        "--format",
        "json",
    )
    assert rc == 0
    data = json.loads(out)
    assert data["phi"] == list(range(30, 40))
    assert data["genus"] == 621
    assert data["component"].startswith("E_{621;")
    assert data["unirational"] is False


def test_phivector_from_class_with_oracle(capsys):
    rc, out = run_cli(
        capsys,
        "phivector",
        "--class",
        "1,1,0,0,0,0,0,0,0,0",
        "--oracle",
        "--format",
        "json",
    )
    assert rc == 0
    data = json.loads(out)
    assert data["phi"] == [1, 1, 2, 2, 2, 2, 2, 2, 2, 2]
    assert data["oracle_agrees"] is True
    assert data["coefficients"]["head"] == [1, 1, 0, 0, 0, 0, 0]


def test_phivector_eps_needs_even_class(capsys):
    rc, out = run_cli(
        capsys,
        "phivector",
        "--class",
        "2,2,0,0,0,0,0,0,0,0",
        "--eps",
        "1",
        "--format",
        "json",
    )
    assert rc == 0
    data = json.loads(out)
    assert data["two_divisible"] is True and data["eps"] == 1
    assert data["component"].startswith("E^-_{5;")


def test_verify_markdown_and_exit(capsys):
    rc, out = run_cli(capsys, "verify", "--suite", "lattice", "--format", "markdown")
    assert rc == 0
    assert out.count("PASS") >= 8
    assert "FAIL" not in out
    assert "\x1b[" not in out  # piped: never colored


def test_verify_json(capsys):
    rc, out = run_cli(capsys, "verify", "--suite", "bounds", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["suite"] == "bounds" and data["passed"] is True
    assert all(c["passed"] for c in data["checks"])


@pytest.mark.parametrize(
    "argv",
    [
        ["components", "--genus", "1"],
        ["components", "--genus", "x"],
        ["components"],
        ["phivector"],
        ["phivector", "--class", "1,2,3"],
        ["phivector", "--coeffs", "1;2,3"],
        ["phivector", "--class", "1,1,0,0,0,0,0,0,0,0", "--coeffs", "0;1,1,0,0,0,0,0;0,0"],
        ["verify", "--suite", "nope"],
        ["verify"],
    ],
)
def test_usage_errors_exit_two(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["phivector", "--class", "0,0,0,0,0,0,0,0,0,0"],
        ["phivector", "--class", "0,0,0,0,0,0,0,0,0,-1"],
        ["phivector", "--coeffs", "0;1,0,0,0,0,0,0;0,0"],
    ],
)
def test_domain_errors_exit_three(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 3
    assert capsys.readouterr().err.strip()


def test_identical_invocations_are_byte_identical(capsys):
    _, first = run_cli(capsys, "components", "--genus", "12", "--format", "json")
    _, second = run_cli(capsys, "components", "--genus", "12", "--format", "json")
    assert first == second


def test_console_script_defaults_to_json_when_piped():
    proc = subprocess.run(
        ["enriques", "components", "--genus", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 4


def test_console_script_propagates_usage_exit():
    proc = subprocess.run(
        ["enriques", "components", "--genus", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "usage:" in proc.stderr


def test_module_entry_matches_script():
    proc = subprocess.run(
        [sys.executable, "-m", "enriques.cli", "verify", "--suite", "bounds", "--gmax", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"] is True
