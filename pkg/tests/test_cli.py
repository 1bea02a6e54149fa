import pathlib
import subprocess
import sys

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
EXAMPLE = str(FIXTURES / "example_to.fps")
FIRST = str(FIXTURES / "continuity_first.fps")
SECOND = str(FIXTURES / "continuity_second.fps")


def run(*args):
    return subprocess.run([sys.executable, "-m", "fpsoft", *args],
                          capture_output=True, text=True)


def test_validate_flawed_topology():
    r = run("validate", "--input", EXAMPLE, "--topology", "tau_flawed")
    assert r.returncode == 1
    assert "T3" in r.stdout
    assert "F_A2" in r.stdout and "F_A3" in r.stdout
    assert "e3" in r.stdout


def test_validate_corrected_topology():
    r = run("validate", "--input", EXAMPLE, "--topology", "tau_corrected")
    assert r.returncode == 0
    assert r.stdout.strip() == "valid"


def test_closure_prints_universal_set():
    r = run("closure", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--set", "F_A1")
    assert r.returncode == 0
    assert r.stdout.strip() == ("set result { e1: 1/1 { x1 x2 x3 x4 } ; "
                                "e2: 1/1 { x1 x2 x3 x4 } ; "
                                "e3: 1/1 { x1 x2 x3 x4 } }")


def test_interior_prints_empty_set():
    r = run("interior", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--set", "F_A1")
    assert r.returncode == 0
    assert r.stdout.strip() == ("set result { e1: 1/5 { x1 x3 } ; "
                                "e2: 3/10 { x1 x4 } ; e3: 2/5 { x2 } }")


def test_qnbd():
    r = run("qnbd", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--set", "F_A3", "--point", "e3:7/10:{x2}")
    assert r.returncode == 0 and r.stdout.strip() == "yes"
    r = run("qnbd", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--set", "F_empty", "--point", "e3:7/10:{x2}")
    assert r.returncode == 1 and r.stdout.strip() == "no"


def test_base():
    r = run("base", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--base", "F_empty", "F_A1", "F_A2", "F_A3", "F_univ")
    assert r.returncode == 0 and r.stdout.strip() == "yes"
    r = run("base", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--base", "F_empty")
    assert r.returncode == 1
    assert r.stdout.startswith("no: F_A1")


def test_continuity():
    r = run("continuity", "--input", FIRST, "--mapping", "f",
            "--source-topology", "tau1", "--target-topology", "tau2")
    assert r.returncode == 0 and r.stdout.strip() == "yes"
    r = run("continuity", "--input", SECOND, "--mapping", "f",
            "--source-topology", "tau1", "--target-topology", "tau2")
    assert r.returncode == 1
    assert "no: preimage of G_S is not open" in r.stdout


def test_subcover():
    r = run("subcover", "--input", EXAMPLE, "--cover", "opens_cover")
    assert r.returncode == 0
    assert r.stdout.strip() == "minimal subcover: F_univ"
    r = run("subcover", "--input", EXAMPLE, "--cover", "short_cover")
    assert r.returncode == 1 and r.stdout.strip() == "not a cover"


def test_laws_pass_and_counterexample():
    r = run("laws", "--law", "pc-3", "--universe", "1", "--parameters", "1",
            "--resolution", "1")
    assert r.returncode == 0 and r.stdout.startswith("pass")
    r = run("laws", "--law", "fo-6-equality-without-injectivity")
    assert r.returncode == 0
    assert "counterexample" in r.stdout
    assert "mapping" in r.stdout


def test_usage_errors_exit_2():
    assert run("bogus").returncode == 2
    assert run("validate", "--input", EXAMPLE).returncode == 2


def test_semantic_errors_exit_1():
    r = run("validate", "--input", EXAMPLE, "--topology", "nope")
    assert r.returncode == 1 and "unknown topology" in r.stderr
    r = run("qnbd", "--input", EXAMPLE, "--topology", "tau_corrected",
            "--set", "F_A3", "--point", "garbage")
    assert r.returncode == 1 and "bad point" in r.stderr
    r = run("laws", "--law", "nope")
    assert r.returncode == 1 and "unknown law" in r.stderr


@pytest.mark.parametrize("args", [
    ("validate", "--input", EXAMPLE, "--topology", "tau_flawed"),
    ("closure", "--input", EXAMPLE, "--topology", "tau_corrected",
     "--set", "F_A1"),
    ("laws", "--law", "pc-1", "--universe", "1", "--parameters", "1",
     "--resolution", "1"),
])
def test_determinism_across_runs_and_jobs(args):
    outputs = {run(*args).stdout for _ in range(2)}
    outputs.add(run(*args, "--jobs", "4").stdout)
    assert len(outputs) == 1
