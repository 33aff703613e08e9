import io
import os
import subprocess
import sys

import pytest

from rlcm.cli import main

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", ["free:X01", "odometer", "modified-odometer", "nat:2"])
def test_golden_reports(name):
    code, text = run("analyze", name)
    assert code == 0
    with open(os.path.join(GOLDEN, name.replace(":", "_") + ".txt"), encoding="utf-8") as fh:
        assert text == fh.read()


def test_msf_command():
    code, text = run("msf", "modified-odometer", "--element", "z^2")
    assert code == 0
    assert "MSF: {B, 0B, 1B}" in text
    assert "finiteness: HOLDS (exact" in text


def test_msf_rejects_identity(capsys):
    code, _ = run("msf", "odometer", "--element", "e")
    assert code == 2
    assert "degenerate" in capsys.readouterr().err


def test_germ_command():
    code, text = run("germ", "modified-odometer", "--s", "(ε,z,ε)", "--point", "B(0)")
    assert code == 0
    assert "image: B(0)" in text and "unit germ: HOLDS" in text
    code, text = run("germ", "odometer", "--s", "(ε,z,ε)", "--point", "(0)")
    assert "image: 1(0)" in text and "unit germ: FAILS" in text
    code, text = run("germ", "free:01", "--s", "[ε,1]", "--point", "(0)")
    assert "defined: no" in text


def test_bad_spec_exit_code(capsys):
    code, _ = run("analyze", os.path.join(os.path.dirname(__file__), "fixtures",
                                          "not_bijective.spec"))
    assert code == 2
    err = capsys.readouterr().err
    assert "line 4" in err and "not a bijection" in err


def test_axiom_violation_exit_code(capsys):
    code, _ = run("analyze", os.path.join(os.path.dirname(__file__), "fixtures", "corrupted.spec"))
    assert code == 2
    assert "ZS8" in capsys.readouterr().err


def test_unknown_instance_exit_code():
    assert run("analyze", "nope")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rlcm", "analyze", "nat:2", "--depth", "3"],
                          capture_output=True, text=True, check=True)
    assert "locally contracting: FAILS" in proc.stdout
