import io
import json
import subprocess
import sys

import pytest

from fractions import Fraction

from pellconic.cli import decimal_str, main, render


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_power_table_tsv():
    code, out, _ = run("power", "--h", "-13/4", "--d", "2", "--x", "4", "--y", "1", "-n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[:3] == ["n", "x", "y"]
    assert "53499/32\t113249/256" in lines[6]
    assert lines[-1].startswith("# limit") and "8/(13+3√33)" in lines[-1]


def test_deterministic_output():
    argv = ("pythagorean", "--beta", "pi", "-n", "5")
    assert run(*argv)[1] == run(*argv)[1]


def test_redei_json():
    code, out, _ = run("redei", "--h", "0", "--d", "2", "--z", "1", "-n", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[-1] == {"n": 3, "N": "7", "D": "5", "Q": "7/5"}
    assert rows[0]["Q"] == "alpha"


def test_json_round_trip_of_pythagorean():
    code, out, _ = run("pythagorean", "--beta", "pi", "-n", "3", "--format", "json")
    rows = json.loads(out)
    for r in rows:
        A, B, C = int(r["A"]), int(r["B"]), int(r["C"])
        assert A * A + B * B == C * C


def test_empty_table_is_header_only():
    code, out, _ = run("power", "--h", "0", "--d", "2", "--x", "3", "--y", "2", "-n", "0")
    assert code == 0
    assert out.splitlines()[0].startswith("n\t")


def test_exit_codes():
    assert run("power", "--h", "0", "--d", "2", "--x", "3", "--y", "1", "-n", "2")[0] == 2
    assert run("power", "--bogus")[0] == 1
    assert run("redei", "--h", "x/0", "--d", "2", "--z", "1", "-n", "2")[0] == 1
    assert run("approximate", "--beta", "pi", "-n", "40", "--field", "real:20")[0] == 3


def test_rotation_prints_table_but_rejects_limit():
    code, out, err = run("power", "--h", "0", "--d", "-1", "--x", "3/5", "--y", "4/5", "-n", "3")
    assert code == 2
    assert "# limit" not in out
    assert "-7/25\t24/25" in out
    assert "does not converge" in err


def test_render_and_decimals():
    assert decimal_str(Fraction(12, 5), 10) == "2.4"
    assert render([], ["a", "b"]) == "a\tb\n"


@pytest.mark.slow
def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pellconic", "redei", "--h", "0", "--d", "2",
                          "--z", "1", "-n", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1].split("\t") == ["2", "3", "2", "3/2"]
