import io
import json
import shutil
import subprocess
import sys

import pytest

from mltt.errors import Fuel, IllFormed
from mltt.frontend import FrontendError, parse_term
from mltt.frontend.cli import Session, run
from conftest import CORPUS


def mltt(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_shipped_arithmetic():
    code, out, _ = mltt("check", str(CORPUS / "arith.mltt"))
    assert code == 0
    assert "seven_times_six : Id Nat (mul 7 6) 42" in out


def test_infer_identity():
    assert mltt("infer", "-e", "\\(x : Nat) => x") == (0, "Nat -> Nat\n", "")


def test_check_head_mismatch():
    code, out, err = mltt("check", "-e", "zero", "-t", "Nat -> Nat")
    assert code == 1
    assert "head mismatch" in err
    assert out == ""


def test_nf():
    assert mltt("nf", "-e", "(\\(x : Type) => x) Nat -> Nat")[:2] == (0, "Nat -> Nat\n")
    defs = str(CORPUS / "arith.mltt")
    assert mltt("--defs", defs, "nf", "-e", "mul 7 6")[:2] == (0, "42\n")
    assert mltt("nf", "--defs", defs, "-e", "add", "-t", "Nat -> Nat -> Nat")[0] == 0
    assert mltt("nf", "-e", "Type")[:2] == (0, "Type\n")


def test_conv():
    defs = str(CORPUS / "arith.mltt")
    assert mltt("--defs", defs, "conv", "-e", "add 2 2", "-e", "4", "-t", "Nat")[:2] == \
        (0, "convertible\n")
    code, _, err = mltt("--defs", defs, "conv", "-e", "add 2 2", "-e", "5", "-t", "Nat")
    assert code == 1 and "not convertible" in err


def test_parse_error_exit_code():
    code, _, err = mltt("infer", "-e", "\\(x : Nat =>")
    assert code == 2
    assert "<expr>:1:" in err


def test_unbound_name_is_a_parse_error():
    assert mltt("infer", "-e", "foo")[0] == 2


def test_fuel_exit_code():
    code, _, err = mltt("--fuel", "10", "check", str(CORPUS / "arith.mltt"))
    assert code == 3
    assert "out of fuel" in err


def test_internal_errors_map_to_exit_4():
    def broken(*_):
        raise IllFormed("stuck")
    with pytest.raises(FrontendError) as err:
        Session(Fuel(10)).kernel(parse_term("zero"), broken)
    assert err.value.diagnostic.exit_code == 4


def test_json_output():
    code, out, _ = mltt("--json", "infer", "-e", "zero")
    assert code == 0
    assert json.loads(out) == {"ok": True, "output": ["Nat"]}
    code, _, err = mltt("check", "--json", "-e", "zero", "-t", "Nat -> Nat")
    diag = json.loads(err)
    assert code == 1
    assert diag["kind"] == "type" and diag["exit"] == 1
    assert diag["span"] == {"start": 0, "end": 4}


def test_type_error_span_points_at_subterm():
    code, _, err = mltt("--json", "infer", "-e", "\\(x : Nat) => succ (\\(y : Nat) => y)")
    assert code == 1
    span = json.loads(err)["span"]
    assert "\\(x : Nat) => succ (\\(y : Nat) => y)"[span["start"]:span["end"]] == "(\\(y : Nat) => y)"


def test_every_failure_emits_one_diagnostic():
    failing = (
        ["infer", "-e", "Type"],
        ["infer", "-e", "("],
        ["--fuel", "3", "infer", "-e", "(\\(x : Nat) => x) zero"],
    )
    for argv in failing:
        code, out, err = mltt("--json", *argv)
        assert code != 0 and out == ""
        lines = err.strip().splitlines()
        assert len(lines) == 1
        diag = json.loads(lines[0])
        assert diag["exit"] == code
        assert 0 <= diag["span"]["start"] <= diag["span"]["end"]


def test_usage_errors():
    assert mltt("check")[0] == 2
    assert mltt("conv", "-e", "zero", "-t", "Nat")[0] == 2


@pytest.mark.skipif(shutil.which("mltt") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["mltt", "infer", "-e", "\\(A : Type) (x : A) => x"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "(x : Type) -> x -> x\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mltt", "check", "-e", "zero", "-t", "Nat -> Nat"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "error[type]" in proc.stderr
