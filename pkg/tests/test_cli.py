import io
import json
import subprocess
import sys

import pytest

from order10.cli import main
from order10.modeq import BivarPoly
from order10.reference import U_REFERENCE


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text), text


def test_qexp_g():
    code, data, _ = run_json("qexp", "--name", "g", "--order", "7")
    assert code == 0
    assert data["coefficients"] == ["1", "4", "12", "32", "76", "164", "336"]


def test_qexp_fractional_exponents():
    code, data, _ = run_json("qexp", "--name", "J", "--order", "3")
    assert code == 0
    assert data["valuation"] == "1/4" and data["step"] == "1"


def test_verify():
    code, data, _ = run_json("verify", "--identity", "C37", "--order", "200")
    assert code == 0 and data["pass"] is True and data["id"] == "C37"


def test_cusp_orders():
    code, data, _ = run_json("cusp-orders", "--level", "10", "--eta", "1:-4,2:2,5:4,10:-2")
    assert code == 0 and data == {"oo": "0", "0": "-1", "1/2": "0", "1/5": "1"}
    code, data, _ = run_json("cusp-orders", "--level", "10", "--eta", "1:4,4:-4", "--generalized")
    assert code == 0 and set(data) == {"oo", "0", "1/2", "1/5"}


def test_derive_U_level_two():
    code, data, _ = run_json("derive", "--function", "U", "--level", "2")
    assert code == 0
    assert BivarPoly.from_json_dict(data).equal_up_to_sign(U_REFERENCE[2])
    assert all(isinstance(t["c"], str) for t in data["terms"])


def test_derive_text_format_either_position():
    a = run("--format", "text", "derive", "--function", "g", "--level", "2")
    b = run("derive", "--function", "g", "--level", "2", "--format", "text")
    assert a == b and a[0] == 0
    assert a[1].strip() == "X - Y^2 - 4*X*Y - X^2 + 5*X*Y^2"


def test_check_table():
    code, data, _ = run_json("check", "--table", "4", "--level", "3")
    assert code == 0 and data["pass"] and data["structure"]["kronecker"]
    code, data, _ = run_json("check", "--table", "5", "--level", "13")
    assert code == 1 and data["error"] == "KeyError"


def test_eval_and_class_poly():
    code, data, _ = run_json("eval", "--quad", "10,0,1", "--prec", "60", "--functions", "g0,T1")
    assert code == 0
    assert data["g0"]["minpoly"] == ["1", "-10", "5"]
    assert data["T1"]["minpoly"][0] == "1" and data["T1"]["minpoly"][-1] == "1"
    code, data, _ = run_json("class-poly", "--disc", "-40", "--prec", "60")
    assert code == 0 and data["coeffs"] == ["1", "-10", "5"]
    assert [c["form"] for c in data["conjugates"]] == [[1, 0, 10], [2, 0, 5]]


def test_computation_failure_exit_1():
    code, data, _ = run_json("class-poly", "--disc", "-39", "--prec", "40")
    assert code == 1 and data["error"] == "NonIntegralCoefficients"
    code, data, _ = run_json("eval", "--quad", "10,0,1", "--functions", "bogus")
    assert code == 1 and data["error"] == "KeyError"


@pytest.mark.parametrize("argv", [
    [], ["nope"], ["qexp", "--name", "zzz"], ["qexp", "--name", "g", "--order", "-3"],
    ["eval", "--quad", "1,2"], ["eval", "--quad", "1,5,1"], ["derive", "--function", "g"],
    ["derive", "--function", "g", "--level", "2", "--order", "soon"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, stdout=io.StringIO())
    assert exc.value.code == 2


def test_output_is_deterministic_and_round_trips():
    argv = ("class-poly", "--disc", "-40", "--prec", "50")
    code1, data, text1 = run_json(*argv)
    code2, _, text2 = run_json(*argv)
    assert text1 == text2
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == text1


def test_reproduce_section():
    code, data, _ = run_json("reproduce", "--section", "cusps", "--section", "expansions")
    assert code == 0 and data["all_pass"] and data["total"] == len(data["checks"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "order10", "qexp", "--name", "T1", "--order", "16"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    terms = {t["e"]: t["c"] for t in json.loads(proc.stdout)["terms"]}
    assert terms == {"1": "1", "4": "1", "8": "-1", "11": "-1", "14": "-1", "15": "1"}
