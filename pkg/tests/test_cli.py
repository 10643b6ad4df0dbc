from pathlib import Path

import pytest

from orbitkit import reports
from orbitkit.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["orbit", "pedersen6"], "orbit_pedersen6.yaml"),
        (["drep", "pedersen6"], "drep_pedersen6.yaml"),
        (["quantize", "heisenberg3", "--symbol", "y2*y3"], "quantize_heisenberg3.yaml"),
    ],
)
def test_golden_reports(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_reports_are_yaml(capsys):
    _, out, _ = run(capsys, "jump-indices", "pedersen6")
    tree = reports.load(out)
    assert tree["command"] == "jump-indices"


def test_unknown_source_is_usage_error(capsys):
    code, _, err = run(capsys, "orbit", "no-such-algebra")
    assert code == 2
    assert err.startswith("error:")


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.lie"
    path.write_text("dim 2\n[X1,X2] = X3\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "line 2" in err


def test_algebra_file(tmp_path, capsys):
    path = tmp_path / "h3.lie"
    path.write_text("basis Z P Q\n[Q,P] = Z\nxi: Z -> 2\n")
    code, out, _ = run(capsys, "flatness", str(path))
    assert code == 0
    assert reports.load(out)["flat"] is True


def test_flatness_verdicts(capsys):
    for name, flat in (("heisenberg5", True), ("pedersen5", True), ("filiform4", False)):
        _, out, _ = run(capsys, "flatness", name)
        assert reports.load(out)["flat"] is flat


def test_invariant_ops(capsys):
    code, out, _ = run(capsys, "invariant-ops", "heisenberg3", "--order", "2", "--degree", "0")
    assert code == 0
    assert reports.load(out)["dimension"] == 6


def test_check_theorem(capsys):
    code, out, _ = run(capsys, "check-theorem", "pedersen6")
    assert code == 0
    code, out, _ = run(capsys, "check-theorem", "lauret6", "2", "3", "--A", "1,2,0;2,5,1;0,1,-1")
    assert code == 1
    tree = reports.load(out)
    assert tree["verdict"] == "FAIL"


def test_check_decomposition(capsys):
    code, out, _ = run(
        capsys, "check-decomposition", "lauret6", "2", "3",
        "--h", "X0", "--z", "X0", "--c", "X1,X2,X3", "--V", "X4,X5,X6", "--h1", "X0", "--s", "D",
    )
    assert code == 0, out


def test_prop_commands(capsys):
    code, out, _ = run(capsys, "prop32", "pedersen6", "--ideal", "X1,X2,X3,X4,X5")
    assert code == 0
    code, out, _ = run(capsys, "prop31", "pedersen6", "--ideal", "X1,X2,X3,X4,X5")
    assert code == 0
    assert reports.load(out)["restriction_is_diffeomorphism"] is True


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.yaml"
    code, out, _ = run(capsys, "examples", "--out", str(path))
    assert code == 0
    assert path.read_text() == out


def test_numeric_compare(capsys):
    code, out, _ = run(capsys, "numeric-compare", "heisenberg3")
    assert code == 0
    assert reports.load(out)["gaussian_vs_weyl"]["result"] == "pass"


def test_numeric_compare_reports_coarse_grid(capsys):
    # at 64 the norm comparison also samples n = 32, where the bounded symbol has not decayed
    code, out, _ = run(capsys, "numeric-compare", "heisenberg3", "--grid", "64")
    assert code == 1
    assert reports.load(out)["error"] == "GridTooCoarse"
