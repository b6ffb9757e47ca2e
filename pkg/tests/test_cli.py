import pytest

from arcring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bn(capsys):
    code, out, _ = run(capsys, "bn", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert lines[0] == "((()))  t=1"
    assert lines[-1] == "count: 5"


def test_mul_worked_example(capsys):
    code, out, _ = run(capsys, "mul", "--n", "2", "--rule", "default",
                       "--x", "[(())|()()|{}]", "--y", "[()()|(())|{1}]")
    assert code == 0
    assert out.strip() == "-1*[(())|(())|{1,2}]"


def test_mul_oracle(capsys):
    code, out, _ = run(capsys, "mul", "--n", "2", "--oracle",
                       "--x", "[(())|()()|{}]", "--y", "[()()|(())|{}]")
    assert code == 0
    assert "oracle:" in out


def test_mul_parse_error(capsys):
    code, _, err = run(capsys, "mul", "--n", "2", "--x", "nope",
                       "--y", "[(())|(())|{}]")
    assert code == 2
    assert "parse error" in err


def test_bad_rule_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mul", "--n", "2", "--rule", "bogus",
              "--x", "[(())|(())|{}]", "--y", "[(())|(())|{}]"])
    assert exc.value.code == 2


def test_center(capsys):
    code, out, _ = run(capsys, "center", "--n", "2", "--flavor", "odd-ring")
    assert code == 0
    assert out.splitlines()[0] == "graded_rank: 0:1 1:0 2:2"


def test_springer_ranks_and_basis(capsys):
    code, out, _ = run(capsys, "springer", "--n", "2", "--ranks")
    assert code == 0
    assert out.strip() == "graded_rank: 0:1 1:3 2:2 3:0"
    code, out, _ = run(capsys, "springer", "--n", "2", "--basis")
    assert code == 0
    assert out.strip().splitlines() == ["1", "x1", "x2", "x3", "x1x2", "x1x3"]


def test_springer_check_iso(capsys):
    code, out, _ = run(capsys, "springer", "--n", "1", "--check-iso")
    assert code == 0
    assert "structure_constants: pass" in out


def test_assoc_phi0_table(capsys):
    code, out, _ = run(capsys, "assoc", "--n", "2", "--phi0")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert sum("undefined" in l for l in lines) == 2


def test_assoc_cocycle(capsys):
    code, out, _ = run(capsys, "assoc", "--n", "2", "--cocycle")
    assert code == 0
    assert "cocycle: pass" in out
    assert "coboundary: found" in out


def test_assoc_compare(capsys):
    code, out, _ = run(capsys, "assoc", "--n", "2", "--compare",
                       "flip-default")
    assert code == 0
    assert "verified isomorphism" in out


def test_qbinom(capsys):
    code, out, _ = run(capsys, "qbinom", "--m", "4", "--k", "2")
    assert code == 0
    assert out.strip() == "q^4 + q^2 + 2 + q^-2 + q^-4"
    code, _, _ = run(capsys, "qbinom", "--m", "2", "--k", "5")
    assert code == 2


def test_verify_all_n2(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "all")
    assert code == 0
    assert out.count("pass") == 6


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "center", "--n", "2", "--flavor", "odd")
    _, out2, _ = run(capsys, "center", "--n", "2", "--flavor", "odd")
    assert out1 == out2
