import json

import pytest

from quadguess.cli import main
from quadguess.equations import equation_to_json
from quadguess.guessing import GuessResult
from test_sequences import ZETA_EQ, ZIGZAG_EQ


@pytest.fixture
def zigzag_file(tmp_path):
    from quadguess.prefix import dump_prefix
    from quadguess.sequences import oracle_sequence
    path = tmp_path / "zigzag_egf.txt"
    path.write_text(dump_prefix(oracle_sequence("zigzag-egf", 20)))
    return str(path)


@pytest.fixture
def zigzag_eq_file(tmp_path):
    path = tmp_path / "zigzag_eq.json"
    path.write_text(equation_to_json(ZIGZAG_EQ))
    return str(path)


def test_oracle_subcommand(capsys):
    assert main(["oracle", "--name", "zeta-rescaled", "--count", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["1/6", "1/90", "1/945", "1/9450", "1/93555"]


def test_oracle_json(capsys):
    assert main(["oracle", "--name", "exp", "--count", "3",
                 "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == ["1", "1", "1/2"]


def test_oracle_unknown_name_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["oracle", "--name", "fibonacci", "--count", "5"])
    assert exc.value.code == 2


def test_guess_text_output(zigzag_file, capsys):
    code = main(["guess", "--input", zigzag_file, "--min-verify", "0"])
    out = capsys.readouterr().out
    assert code == 0
    assert "y'' - y*y' = 0" in out
    assert "(n+1)*(n+2)*a(n+2) - Sum((k+1)*a(k+1)*a(n-k), k=0..n) = 0" in out


def test_guess_json_roundtrip(zigzag_file, capsys):
    code = main(["guess", "--input", zigzag_file, "--min-verify", "0",
                 "--format", "json"])
    assert code == 0
    doc = capsys.readouterr().out
    result = GuessResult.from_json(doc)
    assert result.succeeded
    assert result.to_json() == doc.strip()
    assert ZIGZAG_EQ in result.basis


def test_guess_all_zero_input(tmp_path, capsys):
    path = tmp_path / "zeros.txt"
    path.write_text("0\n0\n0\n0\n")
    code = main(["guess", "--input", str(path)])
    assert code == 3
    assert "degenerate input: all terms zero" in capsys.readouterr().err


def test_guess_fail_exit_code(tmp_path, capsys):
    # n^n / n! has no small quadratic annihilator in the default budget
    from fractions import Fraction
    from math import factorial
    path = tmp_path / "hard.txt"
    terms = [Fraction(n ** n if n else 1, factorial(n)) for n in range(24)]
    path.write_text("\n".join(f"{t.numerator}/{t.denominator}"
                              for t in terms))
    assert main(["guess", "--input", str(path)]) == 1


def test_guess_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1/2\nbogus\n")
    code = main(["guess", "--input", str(path)])
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_guess_missing_file(capsys):
    assert main(["guess", "--input", "/nonexistent/seq.txt"]) == 2


def test_guess_rescale(tmp_path, capsys):
    # zeta-rescaled scaled back up by 4^n, undone with --rescale 4
    from quadguess.sequences import oracle_sequence
    vals = [v * 4 ** n for n, v in enumerate(oracle_sequence("zeta-rescaled",
                                                             24))]
    path = tmp_path / "scaled.txt"
    path.write_text("\n".join(f"{v.numerator}/{v.denominator}" for v in vals))
    code = main(["guess", "--input", str(path), "--rescale", "4",
                 "--format", "json"])
    assert code == 0
    result = GuessResult.from_json(capsys.readouterr().out)
    assert ZETA_EQ in result.basis


def test_extend_subcommand(tmp_path, zigzag_eq_file, capsys):
    seed = tmp_path / "seed.txt"
    seed.write_text("1\n1\n")
    code = main(["extend", "--equation", zigzag_eq_file,
                 "--input", str(seed), "--count", "3"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["1", "1", "1/2", "1/3", "5/24"]


def test_extend_inconsistent_exit_code(tmp_path, zigzag_eq_file, capsys):
    seed = tmp_path / "seed.txt"
    seed.write_text("1\n1\n5\n7\n")
    assert main(["extend", "--equation", zigzag_eq_file,
                 "--input", str(seed), "--count", "1"]) == 3


def test_check_subcommand(tmp_path, zigzag_eq_file, zigzag_file, capsys):
    assert main(["check", "--equation", zigzag_eq_file,
                 "--input", zigzag_file]) == 0
    assert "pass" in capsys.readouterr().out


def test_check_failure_exit_code(tmp_path, zigzag_eq_file, capsys):
    bad = tmp_path / "bad_seq.txt"
    bad.write_text("1\n1\n1\n1\n1\n")
    assert main(["check", "--equation", zigzag_eq_file,
                 "--input", str(bad)]) == 1


def test_equation_file_validation(tmp_path, zigzag_file, capsys):
    path = tmp_path / "eq.json"
    path.write_text('{"terms": "no"}')
    assert main(["check", "--equation", str(path),
                 "--input", zigzag_file]) == 2


def test_json_prefix_input(tmp_path, capsys):
    path = tmp_path / "seq.json"
    path.write_text('["1", "1", "1/2", "1/3", "5/24"]')
    from test_sequences import ZIGZAG_EQ
    eq_path = tmp_path / "eq.json"
    eq_path.write_text(equation_to_json(ZIGZAG_EQ))
    assert main(["check", "--equation", str(eq_path),
                 "--input", str(path)]) == 0
