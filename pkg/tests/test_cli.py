import json

import pytest

from pmmonoid.cli import main, run_selftest


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_rn_json(capsys):
    code, out, _ = run(capsys, "eval", "e[1] s1", "-n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 3, "perm": [2, 1, 3], "partition": [[2], [1, 3]]}


def test_equal_exit_codes(capsys):
    assert run(capsys, "equal", "s1 s2 s1", "s2 s1 s2", "-n", "3", "--mode", "braid")[0] == 0
    assert run(capsys, "equal", "s1 s1^-1", "", "-n", "3", "--mode", "braid")[0] == 0
    code, out, _ = run(capsys, "equal", "s1", "s2", "-n", "3", "--mode", "braid", "--format", "json")
    assert code == 1
    verdict = json.loads(out)
    assert verdict["equal"] is False and verdict["lhs"] != verdict["rhs"]


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "eval", "e[2,2]", "-n", "3")
    assert code == 2 and "strictly increasing" in err
    assert run(capsys, "eval", "s1^-1", "-n", "3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_normal_form(capsys):
    code, out, _ = run(capsys, "normal-form", "e[1] s1 s2 e[2]", "-n", "3")
    assert (code, out.strip()) == (0, "s1 s2 e[2]")
    assert run(capsys, "normal-form", "s1", "--mode", "braid")[0] == 2


def test_count_and_enumerate(capsys):
    for n, value in ((1, 1), (3, 78), (4, 1800)):
        code, out, _ = run(capsys, "count", "-n", str(n))
        assert (code, out.strip()) == (0, str(value))
    code, out, _ = run(capsys, "enumerate", "-n", "2", "--format", "json")
    assert code == 0 and len(out.strip().splitlines()) == 6
    assert run(capsys, "count", "-n", "7")[0] == 3


def test_limit(capsys, tmp_path):
    path = tmp_path / "family.json"
    entries = [[{"coeffs": ["0"] * i + ["1"]} if i == j else "0" for j in range(4)] for i in range(4)]
    path.write_text(json.dumps({"n": 4, "entries": entries}))
    code, out, _ = run(capsys, "limit", "--input", str(path), "--format", "json")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert [t["matrix"].get("cols", 4) for t in terms] == [4, 3, 2, 1]
    assert terms[1]["matrix"]["entries"][1] == ["1", "0", "0"]

    path.write_text(json.dumps({"n": 2, "entries": [["1", "1"], ["1", "1"]]}))
    code, _, err = run(capsys, "limit", "--input", str(path))
    assert code == 3 and "determinant" in err
    path.write_text("{not json")
    assert run(capsys, "limit", "--input", str(path))[0] == 2


def test_diagram_to_file(capsys, tmp_path):
    out = tmp_path / "w.svg"
    assert run(capsys, "diagram", "s1 e[1]", "-n", "3", "--mode", "braid", "--output", str(out))[0] == 0
    first = out.read_text()
    assert first.startswith("<svg") and first.count('class="layer"') == 2
    run(capsys, "diagram", "s1 e[1]", "-n", "3", "--mode", "braid", "--output", str(out))
    assert out.read_text() == first


def test_word_from_input_file(capsys, tmp_path):
    path = tmp_path / "word.txt"
    path.write_text("s1 s1\n")
    code, out, _ = run(capsys, "eval", "--input", str(path), "-n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["perm"] == [1, 2]


@pytest.mark.parametrize("suite", ["matched-pair", "inverse-monoid", "relations-rn", "relations-braid", "shadow",
                                   "limit-example", "counting", "artin"])
def test_selftest_suites_pass(suite):
    ok, checks = run_selftest(suite, 3)
    assert ok, checks


def test_selftest_reports_printed_identity(capsys):
    code, out, _ = run(capsys, "selftest", "relations-rn", "-n", "3")
    assert code == 0
    assert "FAIL  worked identity as printed" in out
    assert "PASS  worked identity, corrected conjugating word" in out
    assert run(capsys, "selftest", "nope")[0] == 2
