import json

import pytest

from ybx.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_example(capsys):
    code, out, _ = run(capsys, "family", "--name", "narayana_poly", "--n", "4")
    assert code == 0 and json.loads(out)["value"] == "(1,6,6,1)_β"


def test_empty_word(capsys):
    code, out, _ = run(capsys, "reduce", "--word", "")
    assert code == 0 and json.loads(out)["value"] == "1"


def test_reduce_full_form(capsys):
    code, out, _ = run(capsys, "reduce", "--word", "12,23", "--spec", "none")
    d = json.loads(out)
    assert code == 0 and d["count"] == 3
    assert {"letters": [[1, 3]], "coef": "β"} in d["words"]


def test_groth_tuple(capsys):
    code, out, _ = run(capsys, "groth", "--perm", "1,5,4,3,2", "--spec", "ones")
    assert code == 0 and json.loads(out)["tuple"] == "(14,21,9,1)_β"


def test_groth_with_parameter_vector(capsys):
    code, out, _ = run(capsys, "groth", "--perm", "1,3,2", "--A=-b,b,0,1,0")
    assert code == 0 and json.loads(out)["poly"] == "x1*x2*β + x1 + x2"


@pytest.mark.parametrize("fmt", ["json", "csv", "latex"])
def test_byte_identical(capsys, fmt):
    argv = ["--format", fmt, "tutte", "--multipartite", "2,2,1", "--hilb", "--chromatic"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b and a[0] == 0 and a[1]


def test_formats_render(capsys):
    _, out, _ = run(capsys, "--format", "latex", "family", "--name", "q_schroder", "--n", "3")
    assert out.startswith(r"\begin{tabular}") and r"\beta" in out
    _, out, _ = run(capsys, "--format", "csv", "hilb", "--algebra", "6T", "--n", "3")
    assert out.splitlines()[0] == "key,value" and "series" in out


def test_exit_codes(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "family", "--name", "nope", "--n", "1")[0] == 2
    assert run(capsys, "reduce", "--word", "12,3x")[0] == 2
    assert run(capsys, "groth", "--perm", "1,2,3,4,5,6,7,8,9,10")[0] == 3
    assert run(capsys, "rep", "--kind", "qbruhat", "--n", "7")[0] == 3
    assert run(capsys, "tutte", "--complete", "3", "--multipartite", "1,1")[0] == 2


def test_rep_reports(capsys):
    code, out, _ = run(capsys, "rep", "--kind", "qbruhat", "--n", "3")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "rep", "--kind", "nabla", "--n", "3")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hankel")
    d = json.loads(out)
    assert code == 0 and d["criteria"][0]["criterion"] == 7 and d["status"] == "pass"
    assert run(capsys, "verify", "--suite", "zzz")[0] == 2


def test_tutte_graph_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("4\n1 2\n2 3\n3 4\n4 1\n")
    code, out, _ = run(capsys, "tutte", "--graph", str(f), "--universal")
    d = json.loads(out)
    assert code == 0 and d["tutte"] == "x^3 + x^2 + x + y" and d["universal_matches"]
