import io
import json

import pytest

from logcodes.cli import main, parse_range


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_family_json():
    code, text = run("family", "hamming2", "--m", "3")
    doc = json.loads(text)
    assert code == 0 and doc == {"q": 2, "n": 7, "k": 4,
                                 "counts": ["1", "0", "0", "7", "7", "0", "0", "1"]}


def test_family_nonzero_and_csv():
    doc = json.loads(run("family", "hamming2", "--m", "3", "--nonzero")[1])
    assert doc["weights"] == [0, 3, 4, 7] and doc["nonzero_counts"] == ["1", "7", "7", "1"]
    text = run("family", "even", "--n", "4", "--format", "csv", "--nonzero")[1]
    assert text.splitlines() == ["weight,count", "0,1", "2,6", "4,1"]


def test_family_plot_csv():
    lines = run("family", "golay24", "--plot-csv")[1].splitlines()
    assert lines[0] == "weight,count,log10_count"
    assert lines[1] == "0,1,0.000000" and lines[2].startswith("8,759,2.880")


def test_family_big_counts_are_strings():
    doc = json.loads(run("family", "hamming2", "--m", "14")[1])
    assert all(isinstance(c, str) for c in doc["counts"]) and len(doc["counts"]) == 2 ** 14


def test_family_mds_existence_note(capsys):
    code, _ = run("family", "mds", "--n", "7", "--k", "3", "--q", "5")
    assert code == 0 and "q + 1" in capsys.readouterr().err


def test_family_bad_params_exit_2(capsys):
    assert run("family", "hamming2")[0] == 2
    assert "error" in capsys.readouterr().err
    assert run("family", "mds", "--n", "12", "--k", "4", "--q", "3")[0] == 2


def test_check_exit_codes():
    code, text = run("check", "hamming2", "--m", "4")
    rep = json.loads(text)
    assert code == 1 and rep["gap_count"] == 2 and rep["witnesses"][0][4] == "-1176"
    assert run("check", "hamming2", "--m", "5")[0] == 0
    assert run("check")[0] == 2


def test_check_input_and_dual(tmp_path):
    p = tmp_path / "wd.json"
    p.write_text(run("family", "simplex", "--m", "3")[1])
    code, text = run("dual", str(p))
    assert code == 0 and json.loads(text)["counts"] == ["1", "0", "0", "7", "7", "0", "0", "1"]
    assert run("check", "--input", str(p))[0] == 0


def test_dual_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(run("family", "rm1", "--m", "3")[1]))
    doc = json.loads(run("dual", "-")[1])
    assert doc["k"] == 4 and doc["counts"] == ["1", "0", "0", "0", "14", "0", "0", "0", "1"]


@pytest.mark.parametrize("body", ["not json", '{"q": 2}', '{"q": 2, "n": 1, "k": 1, "counts": ["1", "x"]}',
                                  '{"q": 2, "n": 1, "k": 1, "counts": ["1", "5"]}'])
def test_dual_malformed_exit_2(tmp_path, body):
    p = tmp_path / "bad.json"
    p.write_text(body)
    assert run("dual", str(p))[0] == 2


def test_dual_inexact_exit_2(tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"q": 2, "n": 3, "k": 2, "counts": ["1", "3", "0", "0"]}')
    assert run("dual", str(p))[0] == 2


@pytest.mark.parametrize("family,args", [("hamming2", ["--m", "3"]), ("rs_mds", ["--n", "5", "--k", "3", "--q", "5"]),
                                         ("hrm2", ["--q", "3", "--m", "2"])])
def test_gen_brute_tutte_agree_with_family(tmp_path, family, args):
    mat = tmp_path / "g.txt"
    mat.write_text(run("gen", family, *args)[1])
    fam = "mds" if family == "rs_mds" else family
    want = json.loads(run("family", fam, *args)[1])
    for backend in ("numba", "numpy"):
        assert json.loads(run("brute", str(mat), "--backend", backend)[1]) == want
        assert json.loads(run("tutte", str(mat), "--backend", backend)[1]) == want
    assert json.loads(run("brute", str(mat), "--workers", "3")[1]) == want


def test_brute_budget_and_bad_matrix(tmp_path):
    mat = tmp_path / "g.txt"
    mat.write_text(run("gen", "golay24")[1])
    assert run("brute", str(mat), "--budget", "100")[0] == 2
    assert run("tutte", str(mat))[0] == 2  # 2^24 subsets over the default budget
    mat.write_text("2 3 2\n1 0 1\n")
    assert run("brute", str(mat))[0] == 2
    mat.write_text("2 3 2\n1 0 1\n1 0 1\n")
    assert run("brute", str(mat))[0] == 2
    assert run("brute", str(tmp_path / "missing.txt"))[0] == 2


def test_gen_rm_general():
    text = run("gen", "rm", "--r", "1", "--m", "3")[1]
    assert text.splitlines()[0] == "2 8 4"


def test_mds_threshold():
    code, text = run("mds-threshold", "5", "3")
    doc = json.loads(text)
    assert code == 0 and doc["coeffs"] == ["6", "-44", "66"] and doc["root_intervals"][1] == [5, 6]
    assert json.loads(run("threshold", "12", "9")[1])["q_min_integer"] == 14
    assert run("mds-threshold", "5", "2")[0] == 2


def test_mds_verdict():
    code, text = run("mds-verdict", "5", "3", "7")
    assert code == 0 and json.loads(text)["method"] == "theorem"
    code, text = run("verdict", "5", "3", "5", "--mode", "direct")
    assert code == 1 and json.loads(text)["violations"] == [2]
    assert run("verdict", "11", "9", "17", "--mode", "theorem")[0] == 2


def test_verify_table_and_json():
    code, text = run("verify", "rm2", "--m", "2..6")
    lines = text.splitlines()
    assert code == 0 and lines[-1] == "5/5 passed" and all(ln.endswith("PASS") for ln in lines[1:-1])
    code, text = run("verify", "hamming", "--m", "3,4,5", "--format", "json")
    rows = json.loads(text)
    assert code == 0 and [r["observed"] for r in rows] == ["0", "2", "0"]


def test_verify_hamming_q_reports_failure():
    code, text = run("verify", "hamming_q")
    assert code == 1 and "H_(2,3)" in [ln.split()[1] for ln in text.splitlines() if "FAIL" in ln]


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("7") == [7]
    assert parse_range("2,9") == [2, 9]


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["family", "nope"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2
