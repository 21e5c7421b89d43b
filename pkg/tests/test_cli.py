import csv
import io
import json

import pytest

from privwords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["check", "aabaa"], "privileged: aabaa ← aa ← a\n"),
        (["check", "ab"], "not privileged (no border)\n"),
        (["check", "a"], "privileged (single letter)\n"),
        (["check", "aab"], "not privileged (no border)\n"),
        (["check", "abaab"], "not privileged (no privileged border occurs exactly twice)\n"),
        (["count", "-n", "2", "-q", "2"], "2\n"),
        (["count", "-n", "1", "-q", "5"], "5\n"),
        (["list", "-n", "3", "-q", "2"], "aaa\naba\nbab\nbbb\n"),
        (["rho", "-P", "aaab", "-q", "2"], "1.8392867552141612\n"),
        (["gp", "-P", "a", "-N", "1", "-q", "2", "--mode", "exact"], "1\n"),
        (["gp", "-P", "aaab", "-N", "4", "--mode", "brute"], "1\n"),
        (["choose-p", "-N", "100"], "7\n"),
        (["autocorr", "-P", "aba"], "Q=101 f(z)=z^2 + 1 f(2)=5 f'(2)=4\n"),
    ],
)
def test_plain_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


@pytest.mark.parametrize(
    "argv,code",
    [
        (["check", "abc"], 2),
        (["check", "a1"], 2),
        (["gp", "-P", "ab", "-N", "0"], 2),
        (["count", "-n", "2", "-q", "1"], 2),
        (["count", "-n", "31"], 3),
        (["gp", "-P", "ab", "-N", "40", "--mode", "brute"], 3),
        (["rho", "-P", "aa"], 4),
        (["gp", "-P", "aa", "-N", "5", "--mode", "asymptotic"], 4),
        (["choose-p", "-N", "2", "-q", "5"], 2),
        (["bound", "--n-from", "15", "--n-to", "15"], 0),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    if code:
        assert err.startswith("privwords:") and out == ""


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


SCHEMAS = {
    ("check", "aabaa"): ["word", "q", "privileged", "witness"],
    ("count", "-n", "6"): ["n", "q", "count", "method"],
    ("list", "-n", "4"): ["n", "q", "word"],
    ("autocorr", "-P", "aabaa"): ["P", "q", "p", "autocorrelation", "polynomial", "f_q", "df_q"],
    ("gp", "-P", "aaab", "-N", "12"): ["P", "N", "q", "count", "method"],
    ("gp", "-P", "aaab", "-N", "12", "--mode", "asymptotic"):
        ["P", "N", "q", "ln_rho", "ln_RQ", "ln_estimate", "estimate", "method"],
    ("rho", "-P", "aaab"): ["P", "q", "rho", "gap", "residual", "iterations", "bracket_lo", "bracket_hi"],
    ("expansions", "-P", "aaaab"): ["P", "q", "p", "ln_rho", "ln_rho_expansion", "ln_rho_residual",
                                    "ln_RQ", "ln_RQ_expansion", "ln_RQ_residual"],
    ("choose-p", "-N", "1000"): ["N", "q", "p", "floor_formula_p"],
    ("bound", "--n-from", "10", "--n-to", "14"):
        ["n", "q", "p", "N", "lower_sum", "exact_B", "ratio", "ln_lower_sum", "ln_ratio"],
    ("lemma5", "-N", "20"): ["N", "q", "p", "P", "ratio", "running_min"],
}


@pytest.mark.parametrize("argv", list(SCHEMAS))
def test_csv_schema_and_json_mirror(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == SCHEMAS[argv]
    assert len(rows) > 1 and all(len(r) == len(rows[0]) for r in rows)
    code, js, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(js)
    assert [list(d) for d in doc] == [rows[0]] * len(doc)
    assert len(doc) == len(rows) - 1
    for d, r in zip(doc, rows[1:]):
        for key, cell in zip(rows[0], r):
            v = d[key]
            if v is None:
                assert cell == ""
            elif isinstance(v, bool):
                assert cell == str(v).lower()
            elif isinstance(v, float):
                assert float(cell) == v
            else:
                assert cell == str(v)


def test_reals_have_17_significant_digits(capsys):
    _, out, _ = run(capsys, "rho", "-P", "aaab", "--format", "csv")
    row = dict(zip(*csv.reader(io.StringIO(out))))
    assert row["rho"] == format(1.8392867552141612, ".17g")


def test_big_integers_are_decimal(capsys):
    _, out, _ = run(capsys, "gp", "-P", "aabaa", "-N", "300", "--format", "csv")
    count = list(csv.reader(io.StringIO(out)))[1][3]
    assert count.isdigit() and len(count) > 80


def test_bound_rows(capsys):
    _, out, _ = run(capsys, "bound", "-q", "2", "--n-from", "50", "--n-to", "60", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == list(range(51, 61))
    assert all(float(r["ratio"]) > 0 for r in rows)


def test_out_file(tmp_path, capsys):
    path = tmp_path / "o.csv"
    code, out, _ = run(capsys, "count", "-n", "5", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text() == "n,q,count,method\n5,2,8,exhaustive\n"


def test_cache_path(tmp_path, capsys):
    path = tmp_path / "cache.tsv"
    run(capsys, "count", "-n", "9", "--cache-path", str(path))
    assert path.read_text().startswith("9\t2\t40\texhaustive\t")
    _, out, _ = run(capsys, "count", "-n", "9", "--cache-path", str(path))
    assert out == "40\n"
