import csv
import io
import json

import pytest

from kentucky.cli import main, parse_nat


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seq_plain(capsys):
    assert run(capsys, "seq", "--terms", "8") == (0, "1 2 3 4 5 8 11 16\n", "")


def test_seq_constructive(capsys):
    code, out, _ = run(capsys, "seq", "--terms", "6", "--s", "1", "--b", "1", "--constructive")
    assert (code, out) == (0, "1 2 3 5 8 13\n")


def test_seq_errors(capsys):
    assert run(capsys, "seq", "--terms", "0")[0] == 2
    assert run(capsys, "seq", "--terms", "41", "--constructive")[0] == 3
    assert run(capsys, "seq", "--terms", "5", "--s", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["seq", "--terms", "abc"])
    assert exc.value.code == 2


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "6", "0", "10455", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1
    r6, r0, rbig = doc["results"]
    assert r6["indices"] == [1, 5] and r6["terms"] == ["1", "5"]
    assert r0["indices"] == [] and r0["terms"] == []
    assert rbig["indices"] == [1, 11, 15, 22, 26] and rbig["gaps"] == [10, 4, 7, 4]


def test_decompose_big_as_strings(capsys):
    code, out, _ = run(capsys, "decompose", "10^100", "--format", "json")
    terms = json.loads(out)["results"][0]["terms"]
    assert sum(int(t) for t in terms) == 10 ** 100


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "k", "p"], ["3", "0", "1"], ["3", "1", "6"], ["3", "2", "4"]]


def test_gaps_enumerate(capsys):
    code, out, _ = run(capsys, "gaps", "--n", "3", "--method", "enumerate", "--format", "json")
    assert json.loads(out)["counts"] == {"3": "1", "4": "2", "5": "1"}


def test_gaps_methods_identical(capsys):
    for n in range(1, 13):
        for fmt in ("json", "csv", "plain"):
            a = run(capsys, "gaps", "--n", str(n), "--method", "formula", "--format", fmt)
            b = run(capsys, "gaps", "--n", str(n), "--method", "enumerate", "--format", fmt)
            assert a == b


def test_gaps_budget(capsys):
    assert run(capsys, "gaps", "--n", "23", "--method", "enumerate")[0] == 3


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["mean"]["num"] == "14" and doc["mean"]["den"] == "11"
    code, out, _ = run(capsys, "stats", "--n", "50", "--diagnostics", "--format", "json")
    assert json.loads(out)["mgf_residuals"]["0.0"] == 0.0
    assert run(capsys, "stats", "--n", "1", "--diagnostics")[0] == 2


def test_sample(capsys, tmp_path):
    hist = tmp_path / "h.csv"
    code, out, _ = run(capsys, "sample", "--count", "300", "--bound", "10^50", "--seed", "4",
                       "--histogram-csv", str(hist), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1 and doc["bound"] == str(10 ** 50)
    assert hist.read_text().startswith("k,count,frequency\n")
    assert run(capsys, "sample", "--count", "0", "--bound", "10")[0] == 2


@pytest.mark.parametrize("argv", [
    ["seq", "--terms", "10"],
    ["decompose", "6", "10455"],
    ["count", "--n", "7"],
    ["stats", "--n", "6"],
    ["gaps", "--n", "5"],
    ["sample", "--count", "50", "--bound", "1000"],
])
def test_every_format_parses(capsys, argv):
    for fmt in ("json", "csv", "plain"):
        code, out, _ = run(capsys, *argv, "--format", fmt)
        assert code == 0 and out.strip()
        if fmt == "json":
            assert json.loads(out)["schema_version"] == 1
        elif fmt == "csv":
            rows = list(csv.reader(io.StringIO(out)))
            assert len(rows) >= 2 and all(len(r) == len(rows[0]) for r in rows)


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("KENTUCKY_FORMAT", "json")
    code, out, _ = run(capsys, "seq", "--terms", "3")
    assert json.loads(out)["terms"] == ["1", "2", "3"]


def test_invariant_exit(capsys, monkeypatch):
    from kentucky import counting
    monkeypatch.setattr(counting, "pnk_row", lambda n: [1])
    assert run(capsys, "count", "--n", "3")[0] == 4


def test_parse_nat():
    assert parse_nat("10^3") == 1000
    assert parse_nat("42") == 42
