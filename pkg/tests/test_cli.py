import json

import pytest

from polyspace.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "1", "1", "1", "1", "1", "--k", "2")
    assert code == 0
    assert "<{4,5}>" in out
    assert "category:      3" in out
    assert "TC_2 in [3, 5]" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "1", "1", "1", "1", "1", "4",
                       "--k", "2..3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["code"]["genes"] == [[6]]
    assert payload["dims"] == [1, 1, 1, 1]
    assert [b["k"] for b in payload["bounds"]] == [2, 3]


def test_analyze_non_generic_diagnostic(capsys):
    code, _, err = run(capsys, "analyze", "1", "1", "1", "3")
    assert code == 2
    assert "not generic" in err and "half the perimeter" in err


def test_analyze_impossible_polygon(capsys):
    code, _, err = run(capsys, "analyze", "1", "1", "1", "10")
    assert code == 2
    assert "no closed polygon" in err


def test_code_command(capsys):
    code, out, _ = run(capsys, "code", "1", "1", "1", "1", "1")
    assert code == 0 and out.strip() == "<{4,5}>"


def test_code_candidate_realizable(capsys):
    code, out, _ = run(capsys, "code", "--candidate", "2,4;5", "--n", "7",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["realizable"] is True
    assert payload["code"]["genes"] == [[2, 4, 7], [5, 7]]


def test_code_candidate_unrealizable(capsys):
    code, out, _ = run(capsys, "code", "--candidate", "2,4", "--n", "6")
    assert code == 1
    assert "not realizable" in out


def test_enumerate_cache(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5",
                       "--cache-dir", str(tmp_path))
    assert code == 0
    assert "total: 6 realizable codes" in out
    assert (tmp_path / "codes_n5.json").exists()


def test_table1_text_and_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "table1", "--n", "5", "6")
    assert code == 0
    assert "all cells match" in out
    code, out, _ = run(capsys, "table1", "--n", "5", "6", "--format", "csv",
                       "--out-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "table1.csv").exists()
    header = (tmp_path / "table1.csv").read_text().splitlines()[0]
    assert header == "row,n,count,reference,match"


def test_table1_figure(tmp_path, capsys):
    code, out, _ = run(capsys, "table1", "--n", "5", "--figures",
                       "--out-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "table1.png").stat().st_size > 0


def test_bounds_csv_and_figures(tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", "1", "1", "1", "1", "1", "1", "1",
                       "--k", "2..4", "--format", "csv", "--figures",
                       "--out-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "bounds.csv").exists()
    assert (tmp_path / "bounds.png").stat().st_size > 0
    rows = (tmp_path / "bounds.csv").read_text().splitlines()
    assert len(rows) == 4  # header + three k values


def test_certify_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "bounds", "--candidate", "2;", "--n", "7",
                       "--k", "2", "--certify", "--format", "json",
                       "--out-dir", str(tmp_path))
    assert code == 0
    cert_file = tmp_path / "certificates.json"
    assert cert_file.exists()
    certs = json.loads(cert_file.read_text())
    assert certs, "expected at least one verified certificate"
    code, out, _ = run(capsys, "certify", str(cert_file))
    assert code == 0
    assert "nonzero" in out

    # tamper: pushing the product past the top degree must flip the verdict
    bad = json.loads(cert_file.read_text())
    bad[0]["factors"].append({"kind": "bar", "gen": "R", "exp": 3, "pos": 2})
    bad[0]["length"] += 3
    bad_file = tmp_path / "bad.json"
    bad_file.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "certify", str(bad_file))
    assert code == 1
    assert "ZERO" in out


def test_certify_malformed(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "certify", str(path))
    assert code == 2


def test_certify_wrong_schema(tmp_path, capsys):
    path = tmp_path / "schema.json"
    path.write_text(json.dumps({"code": {"n": 6, "genes": [[3, 6]]}, "k": 2,
                                "factors": [{"kind": "mystery", "gen": "R", "exp": 1}]}))
    code, _, err = run(capsys, "certify", str(path))
    assert code == 2
