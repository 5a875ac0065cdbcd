import json
import math

import pytest

from sgcorona.cli import run

C3 = "3\n0 1 +\n1 2 +\n0 2 +\n"
P2 = "2\n0 1 +\n"
P2NEG = "2\n0 1 -\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("c3", C3), ("p2", P2), ("p2neg", P2NEG)):
        p = tmp_path / f"{name}.sg"
        p.write_text(text, encoding="utf-8")
        paths[name] = str(p)
    return paths


def _doc(capsys):
    return json.loads(capsys.readouterr().out)


def test_corona_command(files, capsys, tmp_path):
    out = tmp_path / "cor.sg"
    assert run(["corona", files["c3"], files["p2"], "-o", str(out)]) == 0
    doc = _doc(capsys)
    assert doc["nodes"] == 9
    assert doc["edges"] == {"total": 18, "positive": 18, "negative": 0}
    assert doc["layout"]["total"] == 9
    assert out.read_text().startswith("9\n")
    assert len(doc["inputs"]) == 2
    assert all(len(i["sha256"]) == 64 for i in doc["inputs"])


def test_spectrum_command_all_methods(files, capsys):
    s3, s33 = math.sqrt(3), math.sqrt(33)
    want = [(-s3, 2), ((3 - s33) / 2, 1), (-1.0, 3), (s3, 2),
            ((3 + s33) / 2, 1)]
    for method in ("numeric", "theorem", "proposition"):
        assert run(["spectrum", "--matrix", "a", "--method", method,
                    files["c3"], files["p2"]]) == 0
        doc = _doc(capsys)
        assert doc["order"] == 9
        assert doc["discrepancies"] == []
        got = [(row["value"], row["multiplicity"])
               for row in doc["spectrum"]]
        assert len(got) == len(want)
        for (gv, gm), (wv, wm) in zip(got, want):
            assert gm == wm and abs(gv - wv) < 1e-8


def test_spectrum_out_of_family_is_usage_error(files, capsys, tmp_path):
    # a 4-node path as copy factor is neither a star nor net-regular
    path = tmp_path / "path4.sg"
    path.write_text("4\n0 1 +\n1 2 +\n2 3 +\n", encoding="utf-8")
    code = run(["spectrum", "--matrix", "a", "--method", "proposition",
                files["p2"], str(path)])
    assert code == 2


def test_balance_command(files, capsys):
    assert run(["balance", files["p2"], files["p2neg"]]) == 0
    doc = _doc(capsys)
    assert doc["corona"] == "unbalanced"
    assert doc["agree"] is True
    assert doc["factors"] == {"first": True, "second": True}


def test_stats_command(files, capsys):
    assert run(["stats", "--triads", files["c3"], files["p2"]]) == 0
    doc = _doc(capsys)
    assert doc["edge_census"]["agree"] is True
    assert doc["edge_census"]["formula"]["total"] == 18
    assert doc["triad_census"]["agree"] is True
    assert doc["triad_census"]["total_formula"] == 13


def test_coronal_command(files, capsys):
    assert run(["coronal", "--matrix", "a", files["c3"]]) == 0
    doc = _doc(capsys)
    assert doc["numerator"] == [3]
    assert doc["denominator"] == [-2, 1]
    assert doc["closed_form"] == "net_regular"
    assert doc["closed_form_agrees"] is True


def test_cospectral_command(files, capsys, tmp_path):
    # negating the single edge is a switching, so these agree
    assert run(["cospectral", "--matrix", "a",
                files["p2"], files["p2neg"]]) == 0
    assert _doc(capsys)["cospectral"] is True
    # one negative edge on a triangle is not switching-removable
    c3neg = tmp_path / "c3neg.sg"
    c3neg.write_text("3\n0 1 -\n1 2 +\n0 2 +\n", encoding="utf-8")
    assert run(["cospectral", "--matrix", "a",
                files["c3"], str(c3neg)]) == 0
    assert _doc(capsys)["cospectral"] is False


def test_parse_error_exit_code(files, capsys, tmp_path):
    bad = tmp_path / "bad.sg"
    bad.write_text("2\n0 2 +\n", encoding="utf-8")
    assert run(["stats", str(bad), files["p2"]]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err


def test_missing_file_exit_code(files, capsys, tmp_path):
    assert run(["balance", str(tmp_path / "nope.sg"), files["p2"]]) == 2


def test_verify_command_small(files, capsys):
    code = run(["verify", "--trials", "20", "--seed", "3", "--max-n", "4"])
    doc = _doc(capsys)
    assert code == 0
    assert doc["ok"] is True
    names = [c["name"] for c in doc["checks"]]
    assert "theorem_identities" in names and "eigensolver" in names
    # deviations, when present, must be reproduced by the primary route
    for check in doc["checks"]:
        for dev in check["deviations"]:
            assert dev["reproduced_by_primary"] is True


def test_verbose_tables_go_to_stderr(files, capsys):
    assert run(["--verbose", "spectrum", "--matrix", "q",
                files["c3"], files["p2"]]) == 0
    captured = capsys.readouterr()
    json.loads(captured.out)  # stdout stays pure JSON
    assert "Q-spectrum" in captured.err
