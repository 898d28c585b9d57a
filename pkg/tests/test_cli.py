import json

import pytest

from rckostka.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kostka_text(capsys):
    code, out, _ = run(capsys, "kostka", "--lambda", "2,1", "--mu", "1,1,1",
                       "--q")
    assert code == 0
    assert out.strip() == "q + q^2"


def test_kostka_methods_agree(capsys):
    results = []
    for method in ("fermionic", "charge"):
        code, out, _ = run(capsys, "kostka", "--lambda", "3,1",
                           "--mu", "1,1,1,1", "--q", "--method", method)
        assert code == 0
        results.append(out.strip())
    assert results[0] == results[1] == "q^3 + q^4 + q^5"
    code, out, _ = run(capsys, "kostka", "--lambda", "3,1",
                       "--mu", "1,1,1,1", "--method", "gt")
    assert code == 0 and out.strip() == "3"


def test_json_schema_and_roundtrip(capsys):
    code, out, _ = run(capsys, "kostka", "--lambda", "2,1", "--mu", "1,1,1",
                       "--q", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["polynomial"] == {"min_deg": 1, "coeffs": ["1", "1"]}


def test_pkostka_decompose(capsys):
    code, out, _ = run(capsys, "pkostka", "--lambda", "4,4,3,3,2",
                       "--rect", "2^3,2^2,2^2,1,1", "--q", "--json",
                       "--decompose")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["contributions"]) == 6
    assert sorted(c["charge"] for c in doc["contributions"]) == [
        6, 8, 8, 8, 10, 12
    ]


def test_configs_json(capsys):
    code, out, _ = run(capsys, "configs", "--lambda", "2,2",
                       "--rect", "1,1,1,1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["count"] == len(doc["configurations"]) == 2
    for cfg in doc["configurations"]:
        assert set(cfg) == {"levels", "charge", "vacancy"}


def test_catalan(capsys):
    code, out, _ = run(capsys, "catalan", "--n", "3", "--m", "4")
    assert code == 0 and out.strip() == "462"


def test_narayana_coeffs(capsys):
    code, out, _ = run(capsys, "narayana", "--n", "3", "--m", "4")
    assert code == 0
    assert [line.split(": ")[1] for line in out.strip().splitlines()] == [
        "1", "22", "113", "190", "113", "22", "1"
    ]


def test_macmahon_and_schroeder(capsys):
    code, out, _ = run(capsys, "macmahon", "--n", "2", "--m", "2", "--k", "1")
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(capsys, "schroeder", "--n", "2", "--m", "2")
    assert code == 0 and out.strip() == "2 + 2*t + t^2"


def test_okounkov_json(capsys):
    code, out, _ = run(capsys, "okounkov", "--n", "3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["threshold"] == 21
    assert doc["certificate"] is True


def test_words_and_paths_agree(capsys):
    code, wout, _ = run(capsys, "words", "--weight", "3,3,3", "--json")
    code2, pout, _ = run(capsys, "paths", "--d", "3", "--n", "3", "--json")
    assert code == code2 == 0
    assert json.loads(wout)["by_des"] == json.loads(pout)["by_asc"]


def test_internal_requires_n_or_limit(capsys):
    code, _, err = run(capsys, "internal", "--alpha", "2,1", "--beta", "2,1")
    assert code == 2


def test_invalid_partition_exits_2(capsys):
    code, _, err = run(capsys, "kostka", "--lambda", "1,2", "--mu", "1,1,1")
    assert code == 2


def test_size_mismatch_exits_2(capsys):
    code, _, err = run(capsys, "kostka", "--lambda", "2,1", "--mu", "1,1")
    assert code == 2
    assert "lambda" in err or "mu" in err or "error" in err


def test_cap_exits_4(capsys, monkeypatch):
    monkeypatch.setenv("RK_CAP", "5")
    code, _, err = run(capsys, "pkostka", "--lambda", "4,4,3,3,2",
                       "--rect", "2^3,2^2,2^2,1,1")
    assert code == 4


def test_unknown_subcommand_exits_2(capsys):
    assert main(["nonsense"]) == 2


def test_verify_fast(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fast", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["passed"] is True
    assert all(r["passed"] for r in doc["results"])
