import json

import pytest

from proth3 import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_prime_text(capsys):
    code, out, _ = run(capsys, "classify", "--p", "7", "--n", "2")
    assert code == 0
    assert out.strip() == "prime (non-divisor of GF(3,1))"


def test_classify_composite_text(capsys):
    code, out, _ = run(capsys, "classify", "--p", "5", "--n", "2")
    assert code == 1
    assert out.strip() == "composite (divisible by 3)"


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, "classify", "--p", "5", "--n", "3", "--json")
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["p", "n", "R", "verdict", "evidence", "witness", "elapsed_ms"]
    assert obj["p"] == "5" and obj["n"] == 3 and obj["R"] == "41"
    assert obj["verdict"] == "prime" and obj["evidence"] == "proth_bound"
    assert obj["witness"] is None and isinstance(obj["elapsed_ms"], int)


def test_classify_contract_errors(capsys):
    code, _, err = run(capsys, "classify", "--p", "9", "--n", "2")
    assert code == 3 and "prime" in err
    code, _, err = run(capsys, "classify", "--p", "7", "--n", "1")
    assert code == 3


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["classify", "--p", "7"])  # missing --n
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 3


def test_exit_code_mapping_covers_primover():
    assert cli._EXIT_BY_OUTCOME == {"prime": 0, "composite": 1, "primover": 2}


def test_gf3_text(capsys):
    code, out, _ = run(capsys, "gf3", "--n", "3")
    assert code == 0
    assert out.strip() == "6562 = 2 · 17 · 193; 17 = FormA(k=1); 193 = FormB(m=2)"
    code, out, _ = run(capsys, "gf3", "--n", "1")
    assert out.strip() == "10 = 2 · 5; 5 = FormA(k=1)"


def test_gf3_json(capsys):
    code, out, _ = run(capsys, "gf3", "--n", "3", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["gf"] == "6562"
    assert obj["factors"] == [
        {"prime": "2", "multiplicity": 1},
        {"prime": "17", "multiplicity": 1},
        {"prime": "193", "multiplicity": 1},
    ]
    assert obj["forms"] == [
        {"factor": "17", "kind": "A", "witness": 1},
        {"factor": "193", "kind": "B", "witness": 2},
    ]
    assert obj["complete"] is True


def test_gf3_above_cap(capsys):
    code, _, err = run(capsys, "gf3", "--n", "99")
    assert code == 3 and "must be in" in err


def test_search_writes_jsonl(tmp_path, capsys):
    out_path = tmp_path / "r.jsonl"
    code, out, _ = run(
        capsys,
        "search", "--p-min", "3", "--p-max", "20", "--n-max", "10",
        "--out", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 7  # odd primes 3..19
    objs = [json.loads(line) for line in lines]
    assert [o["p"] for o in objs] == ["3", "5", "7", "11", "13", "17", "19"]
    seven = next(o for o in objs if o["p"] == "7")
    assert seven["min_n"] == 2 and seven["R_at_min"] == "29"
    assert seven["verdicts"][0] == {
        "n": 1, "R": "15", "verdict": "composite",
        "evidence": "oracle_exact", "witness": None,
    }
    # idempotent rewrite
    first = out_path.read_bytes()
    run(capsys, "search", "--p-min", "3", "--p-max", "20", "--n-max", "10",
        "--out", str(out_path))
    assert out_path.read_bytes() == first


def test_search_stdout_default(capsys):
    code, out, _ = run(capsys, "search", "--p-min", "5", "--p-max", "5", "--n-max", "1")
    assert code == 0
    obj = json.loads(out.strip())
    assert obj["min_n"] == 1 and obj["R_at_min"] == "11"


def test_search_bad_args(tmp_path, capsys):
    code, _, err = run(capsys, "search", "--p-min", "3", "--p-max", "20", "--n-max", "0")
    assert code == 3
    code, _, err = run(
        capsys,
        "search", "--p-min", "3", "--p-max", "20", "--n-max", "5",
        "--out", str(tmp_path),  # a directory is not writable as a file
    )
    assert code == 3


def test_verify_clean_range(capsys):
    code, out, _ = run(capsys, "verify", "--p-max", "60", "--n-max", "8")
    assert code == 0
    assert "discrepancies: 0" in out
    assert "candidates tested:" in out


def test_workers_env_fallback(monkeypatch):
    monkeypatch.delenv("THREADS", raising=False)
    assert cli._workers(None) == 1
    assert cli._workers(5) == 5
    monkeypatch.setenv("THREADS", "4")
    assert cli._workers(None) == 4
    assert cli._workers(2) == 2
    monkeypatch.setenv("THREADS", "zero")
    assert cli._workers(None) == 1
