import json
import os

import pytest

from rrcf5 import cache, tables
from rrcf5.cli import main, parse_tau
from rrcf5.pipeline import run_pipeline


@pytest.fixture
def cachedir(tmp_path, monkeypatch):
    monkeypatch.setenv("RR5_CACHE_DIR", str(tmp_path))
    return tmp_path


def test_parse_tau_forms():
    t = parse_tau("3i", 64)
    assert t.real == 0 and abs(t.imag - 3) < 1e-15
    t = parse_tau("0.5+1.25i", 64)
    assert abs(t.real - 0.5) < 1e-15 and abs(t.imag - 1.25) < 1e-15
    t = parse_tau("(9+sqrt -19)/2", 64)
    assert abs(t.real - 4.5) < 1e-15 and abs(t.imag**2 - 19 / 4) < 1e-12
    t = parse_tau("(-1+2 sqrt -5)/3", 64)
    assert abs(t.real + 1 / 3) < 1e-12
    with pytest.raises(ValueError):
        parse_tau("banana", 64)


def test_pipeline_command_and_cache(cachedir, capsys):
    assert main(["pipeline", "-d", "11", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["p"] == list(tables.P_TABLE[11])
    assert os.path.exists(cachedir / "d0011.json")


def test_pipeline_rejects_inadmissible(cachedir, capsys):
    assert main(["pipeline", "-d", "7"]) == 2
    assert main(["pipeline", "-d", "4"]) == 2


def test_eval_r_exit_codes(cachedir, capsys):
    assert main(["eval-r", "--tau=i", "--digits", "20"]) == 0
    out = capsys.readouterr().out
    # r(i) = sqrt(phi sqrt5) - phi = 0.284079...
    assert "0.2840" in out
    assert main(["eval-r", "--tau=-2i"]) == 2
    assert main(["eval-r", "--tau", "nonsense"]) == 2


def test_eval_r_residuals_small(cachedir, capsys):
    assert main(["eval-r", "--tau=i", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert float(out["residual_r5_law"]) < 1e-70
    assert float(out["residual_T_law"]) < 1e-70


def test_classpoly_command(cachedir, capsys):
    assert main(["classpoly", "-d", "24", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["H_coeffs_low_first"] == [14670139392, -4834944, 1]
    assert main(["classpoly", "-d", "6"]) == 2


def test_verify_tables_range(cachedir, capsys):
    assert main(["verify-tables", "--range", "11..19", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [row["d"] for row in out["results"]] == [11, 16, 19]
    assert out["failures"] == []
    assert main(["verify-tables", "--range", "oops"]) == 2


def test_verify_tables_detects_tampering(cachedir, capsys, monkeypatch):
    bad = dict(tables.P_TABLE)
    bad[11] = (2, 1, 1, -1, 1)  # golden data deliberately corrupted
    monkeypatch.setattr(tables, "P_TABLE", bad)
    assert main(["verify-tables", "--range", "11..11", "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["failures"] == [11]


def test_cache_roundtrip_and_atomicity(cachedir):
    res = run_pipeline(11)
    path = cache.save(str(cachedir), res)
    assert path.endswith("d0011.json")
    again = cache.load(str(cachedir), 11)
    assert again == res
    assert cache.roundtrip_ok(res)
    # no stray temp files left behind
    assert all(not name.endswith(".tmp") for name in os.listdir(cachedir))


def test_cache_rejects_unknown_schema(cachedir):
    res = run_pipeline(11)
    entry = cache.result_to_entry(res)
    entry["schema_version"] = 99
    with pytest.raises(cache.CacheError):
        cache.entry_to_result(entry)


def test_cache_missing_returns_none(tmp_path):
    assert cache.load(str(tmp_path), 31) is None


def test_cache_coefficients_are_decimal_strings(cachedir):
    res = run_pipeline(11)
    entry = cache.result_to_entry(res)
    for field in ("H", "R", "S", "Q", "p", "q"):
        assert all(isinstance(s, str) and int(s) is not None
                   for s in entry[field])
