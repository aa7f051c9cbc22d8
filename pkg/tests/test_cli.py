"""CLI contract tests: output schemas, exit codes, determinism, caps."""

import csv
import io
import json
import subprocess
import sys

import pytest

from smith_spectra.cli import main


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def parse_csv(text: str) -> list[dict]:
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def parse_json(text: str) -> dict:
    return json.loads(text)


class TestBoundsCommand:
    def test_gcd_reference_row(self, capsys):
        code, out = run_cli(capsys, "bounds", "--family", "gcd", "--n", "20",
                            "--with-actual", "--format", "json")
        assert code == 0
        row = parse_json(out)["rows"][0]
        assert row["method"] == "improved_gcd"
        assert row["min_lower"] == pytest.approx(-40.2114, abs=5e-4)
        assert row["min_upper"] == pytest.approx(7.8123, abs=5e-4)
        assert row["max_lower"] == pytest.approx(13.1876, abs=5e-4)
        assert row["max_upper"] == pytest.approx(61.2114, abs=5e-4)
        assert row["min_lower"] < row["actual_min"] < row["min_upper"]
        assert row["max_lower"] < row["actual_max"] < row["max_upper"]

    def test_lcm_n2_is_flagged_ws_fallback(self, capsys):
        code, out = run_cli(capsys, "bounds", "--family", "lcm", "--n", "2",
                            "--format", "csv")
        assert code == 0
        (row,) = parse_csv(out)
        assert row["method"] == "ws"
        assert row["flag"] == "ws_equality"

    def test_range_rows_bracket_actual(self, capsys):
        code, out = run_cli(capsys, "bounds", "--family", "gcd", "--n", "3..10",
                            "--with-actual", "--format", "csv")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 8
        for row in rows:
            assert float(row["min_lower"]) < float(row["actual_min"]) < float(row["min_upper"])
            assert float(row["max_lower"]) < float(row["actual_max"]) < float(row["max_upper"])

    def test_explicit_set_uses_ws(self, capsys):
        code, out = run_cli(capsys, "bounds", "--family", "gcd", "--set", "4,6,10",
                            "--format", "json")
        assert code == 0
        assert parse_json(out)["rows"][0]["method"] == "ws"

    def test_power_family_from_traces(self, capsys):
        code, out = run_cli(capsys, "bounds", "--family", "power-gcd", "--n", "6",
                            "--epsilon", "2", "--with-actual", "--format", "json")
        assert code == 0
        row = parse_json(out)["rows"][0]
        assert row["min_lower"] <= row["actual_min"] + 1e-9
        assert row["actual_max"] <= row["max_upper"] + 1e-9

    def test_missing_n_is_usage_error(self, capsys):
        code, _ = run_cli(capsys, "bounds", "--family", "gcd")
        assert code == 2

    def test_unknown_family_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["bounds", "--family", "nope", "--n", "3"])
        assert err.value.code == 2


class TestSpectrumCommand:
    def test_exact_lcm_pair(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--family", "lcm", "--set", "1,2",
                            "--format", "json")
        assert code == 0
        values = [row["eigenvalue"] for row in parse_json(out)["rows"]]
        assert values[0] == pytest.approx((3 - 17**0.5) / 2, abs=1e-10)
        assert values[1] == pytest.approx((3 + 17**0.5) / 2, abs=1e-10)

    def test_gcd_three(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--family", "gcd", "--n", "3",
                            "--format", "json")
        assert code == 0
        values = [row["eigenvalue"] for row in parse_json(out)["rows"]]
        assert values[0] == pytest.approx(0.324, abs=5e-3)
        assert values[1] == pytest.approx(1.460, abs=5e-3)
        assert len(values) == 3

    def test_trivial_single_element(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--family", "gcd", "--n", "1",
                            "--format", "json")
        assert code == 0
        payload = parse_json(out)
        assert [row["eigenvalue"] for row in payload["rows"]] == [1.0]

    def test_summary_metadata_is_exact(self, capsys):
        _, out = run_cli(capsys, "spectrum", "--family", "lcm", "--n", "2",
                         "--format", "json")
        meta = parse_json(out)["meta"]
        assert meta["m"] == "3/2"
        assert meta["s_squared"] == "17/4"


class TestVerifyCommand:
    def test_exact_only_passes(self, capsys):
        code, out = run_cli(capsys, "verify", "--n-max", "60", "--exact-only",
                            "--format", "json")
        assert code == 0
        payload = parse_json(out)
        assert payload["meta"]["failures"] == 0
        assert all(row["ok"] for row in payload["rows"])

    def test_full_suite_reports_known_lcm_violation(self, capsys):
        # the +32 cross term is invalid at order 3; verify must report it
        code, out = run_cli(capsys, "verify", "--n-max", "10", "--format", "json")
        assert code == 1
        bad = [row for row in parse_json(out)["rows"] if not row["ok"]]
        assert [(row["check"], row["n"]) for row in bad] == [("improved_lcm_bracket", 3)]

    def test_n_max_two_confirms_ws_equality(self, capsys):
        code, out = run_cli(capsys, "verify", "--n-max", "2", "--format", "json")
        assert code == 0
        rows = parse_json(out)["rows"]
        names = {row["check"] for row in rows}
        assert "ws_equality_at_2[gcd]" in names
        assert "ws_equality_at_2[lcm]" in names
        # the improved brackets need n >= 3, so at n = 2 they are flagged skips
        skips = [row for row in rows if row["check"].startswith("improved_")]
        assert skips and all(row["ok"] and "skipped" in row["observed"] for row in skips)


class TestInertiaSweep:
    def test_small_orders(self, capsys):
        code, out = run_cli(capsys, "inertia-sweep", "--n", "2..8", "--format", "json")
        assert code == 0
        rows = parse_json(out)["rows"]
        assert rows[0] == {"n": 2, "family": "lcm", "positive": 1, "negative": 1,
                           "zero": 0, "pos_minus_neg": 0}
        four = next(row for row in rows if row["n"] == 4)
        assert (four["positive"], four["negative"], four["zero"]) == (1, 3, 0)

    def test_sign_counts_positive_through_fifty(self, capsys):
        code, out = run_cli(capsys, "inertia-sweep", "--n", "3..50", "--format", "json")
        assert code == 0
        for row in parse_json(out)["rows"]:
            assert row["positive"] >= 1
            assert row["negative"] >= 1

    def test_gcd_family_all_positive(self, capsys):
        code, out = run_cli(capsys, "inertia-sweep", "--family", "gcd", "--n", "5",
                            "--format", "json")
        assert code == 0
        (row,) = parse_json(out)["rows"]
        assert (row["positive"], row["negative"], row["zero"]) == (5, 0, 0)


class TestCompareCommand:
    def test_reference_endpoints(self, capsys):
        code, out = run_cli(capsys, "compare", "--n", "20", "--format", "json")
        assert code == 0
        row = parse_json(out)["rows"][0]
        assert row["mh_lower"] == pytest.approx(-595.8214, abs=1e-3)
        assert row["mh_upper"] == pytest.approx(597.8214, abs=1e-3)
        assert row["min_lower"] == pytest.approx(-40.2114, abs=5e-4)
        assert row["min_upper"] == pytest.approx(7.8123, abs=5e-4)

    def test_degenerate_single_order(self, capsys):
        code, out = run_cli(capsys, "compare", "--n", "1", "--format", "json")
        assert code == 0
        row = parse_json(out)["rows"][0]
        assert row["actual_min"] == row["actual_max"] == 1.0

    def test_bracket_inside_interval_over_range(self, capsys):
        code, out = run_cli(capsys, "compare", "--n", "5..50", "--format", "json")
        assert code == 0
        for row in parse_json(out)["rows"]:
            assert row["mh_lower"] < row["min_lower"]
            assert row["max_upper"] < row["mh_upper"]

    def test_rejects_other_families(self, capsys):
        code, _ = run_cli(capsys, "compare", "--family", "lcm", "--n", "4")
        assert code == 2


class TestReproducePaper:
    def test_all_golden_numbers_pass(self, capsys):
        code, out = run_cli(capsys, "reproduce-paper", "--format", "json")
        assert code == 0
        payload = parse_json(out)
        assert payload["meta"]["failures"] == 0
        assert len(payload["rows"]) == 12


class TestExportMatrix:
    def test_integer_entries(self, capsys):
        code, out = run_cli(capsys, "export-matrix", "--family", "lcm", "--n", "3")
        assert code == 0
        assert out.splitlines() == ["1,2,3", "2,2,6", "3,6,3"]

    def test_write_to_file(self, capsys, tmp_path):
        target = tmp_path / "m.csv"
        code, _ = run_cli(capsys, "export-matrix", "--family", "gcd", "--n", "2",
                          "--out", str(target))
        assert code == 0
        assert target.read_text().splitlines() == ["1,1", "1,2"]


class TestOutputContracts:
    def test_determinism_byte_identical(self, capsys):
        _, first = run_cli(capsys, "bounds", "--family", "gcd", "--n", "3..12",
                           "--with-actual", "--format", "csv")
        _, second = run_cli(capsys, "bounds", "--family", "gcd", "--n", "3..12",
                            "--with-actual", "--format", "csv")
        assert first == second

    def test_json_round_trip_is_exact(self, capsys):
        _, out = run_cli(capsys, "bounds", "--family", "lcm", "--n", "7",
                         "--with-actual", "--format", "json")
        assert parse_json(out) == parse_json(json.dumps(parse_json(out)))

    def test_csv_matches_json_to_printed_precision(self, capsys):
        _, as_csv = run_cli(capsys, "bounds", "--family", "gcd", "--n", "9",
                            "--format", "csv")
        _, as_json = run_cli(capsys, "bounds", "--family", "gcd", "--n", "9",
                             "--format", "json")
        csv_row = parse_csv(as_csv)[0]
        json_row = parse_json(as_json)["rows"][0]
        for key in ("m", "s", "min_lower", "min_upper", "max_lower", "max_upper"):
            assert float(csv_row[key]) == pytest.approx(json_row[key], rel=1e-9)

    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        code, printed = run_cli(capsys, "bounds", "--family", "gcd", "--n", "4",
                                "--format", "csv", "--out", str(target))
        assert code == 0
        assert printed == ""
        assert "improved_gcd" in target.read_text()


class TestCaps:
    def test_solve_cap_enforced(self, capsys):
        code, _ = run_cli(capsys, "spectrum", "--family", "gcd", "--n", "501")
        assert code == 2

    def test_bounds_only_cap_is_larger(self, capsys):
        code, _ = run_cli(capsys, "bounds", "--family", "gcd", "--n", "600")
        assert code == 0

    def test_allow_large_overrides(self, capsys):
        code, _ = run_cli(capsys, "bounds", "--family", "gcd", "--n", "2200",
                          "--allow-large", "--format", "csv")
        assert code == 0

    def test_env_var_overrides(self, capsys, monkeypatch):
        monkeypatch.setenv("SMITH_SPECTRA_MAX_N", "2500")
        code, _ = run_cli(capsys, "bounds", "--family", "gcd", "--n", "2200",
                          "--format", "csv")
        assert code == 0
        monkeypatch.setenv("SMITH_SPECTRA_MAX_N", "10")
        code, _ = run_cli(capsys, "bounds", "--family", "gcd", "--n", "20")
        assert code == 2


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "smith_spectra.cli", "--version"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "smith-spectra" in proc.stdout
