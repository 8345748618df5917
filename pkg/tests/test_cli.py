import csv
import io
import json

import pytest

import isaclink.report as report_module
from isaclink import comm_snr, lin_to_db
from isaclink.cli import main
from isaclink.config import build_config


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.yaml"
    path.write_text("scenario: {d_c_m: 1000.0, d_r_m: 500.0}\n")
    return str(path)


class TestSnrCommand:
    def test_matches_library(self, capsys, scenario_file):
        code, out, err = run_cli(capsys, "snr", "--preset", "sub6", "--config", scenario_file)
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 1
        system = build_config({}, preset="sub6").system
        expected = float(lin_to_db(comm_snr(system, 1.0, 1000.0)))
        assert abs(float(rows[0]["rho_c_db"]) - expected) < 1e-9
        assert float(rows[0]["delta_lin"]) == 2.0
        assert "rho_c" in err

    def test_needs_distances(self, capsys):
        code, _, err = run_cli(capsys, "snr", "--preset", "sub6")
        assert code == 1
        assert "error:" in err

    def test_quiet_suppresses_summary(self, capsys, scenario_file):
        _, _, err = run_cli(
            capsys, "snr", "--preset", "sub6", "--config", scenario_file, "--quiet"
        )
        assert err == ""


class TestSopCommand:
    def test_ratio_only_line(self, capsys, tmp_path):
        path = tmp_path / "sop.yaml"
        path.write_text("scenario: {delta: 1.0}\n")
        code, out, _ = run_cli(capsys, "sop", "--preset", "sub6", "--config", str(path))
        assert code == 0
        row = parse_csv(out)[0]
        assert float(row["slope"]) == 2.0
        assert row["rho_c_db"] == ""  # no point without distances
        assert abs(float(row["nu_db"]) - (-158.5443154183376)) < 1e-9

    def test_point_lies_on_line(self, capsys, scenario_file):
        code, out, _ = run_cli(capsys, "sop", "--preset", "sub6", "--config", scenario_file)
        assert code == 0
        row = parse_csv(out)[0]
        comm = float(row["rho_c_db"])
        radar = float(row["rho_r_db"])
        assert abs(radar - (2.0 * comm + float(row["intercept_db"]))) < 1e-9


class TestRangeCommand:
    def test_plan_with_detection_targets(self, capsys, tmp_path):
        path = tmp_path / "range.yaml"
        path.write_text(
            "targets:\n"
            "  spectral_eff: 2.0\n"
            "  detection: {p_d: 0.9, p_fa: 1.0e-3, n_samples: 1024}\n"
        )
        code, out, _ = run_cli(capsys, "range", "--preset", "mmwave", "--config", str(path))
        assert code == 0
        row = parse_csv(out)[0]
        assert abs(float(row["radar_snr_db"]) - 10.723057262187389) < 1e-9
        assert abs(float(row["spectral_eff"]) - 2.0) < 1e-9
        assert abs(float(row["d_c_m"]) - float(row["delta_lin"]) * float(row["d_r_m"])) < 1e-6


class TestDetectCommand:
    def test_reports_all_requirement_flavors(self, capsys, tmp_path):
        path = tmp_path / "detect.yaml"
        path.write_text(
            "targets:\n"
            "  comm_snr_db: 0.0\n"
            "  detection: {p_d: 0.9, p_fa: 1.0e-3, n_samples: 1024}\n"
        )
        code, out, _ = run_cli(capsys, "detect", "--preset", "sub6", "--config", str(path))
        assert code == 0
        row = parse_csv(out)[0]
        assert abs(float(row["processing_gain_db"]) - 30.102999566398122) < 1e-9
        assert abs(float(row["required_snr_albersheim_n1_db"]) - 10.723057262187389) < 1e-9
        assert abs(float(row["required_snr_exact_n1_db"]) - 10.75862131) < 1e-4
        assert abs(float(row["required_snr_albersheim_n_db"]) - (-8.239750664913768)) < 1e-9


class TestSweepCommand:
    def test_writes_file_deterministically(self, capsys, tmp_path):
        config = tmp_path / "sweep.yaml"
        config.write_text(
            "preset: sub6\n"
            "targets: {spectral_eff: 2.0, radar_snr_db: 10.8}\n"
            "sweep: {parameter: spectral_eff, start: 1.0, stop: 14.0, points: 27}\n"
        )
        outputs = []
        for name in ("a.csv", "b.csv"):
            out_path = tmp_path / name
            code, _, err = run_cli(
                capsys, "sweep", "--config", str(config), "--output", str(out_path)
            )
            assert code == 0
            assert "27 rows" in err
            outputs.append(out_path.read_bytes())
        assert outputs[0] == outputs[1]

    def test_json_format(self, capsys, tmp_path):
        config = tmp_path / "sweep.yaml"
        config.write_text(
            "preset: sub6\n"
            "scenario: {d_c_m: 1000.0, d_r_m: 500.0}\n"
            "sweep: {parameter: d_c_m, start: 100.0, stop: 1000.0, points: 3}\n"
        )
        code, out, _ = run_cli(capsys, "sweep", "--config", str(config), "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 3
        assert rows[0]["axis_value"] == 100.0


class TestReproduceCommand:
    @pytest.mark.parametrize("artifact", ["table3", "table4", "fig4", "fig5"])
    def test_artifacts_pass(self, capsys, artifact):
        code, out, err = run_cli(capsys, "reproduce", artifact)
        assert code == 0
        assert "0 FAIL" in err
        rows = parse_csv(out)
        assert all(row["status"] in ("PASS", "SKIP") for row in rows)

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        broken = dict(report_module._TABLE3_REF)
        broken[(30.0, "sub6")] = 9999.0
        monkeypatch.setattr(report_module, "_TABLE3_REF", broken)
        code, _, err = run_cli(capsys, "reproduce", "table3")
        assert code == 3
        assert "1 FAIL" in err


class TestErrorPaths:
    def test_validation_error_exits_1(self, capsys, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("system: {f_hz: 1.0e8, b_hz: 2.4e9}\n")
        code, _, err = run_cli(capsys, "snr", "--config", str(path))
        assert code == 1
        assert "error:" in err

    def test_malformed_document_exits_2(self, capsys, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("system: {f_hz: [unclosed\n")
        code, _, err = run_cli(capsys, "snr", "--config", str(path))
        assert code == 2

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "snr", "--config", str(tmp_path / "absent.yaml"))
        assert code == 2

    def test_both_families_exit_1(self, capsys, tmp_path):
        path = tmp_path / "both.yaml"
        path.write_text(
            "preset: sub6\n"
            "scenario: {d_c_m: 1.0, d_r_m: 1.0}\n"
            "targets: {spectral_eff: 2.0, radar_snr_db: 10.8}\n"
        )
        code, _, err = run_cli(capsys, "snr", "--config", str(path))
        assert code == 1
        assert "exactly one" in err
