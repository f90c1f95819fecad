"""
Tests for settings resolution and the report models.

Run with: pytest TESTS/circle_restriction/replab/test_settings.py -v
"""

import json
import math

import pytest
from pydantic import ValidationError

from circle_restriction.cache import get_integral_store
from circle_restriction.errors import InvalidInputError
from circle_restriction.model import VerificationRecord
from circle_restriction.oscint import QuadConfig
from circle_restriction.replab import (
    ConjectureReport,
    EvalResult,
    Settings,
    VerificationReport,
    apply_settings,
    get_settings,
    load_settings,
)
from circle_restriction.seqtab import get_sequence_cache


def _record(claim: str, passed: bool, margin: float) -> VerificationRecord:
    return VerificationRecord(
        claim=claim,
        anchor="test",
        inputs={"n": 1},
        values={},
        error_budget=0.0,
        margin=margin,
        passed=passed,
    )


@pytest.fixture
def config_file(tmp_path):
    def write(data, name="settings.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return path

    return write


class TestSettingsModel:
    @pytest.mark.unit
    def test_defaults_mirror_quad_config(self):
        settings = Settings()
        assert settings.quad_config() == QuadConfig()
        assert settings.workers == 1
        assert settings.grid_size is None

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "fields",
        [
            {"grid_size": 24},
            {"grid_size": 8},
            {"radial_cut": 50},
            {"workers": 0},
            {"split_radius": 10},
            {"tail_order": 7},
            {"colour": "blue"},
        ],
    )
    def test_validation(self, fields):
        with pytest.raises(ValidationError):
            Settings(**fields)

    @pytest.mark.unit
    def test_digest_ignores_paths_and_threads(self, tmp_path):
        base = Settings().digest()
        assert Settings(workers=4, cache_path=tmp_path / "c.jsonl").digest() == base
        assert Settings(split_radius=400).digest() != base
        assert Settings(radial_cut=2000).digest() != base


class TestLoadSettings:
    @pytest.mark.unit
    def test_precedence(self, monkeypatch, config_file):
        monkeypatch.setenv("CIRCLE_RESTRICTION_SPLIT_RADIUS", "400")
        monkeypatch.setenv("CIRCLE_RESTRICTION_HEAD_TOL", "1e-11")
        assert load_settings().split_radius == 400

        path = config_file({"split_radius": 300, "workers": 2})
        settings = load_settings(path, {"split_radius": 250, "workers": None})
        assert settings.split_radius == 250
        assert settings.workers == 2
        assert settings.head_tol == 1e-11

    @pytest.mark.unit
    @pytest.mark.parametrize("content", ["{not json", "[1, 2]", '{"unknown_key": 1}', '{"workers": -1}'])
    def test_bad_config_file(self, config_file, content):
        with pytest.raises(InvalidInputError):
            load_settings(config_file(content))

    @pytest.mark.unit
    def test_missing_config_file(self, tmp_path):
        with pytest.raises(InvalidInputError):
            load_settings(tmp_path / "absent.json")

    @pytest.mark.unit
    def test_bad_override(self):
        with pytest.raises(InvalidInputError):
            load_settings(overrides={"split_radius": 1.0})


class TestApplySettings:
    @pytest.mark.unit
    def test_get_before_apply(self):
        with pytest.raises(RuntimeError, match="Settings not configured"):
            get_settings()

    @pytest.mark.unit
    def test_apply(self, fresh_store, tmp_path):
        path = tmp_path / "elsewhere.jsonl"
        settings = apply_settings(Settings(cache_path=path, split_radius=400))
        assert get_settings() is settings
        assert get_integral_store().path == path
        assert get_sequence_cache().cfg == settings.quad_config()

    @pytest.mark.unit
    def test_sequence_cache_kept_when_quadrature_unchanged(self):
        apply_settings(Settings())
        cache = get_sequence_cache()
        apply_settings(Settings(workers=3))
        assert get_sequence_cache() is cache
        apply_settings(Settings(split_radius=300))
        assert get_sequence_cache() is not cache


class TestReports:
    @pytest.mark.unit
    def test_verification_summary(self):
        report = VerificationReport(
            suite="demo",
            records=[_record("a", True, 0.5), _record("b", False, -0.1), _record("b", False, -0.2)],
            config_digest="abc",
            seeds=[0, 1],
        )
        assert not report.passed
        assert report.summary() == {
            "total": 3,
            "passed": 1,
            "failed": 2,
            "min_margin": -0.2,
            "failed_claims": ["b"],
        }

    @pytest.mark.unit
    def test_empty_report(self):
        report = VerificationReport(suite="empty")
        assert report.passed
        assert report.summary()["min_margin"] is None

    @pytest.mark.unit
    def test_json_is_strict(self, tmp_path):
        report = VerificationReport(suite="demo", records=[_record("a", True, math.inf)])
        path = report.write(tmp_path / "out" / "report.json")
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["records"][0]["margin"] is None
        assert data["records"][0]["inputs_digest"] == _record("a", True, 0.0).inputs_digest
        assert data["summary"]["total"] == 1
        assert "Infinity" not in path.read_text(encoding="utf-8")

    @pytest.mark.unit
    def test_conjecture_report_json(self):
        report = ConjectureReport(degree=4, trials=0, seed=7, notes=["no trials requested"])
        data = json.loads(report.to_json())
        assert data["degree"] == 4
        assert data["min_psi"] is None
        assert data["flagged"] is False

    @pytest.mark.unit
    def test_eval_result_str(self):
        result = EvalResult(form="phi", value=2.5, abs_error=1e-9)
        assert str(result) == "phi = 2.5 +- 1.000e-09"
