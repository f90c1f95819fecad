"""
Tests for the command functions, the verification suites and the CLI entry point.

Run with: pytest TESTS/circle_restriction/replab/test_commands.py -v
"""

import json
import math

import pytest

from circle_restriction.cache import get_integral_store
from circle_restriction.oscint import CertifiedValue
from circle_restriction.replab import (
    DEFAULT_SEEDS,
    Settings,
    build_parser,
    cmd_cache,
    cmd_conjecture,
    cmd_convolution,
    cmd_eval,
    cmd_tables,
    cmd_verify,
    main,
    suite_names,
)
from circle_restriction.replab.commands import _sequence_cache_for
from circle_restriction.replab.suites import map_seeds, seed_list
from circle_restriction.seqtab import get_sequence_cache, set_sequence_cache

PHI_OF_CONSTANT = ((2 * math.pi) ** 4 * 0.3368280) ** (1 / 6)


class TestSuites:
    @pytest.mark.unit
    def test_suite_names(self):
        assert set(suite_names()) == {
            "tables",
            "asymptotics",
            "crux",
            "cn",
            "thm7",
            "local-cs",
            "geometry",
            "budget",
            "all",
        }
        assert DEFAULT_SEEDS["thm7"] == 1000
        assert DEFAULT_SEEDS["local-cs"] == 100

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "name,registered",
        [("thm7", "thm7"), ("trilinear", "thm7"), ("local-cs", "local-cs"), ("local", "local-cs")],
    )
    def test_suite_aliases(self, name, registered):
        response = cmd_verify(name, Settings(), seeds=0)
        pytest.assert_command_response(response)
        assert response.result.suite == registered
        assert response.result.records == []

    @pytest.mark.unit
    def test_map_seeds_keeps_order(self):
        seeds = seed_list(5, 6)
        assert seeds == [5, 6, 7, 8, 9, 10]
        serial = map_seeds(lambda s: [s, -s], seeds, workers=1)
        threaded = map_seeds(lambda s: [s, -s], seeds, workers=3)
        assert serial == threaded == [5, -5, 6, -6, 7, -7, 8, -8, 9, -9, 10, -10]

    @pytest.mark.unit
    def test_unknown_suite(self):
        response = cmd_verify("thm99", Settings())
        pytest.assert_command_response(response, expected_success=False)
        assert "unknown suite" in response.error

    @pytest.mark.unit
    def test_negative_seeds(self):
        response = cmd_verify("budget", Settings(), seeds=-1)
        pytest.assert_command_response(response, expected_success=False)

    @pytest.mark.integration
    def test_budget_suite(self, tmp_path):
        out = tmp_path / "budget.json"
        response = cmd_verify("budget", Settings(), seeds=2, seed=0, out=out)
        pytest.assert_command_response(response)

        report = response.result
        assert report.suite == "budget"
        assert report.seeds == [0, 1]
        assert [r.claim for r in report.records] == [
            "bracket_constant",
            "hardy_inequality",
            "spectral_budget",
            "spectral_budget",
        ]
        assert report.passed
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["summary"]["total"] == 4
        assert data["config_digest"] == Settings().digest()

    @pytest.mark.integration
    def test_thm7_suite_deterministic(self):
        first = cmd_verify("thm7", Settings(), seeds=2, seed=3).result
        second = cmd_verify("trilinear", Settings(), seeds=2, seed=3).result
        assert [r.to_dict() for r in first.records] == [r.to_dict() for r in second.records]
        assert first.passed


class TestTables:
    @pytest.mark.unit
    def test_tables_from_given_cache(self, published_cache, tmp_path):
        response = cmd_tables(tmp_path, "csv", Settings(), cache=published_cache)
        pytest.assert_command_response(response)
        assert response.result["config"] == published_cache.cfg.digest()
        assert "2,2,0.00090754," in (tmp_path / "table_two.csv").read_text(encoding="utf-8")

    @pytest.mark.unit
    def test_tables_reuse_cache_with_matching_settings(self, published_cache, tmp_path):
        set_sequence_cache(published_cache)
        response = cmd_tables(tmp_path, "json", Settings())
        pytest.assert_command_response(response)
        data = json.loads((tmp_path / "tables.json").read_text(encoding="utf-8"))
        assert data["table_one"][0]["alpha"] == "0.3368280"

    @pytest.mark.unit
    def test_tables_settings_replace_stale_cache(self, published_cache):
        set_sequence_cache(published_cache)
        settings = Settings(split_radius=100.0)
        cache = _sequence_cache_for(settings)
        assert cache is not published_cache
        assert cache.cfg == settings.quad_config()
        assert get_sequence_cache() is cache
        assert _sequence_cache_for(settings) is cache

    @pytest.mark.unit
    def test_tables_unknown_format(self, published_cache, tmp_path):
        response = cmd_tables(tmp_path, "xlsx", Settings(), cache=published_cache)
        assert not response.is_success
        assert "Writing tables failed" in response.error


class TestConjecture:
    @pytest.mark.unit
    def test_no_trials(self):
        response = cmd_conjecture(degree=4, trials=0)
        pytest.assert_command_response(response)
        report = response.result
        assert report.evaluated == 0
        assert report.min_psi is None
        assert not report.flagged
        assert report.notes == ["no trials requested"]

    @pytest.mark.unit
    @pytest.mark.parametrize("degree,trials", [(3, 1), (14, 1), (-2, 1), (4, -1)])
    def test_bad_arguments(self, degree, trials):
        pytest.assert_command_response(cmd_conjecture(degree, trials), expected_success=False)

    @pytest.mark.integration
    def test_small_exploration(self, tmp_path):
        out = tmp_path / "conjecture.json"
        response = cmd_conjecture(degree=2, trials=2, seed=0, out=out)
        pytest.assert_command_response(response)
        report = response.result
        assert report.evaluated == 2
        assert report.minimizer_seed in (0, 1)
        assert not report.flagged
        assert json.loads(out.read_text(encoding="utf-8"))["evaluated"] == 2


class TestEval:
    @pytest.mark.integration
    def test_phi_of_constant(self, coeff_file):
        response = cmd_eval("phi", coeff_file("0 1.0 0.0\n"))
        pytest.assert_command_response(response)
        assert response.result.value == pytest.approx(PHI_OF_CONSTANT, rel=1e-6)
        assert "phi6" in response.result.extras

    @pytest.mark.integration
    def test_norm6_of_constant(self, coeff_file):
        response = cmd_eval("norm6", coeff_file("0 1\n"))
        assert response.result.value == pytest.approx((2 * math.pi) ** 7 * 0.3368280, rel=1e-6)

    @pytest.mark.unit
    def test_parse_error_reported(self, coeff_file):
        response = cmd_eval("T", coeff_file("0 1\n2 x\n"))
        pytest.assert_command_response(response, expected_success=False)
        assert response.error.startswith("line 2:")

    @pytest.mark.unit
    def test_unknown_form_and_missing_file(self, tmp_path):
        pytest.assert_command_response(cmd_eval("zeta", tmp_path / "f.txt"), expected_success=False)
        pytest.assert_command_response(cmd_eval("phi", tmp_path / "absent.txt"), expected_success=False)

    @pytest.mark.integration
    def test_dual_route_only_for_norm6(self, coeff_file):
        response = cmd_eval("phi", coeff_file("0 1\n"), dual_route=True)
        pytest.assert_command_response(response, expected_success=False)
        assert "norm6" in response.error


class TestConvolution:
    @pytest.mark.unit
    def test_profile_files(self, tmp_path):
        out = tmp_path / "sigma3.csv"
        response = cmd_convolution(0.0, 2.0, 5, out, eps_list=(1e-3,))
        pytest.assert_command_response(response)
        result = response.result
        assert result["samples"] == 4
        assert result["notes"] == ["singular radius skipped"]
        assert out.read_text(encoding="utf-8").splitlines()[0] == "r,sigma3"
        ratio = tmp_path / "sigma3_log_ratio.csv"
        assert result["log_ratio"] == str(ratio)
        assert len(ratio.read_text(encoding="utf-8").splitlines()) == 3

    @pytest.mark.unit
    def test_outside_support(self, tmp_path):
        response = cmd_convolution(0.0, 3.5, 10, tmp_path / "x.csv")
        pytest.assert_command_response(response, expected_success=False)


class TestCache:
    @pytest.mark.unit
    def test_actions(self, fresh_store):
        digest = Settings().quad_config().digest()
        fresh_store.put((0, 0, 0, 0, 0, 0), digest, CertifiedValue(0.3368, 1e-12))
        fresh_store.put((2, 2, 0, 0, 0, 0), "stale", CertifiedValue(0.03, 1e-12))

        stats = cmd_cache("stats").result
        assert stats["total_entries"] == 2
        assert stats["stale_entries"] == 1

        assert len(cmd_cache("list", limit=1).result) == 1
        assert cmd_cache("prune").result == {"removed": 1}
        assert cmd_cache("clear", pattern="0,*").result == {"cleared": 1}
        assert len(get_integral_store()) == 0

    @pytest.mark.unit
    def test_unknown_action(self, fresh_store):
        pytest.assert_command_response(cmd_cache("vacuum"), expected_success=False)


class TestCli:
    @pytest.mark.unit
    def test_parser_defaults(self):
        args = build_parser().parse_args(["convolution"])
        assert (args.r_min, args.r_max, args.samples) == (0.0, 3.0, 301)
        args = build_parser().parse_args(["verify", "crux", "--split-radius", "400"])
        assert args.split_radius == 400.0
        assert args.seeds is None

    @pytest.mark.unit
    def test_help_and_usage_errors(self, capsys):
        assert main(["--help"]) == 0
        assert main(["verify", "thm99"]) == 2
        assert main([]) == 2

    @pytest.mark.unit
    def test_invalid_setting(self, capsys):
        assert main(["cache", "stats", "--no-logfire", "--split-radius", "10"]) == 2
        assert "invalid settings" in capsys.readouterr().err

    @pytest.mark.unit
    @pytest.mark.parametrize("suite,registered", [("thm7", "thm7"), ("local-cs", "local-cs"), ("trilinear", "thm7")])
    def test_verify_suite_spellings(self, suite, registered, capsys):
        assert main(["verify", suite, "--seeds", "0", "--no-logfire"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["suite"] == registered
        assert report["records"] == []

    @pytest.mark.unit
    def test_cache_stats(self, fresh_store, capsys):
        assert main(["cache", "stats", "--no-logfire"]) == 0
        assert json.loads(capsys.readouterr().out)["total_entries"] == 0

    @pytest.mark.unit
    def test_conjecture_without_trials(self, capsys):
        assert main(["conjecture", "--trials", "0", "--no-logfire"]) == 0
        assert json.loads(capsys.readouterr().out)["notes"] == ["no trials requested"]

    @pytest.mark.unit
    def test_bad_coefficient_file(self, coeff_file, capsys):
        path = coeff_file("0 1 2 3\n")
        assert main(["eval", "phi", str(path), "--no-logfire"]) == 2
        assert "line 1" in capsys.readouterr().err
