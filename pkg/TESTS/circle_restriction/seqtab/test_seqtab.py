"""
Tests for the named sequences, their companion bounds and the published tables.

Run with: pytest TESTS/circle_restriction/seqtab/test_seqtab.py -v
"""

import csv
import io
import json

import pytest

from circle_restriction.errors import InvalidInputError
from circle_restriction.oscint import CertifiedValue
from circle_restriction.seqtab import (
    TABLE_ONE_REFERENCE,
    TABLE_TWO_REFERENCE,
    alpha,
    alpha_asymptotic_check,
    alpha_one_identity_check,
    beta,
    beta_asymptotic_check,
    beta_corollary_check,
    delta,
    delta_corollary_check,
    gamma,
    gamma_asymptotic_check,
    round_half_even,
    sequence_invariants_check,
    table_reproduction_check,
    write_tables,
)

TABLE_ONE_CSV = """\
n,alpha,alpha_error,alpha_tilde,alpha_tilde_error,beta,beta_error
0,0.3368280,1.0e-10,0.0673656,1.0e-10,-0.1347312,1.0e-10
1,0.0673656,1.0e-10,0.0423752,1.0e-10,0.0597600,1.0e-10
2,0.0369428,1.0e-10,0.0138533,1.0e-10,0.0046171,1.0e-10
3,0.0249883,1.0e-10,0.0088143,1.0e-10,0.0014546,1.0e-10
4,0.0188523,1.0e-10,0.0064847,1.0e-10,0.0006018,1.0e-10
5,0.0151231,1.0e-10,0.0051433,1.0e-10,0.0003068,1.0e-10
6,0.0126216,1.0e-10,0.0042662,1.0e-10,0.0001770,1.0e-10
7,0.0108283,1.0e-10,0.0036466,1.0e-10,0.0001115,1.0e-10
8,0.0094804,1.0e-10,0.0031850,1.0e-10,0.0000746,1.0e-10
9,0.0084305,1.0e-10,0.0028276,1.0e-10,0.0000523,1.0e-10
10,0.0075896,1.0e-10,0.0025426,1.0e-10,0.0000382,1.0e-10
"""

TABLE_TWO_CSV = """\
n,m,gamma,gamma_error,gamma_tilde,gamma_tilde_error,delta,delta_error
2,2,0.00090754,1.0e-11,0.00061039,1.0e-11,0.00092363,1.0e-11
4,2,0.00019186,1.0e-11,0.00012012,1.0e-11,0.00016850,1.0e-11
6,2,0.00006958,1.0e-11,0.00004264,1.0e-11,0.00005834,1.0e-11
4,4,0.00002195,1.0e-11,0.00001272,1.0e-11,0.00001621,1.0e-11
6,4,0.00000498,1.0e-11,0.00000281,1.0e-11,0.00000345,1.0e-11
8,4,0.00000160,1.0e-11,0.00000089,1.0e-11,0.00000107,1.0e-11
10,4,0.00000064,1.0e-11,0.00000035,1.0e-11,0.00000041,1.0e-11
"""


class TestRounding:
    @pytest.mark.unit
    @pytest.mark.parametrize(
        "x,decimals,expected",
        [
            (0.125, 2, "0.12"),
            (0.375, 2, "0.38"),
            (0.3368280, 7, "0.3368280"),
            (0.00000041, 8, "0.00000041"),
            (-1e-10, 7, "0.0000000"),
            (-0.1347312, 7, "-0.1347312"),
        ],
    )
    def test_round_half_even(self, x, decimals, expected):
        assert round_half_even(x, decimals) == expected


class TestSequences:
    @pytest.mark.integration
    def test_alpha_zero(self, sequence_cache):
        value = alpha(0, sequence_cache)
        assert abs(value.value - 0.3368280) <= 1e-7 + value.abs_error

    @pytest.mark.integration
    def test_beta_zero_is_negative(self, sequence_cache):
        value = beta(0, sequence_cache)
        assert abs(value.value - (-0.1347312)) <= 2e-6
        assert value.upper < 0

    @pytest.mark.integration
    def test_delta_two_two(self, sequence_cache):
        value = delta(2, 2, sequence_cache)
        assert abs(value.value - 0.00092363) <= 2e-7

    @pytest.mark.integration
    def test_negative_index_and_pair_symmetry(self, sequence_cache):
        assert alpha(-3, sequence_cache) is alpha(3, sequence_cache)
        assert gamma(2, 4, sequence_cache) is gamma(4, 2, sequence_cache)

    @pytest.mark.unit
    def test_cache_entries(self, published_cache):
        assert len(published_cache) == 3 * len(TABLE_ONE_REFERENCE) + 3 * len(TABLE_TWO_REFERENCE)
        assert published_cache.entries("alpha")[0].value == 0.3368280
        with pytest.raises(KeyError):
            published_cache.entries("zeta")


class TestCompanionBounds:
    @pytest.mark.unit
    def test_ranges_enforced(self, published_cache):
        with pytest.raises(InvalidInputError):
            alpha_asymptotic_check(6, published_cache)
        with pytest.raises(InvalidInputError):
            beta_asymptotic_check(10, published_cache)
        with pytest.raises(InvalidInputError):
            beta_corollary_check(3, published_cache)
        with pytest.raises(InvalidInputError):
            gamma_asymptotic_check(6, 8, published_cache)
        with pytest.raises(InvalidInputError):
            delta_corollary_check(4, 3, published_cache)

    @pytest.mark.unit
    def test_beta_corollary_tightest_case(self, published_cache):
        record = beta_corollary_check(2, published_cache)
        assert record.passed
        assert "tightest" in record.notes
        assert record.values["relative_deviation"] < 0.03

    @pytest.mark.unit
    def test_delta_cases(self, published_cache):
        first = delta_corollary_check(2, 2, published_cache)
        assert first.passed
        assert "case (i)" in first.notes
        second = delta_corollary_check(4, 4, published_cache)
        assert "case (ii)" in second.notes

    @pytest.mark.integration
    def test_alpha_asymptotic_at_seven(self, sequence_cache):
        record = alpha_asymptotic_check(7, sequence_cache)
        assert record.passed, record.values
        assert set(record.values) == {"alpha", "alpha_tilde"}

    @pytest.mark.integration
    def test_gamma_asymptotic_m_two(self, sequence_cache):
        record = gamma_asymptotic_check(6, 2, sequence_cache)
        assert record.passed, record.values
        assert "m=2" in record.notes

    @pytest.mark.integration
    def test_alpha_one_identity(self, sequence_cache):
        record = alpha_one_identity_check(sequence_cache)
        assert record.passed
        assert record.values["five_alpha_1"] == pytest.approx(record.values["alpha_0"], abs=1e-8)

    @pytest.mark.unit
    def test_sequence_invariants_on_published_values(self, published_cache):
        record = sequence_invariants_check(n_max=10, pair_max=4, cache=published_cache)
        assert record.passed, record.values["failures"]
        assert record.margin > 0

    @pytest.mark.unit
    def test_sequence_invariants_detect_ordering_violation(self, published_cache):
        published_cache.alpha[5] = CertifiedValue(0.0200000, 1e-10)
        record = sequence_invariants_check(n_max=6, pair_max=2, cache=published_cache)
        assert not record.passed
        assert record.values["failures"] == ["alpha_5 < alpha_4"]

    @pytest.mark.slow
    def test_sequence_invariants(self, sequence_cache):
        record = sequence_invariants_check(n_max=4, pair_max=4, cache=sequence_cache)
        assert record.passed, record.values["failures"]


class TestTables:
    @pytest.mark.unit
    def test_reproduction_of_published_values(self, published_cache):
        record = table_reproduction_check(published_cache)
        assert record.passed
        assert record.inputs["entries"] == 3 * (len(TABLE_ONE_REFERENCE) + len(TABLE_TWO_REFERENCE))

    @pytest.mark.unit
    def test_reproduction_detects_deviation(self, published_cache):
        published_cache.alpha[3] = CertifiedValue(0.0249893, 1e-10)
        record = table_reproduction_check(published_cache)
        assert not record.passed
        assert record.values["failures"] == ["alpha[3]"]
        assert record.margin < 0

    @pytest.mark.unit
    @pytest.mark.parametrize("offset,passed", [(1.4e-6, True), (1.6e-6, False)])
    def test_beta_tolerance(self, published_cache, offset, passed):
        published_cache.beta[2] = CertifiedValue(0.0046171 + offset, 1e-10)
        record = table_reproduction_check(published_cache)
        assert record.passed is passed
        assert record.values["failures"] == ([] if passed else ["beta[2]"])

    @pytest.mark.unit
    def test_write_csv_with_error_columns(self, published_cache, tmp_path):
        paths = write_tables(tmp_path, "csv", published_cache)
        assert [p.name for p in paths] == ["table_one.csv", "table_two.csv"]

        with open(paths[0], encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        assert list(rows[0]) == ["n", "alpha", "alpha_error", "alpha_tilde", "alpha_tilde_error", "beta", "beta_error"]
        assert rows[0]["alpha"] == "0.3368280"
        assert rows[0]["beta"] == "-0.1347312"
        assert rows[0]["alpha_error"] == "1.0e-10"

        with open(paths[1], encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        assert (rows[0]["n"], rows[0]["m"], rows[0]["gamma"]) == ("2", "2", "0.00090754")
        assert rows[-1]["delta"] == "0.00000041"

    @pytest.mark.unit
    def test_table_one_csv_golden(self, published_cache, tmp_path):
        write_tables(tmp_path, "csv", published_cache)
        assert (tmp_path / "table_one.csv").read_text(encoding="utf-8") == TABLE_ONE_CSV

    @pytest.mark.unit
    def test_table_two_csv_golden(self, published_cache, tmp_path):
        write_tables(tmp_path, "csv", published_cache)
        assert (tmp_path / "table_two.csv").read_text(encoding="utf-8") == TABLE_TWO_CSV

    @pytest.mark.unit
    def test_json_golden(self, published_cache, tmp_path):
        (path,) = write_tables(tmp_path, "json", published_cache)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["table_two"] == list(csv.DictReader(io.StringIO(TABLE_TWO_CSV)))
        assert data["table_one"] == list(csv.DictReader(io.StringIO(TABLE_ONE_CSV)))
        assert path.read_text(encoding="utf-8").startswith('{\n  "table_one": [\n    {\n      "n": "0",\n      "alpha": "0.3368280",\n')

    @pytest.mark.unit
    def test_write_json(self, published_cache, tmp_path):
        (path,) = write_tables(tmp_path / "out", "json", published_cache)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert set(data) == {"table_one", "table_two"}
        assert len(data["table_one"]) == 11
        assert data["table_two"][0]["delta"] == "0.00092363"

    @pytest.mark.unit
    def test_unknown_format(self, published_cache, tmp_path):
        with pytest.raises(InvalidInputError):
            write_tables(tmp_path, "xlsx", published_cache)

    @pytest.mark.slow
    def test_tables_reproduced_by_quadrature(self, sequence_cache):
        record = table_reproduction_check(sequence_cache)
        assert record.passed, record.values["failures"]
