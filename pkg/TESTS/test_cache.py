"""
Unit tests for the integral cache.
"""

import json

import pytest

from circle_restriction.cache import (
    IntegralStore,
    cache_integral,
    cache_stats,
    cleanup_stale_entries,
    clear_cache,
    get_integral_store,
    list_cache_entries,
)
from circle_restriction.oscint import CertifiedValue, OrderTuple, QuadConfig


@pytest.fixture
def counting_integral():
    calls = []

    @cache_integral
    def fake_integral(t: OrderTuple, cfg: QuadConfig) -> CertifiedValue:
        calls.append(t.orders)
        return CertifiedValue(float(sum(t.orders)) + 0.5, 1e-12)

    return fake_integral, calls


@pytest.mark.unit
def test_cache_hit(fresh_store, counting_integral):
    """Second call with the same tuple is served from the store."""
    fake_integral, calls = counting_integral
    t = OrderTuple.from_orders((2, 2, 4, 0, 0, 0))

    first = fake_integral(t)
    second = fake_integral(t)

    assert first == second
    assert len(calls) == 1
    assert fresh_store.hits == 1


@pytest.mark.unit
def test_permutations_share_one_entry(fresh_store, counting_integral):
    fake_integral, calls = counting_integral
    fake_integral(OrderTuple.from_orders((2, 2, 4, 0, 0, 0)))
    fake_integral(OrderTuple.from_orders((0, 4, 0, 2, 0, -2)))
    assert len(calls) == 1
    assert len(fresh_store) == 1


@pytest.mark.unit
def test_parity_sign_applied_on_hit(fresh_store, counting_integral):
    fake_integral, _ = counting_integral
    plus = fake_integral(OrderTuple.from_orders((1, 1, 0, 0, 0, 0)))
    minus = fake_integral(OrderTuple.from_orders((1, -1, 0, 0, 0, 0)))
    assert minus.value == -plus.value


@pytest.mark.unit
def test_override_cache_recomputes(fresh_store, counting_integral):
    fake_integral, calls = counting_integral
    t = OrderTuple.from_orders((3, 1, 1, 1, 0, 0))
    fake_integral(t)
    fake_integral(t, override_cache=True)
    assert len(calls) == 2


@pytest.mark.unit
def test_config_digest_separates_entries(fresh_store, counting_integral):
    fake_integral, calls = counting_integral
    t = OrderTuple.from_orders((0,) * 6)
    fake_integral(t, QuadConfig())
    fake_integral(t, QuadConfig(split_radius=400.0))
    assert len(calls) == 2


@pytest.mark.unit
def test_jsonl_record_format(fresh_store, counting_integral):
    """Records are persisted with fields in the documented order."""
    fake_integral, _ = counting_integral
    fake_integral(OrderTuple.from_orders((2, 0, 0, 0, 0, 2)))

    lines = fresh_store.path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert list(record) == ["orders", "value", "abs_error", "config", "timestamp"]
    assert record["orders"] == [2, 2, 0, 0, 0, 0]
    assert record["config"] == QuadConfig().digest()


@pytest.mark.unit
def test_store_reloads_from_file(fresh_store, counting_integral):
    fake_integral, _ = counting_integral
    value = fake_integral(OrderTuple.from_orders((4, 2, 2, 0, 0, 0)))

    reloaded = IntegralStore(fresh_store.path)
    assert reloaded.get((4, 2, 2, 0, 0, 0), QuadConfig().digest()) == value


@pytest.mark.unit
def test_malformed_lines_are_skipped(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text('{"orders": [0,0,0,0,0,0], "value": 1.0}\nnot json\n', encoding="utf-8")
    store = IntegralStore(path)
    assert len(store) == 0


@pytest.mark.unit
def test_clear_cache_by_pattern(fresh_store, counting_integral):
    fake_integral, _ = counting_integral
    fake_integral(OrderTuple.from_orders((2, 2, 0, 0, 0, 0)))
    fake_integral(OrderTuple.from_orders((4, 2, 2, 0, 0, 0)))

    assert clear_cache("2,2,*") == 1
    assert len(get_integral_store()) == 1
    assert clear_cache() == 1
    assert len(get_integral_store()) == 0


@pytest.mark.unit
def test_cache_stats_and_cleanup(fresh_store, counting_integral):
    fake_integral, _ = counting_integral
    current = QuadConfig()
    other = QuadConfig(tail_order=3)
    fake_integral(OrderTuple.from_orders((0,) * 6), current)
    fake_integral(OrderTuple.from_orders((0,) * 6), other)

    stats = cache_stats(current.digest())
    assert stats["total_entries"] == 2
    assert stats["stale_entries"] == 1
    assert stats["total_size_bytes"] > 0

    assert cleanup_stale_entries(current.digest()) == 1
    assert cache_stats(current.digest())["stale_entries"] == 0


@pytest.mark.unit
def test_list_cache_entries_limit(fresh_store, counting_integral):
    fake_integral, _ = counting_integral
    for n in (2, 4, 6):
        fake_integral(OrderTuple.from_orders((n, n, 0, 0, 0, 0)))

    entries = list_cache_entries(limit=2)
    assert len(entries) == 2
    assert set(entries[0]) == {"orders", "value", "abs_error", "config", "age_seconds"}
