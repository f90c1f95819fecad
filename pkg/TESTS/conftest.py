"""Pytest configuration and shared fixtures.

This file provides:
- Environment setup (load_dotenv, no Logfire)
- A per-session integral cache in a temporary directory
- Common test functions
- The assert_command_response helper
"""

import os

import pytest
from dotenv import load_dotenv

from circle_restriction.cache import IntegralStore, set_integral_store
from circle_restriction.circfun import TrigPoly
from circle_restriction.oscint import CertifiedValue
from circle_restriction.replab.settings import reset_settings
from circle_restriction.seqtab import (
    TABLE_ONE_REFERENCE,
    TABLE_TWO_REFERENCE,
    SequenceCache,
    get_sequence_cache,
    set_sequence_cache,
)

# Load environment variables for tests
load_dotenv()
os.environ.setdefault("ENABLE_LOGFIRE", "false")


@pytest.fixture(scope="session", autouse=True)
def integral_store(tmp_path_factory):
    """Integrals computed by any test are shared for the whole session."""
    store = IntegralStore(tmp_path_factory.mktemp("cache") / "sixfold_integrals.jsonl")
    previous = set_integral_store(store)
    yield store
    set_integral_store(previous)


@pytest.fixture
def fresh_store(tmp_path):
    """A private integral store for one test; the session store is restored afterwards."""
    store = IntegralStore(tmp_path / "integrals.jsonl")
    previous = set_integral_store(store)
    yield store
    set_integral_store(previous)


@pytest.fixture(autouse=True)
def clean_settings():
    """No active settings at test start; the shared sequence cache survives apply_settings."""
    cache = get_sequence_cache()
    reset_settings()
    yield
    reset_settings()
    set_sequence_cache(cache)


@pytest.fixture(scope="session")
def sequence_cache():
    """Shared sequence cache with the default quadrature settings."""
    return get_sequence_cache()


@pytest.fixture
def published_cache():
    """A sequence cache pre-filled with the published table values; nothing is integrated."""
    cache = SequenceCache()
    for n, (a, at, b) in TABLE_ONE_REFERENCE.items():
        cache.alpha[n] = CertifiedValue(a, 1e-10)
        cache.alpha_tilde[n] = CertifiedValue(at, 1e-10)
        cache.beta[n] = CertifiedValue(b, 1e-10)
    for key, (g, gt, d) in TABLE_TWO_REFERENCE.items():
        cache.gamma[key] = CertifiedValue(g, 1e-11)
        cache.gamma_tilde[key] = CertifiedValue(gt, 1e-11)
        cache.delta[key] = CertifiedValue(d, 1e-11)
    return cache


@pytest.fixture
def one():
    return TrigPoly.constant(1.0)


@pytest.fixture
def coeff_file(tmp_path):
    """Write a coefficient file from text and return its path."""

    def write(text: str, name: str = "f.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


# Utility functions for tests
def assert_command_response(response, expected_success=True):
    """
    Assert that a CommandResponse has expected structure.

    Args:
        response: CommandResponse object to check
        expected_success: Expected value of is_success
    """
    assert hasattr(response, "is_success"), "Response should have is_success attribute"
    assert hasattr(response, "result"), "Response should have result attribute"
    assert hasattr(response, "error"), "Response should have error attribute"
    assert response.is_success == expected_success, \
        f"Expected is_success={expected_success}, got {response.is_success}. Error: {response.error}"

    if expected_success:
        assert response.result is not None, "Successful response should have result"
        assert response.error is None, "Successful response should not have error"
    else:
        assert response.error is not None, "Failed response should have error"


# Make utility functions available to all tests
pytest.assert_command_response = assert_command_response
