"""Test suite for circle-restriction."""
