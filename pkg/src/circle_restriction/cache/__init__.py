"""
Integral cache utilities.

Provides the shared sixfold-integral store, the caching decorator and cache
management helpers.
"""

from circle_restriction.cache.cache import (
    CACHE_DIR,
    CACHE_FILENAME,
    IntegralStore,
    cache_integral,
    get_integral_store,
    set_integral_store,
)
from circle_restriction.cache.cache_manager import (
    cache_stats,
    cleanup_stale_entries,
    clear_cache,
    list_cache_entries,
)

__all__ = [
    # Integral store
    "CACHE_DIR",
    "CACHE_FILENAME",
    "IntegralStore",
    "cache_integral",
    "get_integral_store",
    "set_integral_store",
    # Cache management
    "clear_cache",
    "cache_stats",
    "cleanup_stale_entries",
    "list_cache_entries",
]
