"""
Cache management utilities.

Inspect, clear and prune the shared integral store.
"""

import fnmatch
import time
from typing import Any, Dict, List, Optional

from .cache import get_integral_store


def _orders_key(orders) -> str:
    return ",".join(str(n) for n in orders)


def clear_cache(pattern: Optional[str] = None) -> int:
    """
    Clear cache entries.

    Args:
        pattern: Optional glob matched against the comma-joined canonical
                 orders (e.g. ``"2,2,*"``). If None, clears everything.

    Returns:
        Number of entries cleared
    """
    store = get_integral_store()
    keys = [
        key
        for key, _, _ in store.items()
        if pattern is None or fnmatch.fnmatch(_orders_key(key[0]), pattern)
    ]
    return store.remove(keys)


def cache_stats(current_digest: Optional[str] = None) -> Dict[str, Any]:
    """
    Get cache statistics.

    Returns:
        Dictionary with:
        - total_entries: Number of cached integrals
        - total_size_bytes: Size of the backing file (0 if memory only)
        - configs: Entry count per config digest
        - stale_entries: Entries whose digest differs from ``current_digest``
        - hits / misses: Lookups served / missed in this process
    """
    store = get_integral_store()
    configs: Dict[str, int] = {}
    for (_, digest), _, _ in store.items():
        configs[digest] = configs.get(digest, 0) + 1

    size = store.path.stat().st_size if store.path is not None and store.path.exists() else 0
    stale = 0
    if current_digest is not None:
        stale = sum(count for digest, count in configs.items() if digest != current_digest)

    return {
        "total_entries": len(store),
        "total_size_bytes": size,
        "configs": configs,
        "stale_entries": stale,
        "hits": store.hits,
        "misses": store.misses,
    }


def cleanup_stale_entries(current_digest: str) -> int:
    """
    Remove entries computed under a different QuadConfig.

    Args:
        current_digest: Digest of the configuration to keep

    Returns:
        Number of entries removed
    """
    store = get_integral_store()
    keys = [key for key, _, _ in store.items() if key[1] != current_digest]
    return store.remove(keys)


def list_cache_entries(limit: Optional[int] = None) -> List[Dict[str, Any]]:
    """
    List cache entries, newest first.

    Args:
        limit: Optional limit on number of entries to return

    Returns:
        List of dictionaries with orders, value, abs_error, config and
        age_seconds
    """
    now = time.time()
    entries = [
        {
            "orders": list(orders),
            "value": value.value,
            "abs_error": value.abs_error,
            "config": digest,
            "age_seconds": int(now - timestamp),
        }
        for (orders, digest), value, timestamp in get_integral_store().items()
    ]
    entries.sort(key=lambda e: e["age_seconds"])

    if limit:
        entries = entries[:limit]

    return entries
