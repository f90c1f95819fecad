"""
Integral cache for sixfold Bessel integrals.

Keeps every computed integral in memory, keyed by canonical orders and the
QuadConfig digest, and optionally persists them as JSON Lines. One record per
line, fields in this order:

    {"orders": [n1, ..., n6], "value": v, "abs_error": e, "config": digest,
     "timestamp": unix_seconds}

Orders are the canonical (nonnegative, descending) orders; the parity sign is
never stored.
"""

import functools
import json
import logging
import os
import threading
import time
from pathlib import Path
from typing import TYPE_CHECKING, Callable, Dict, Iterator, List, Optional, Tuple

if TYPE_CHECKING:
    from circle_restriction.oscint.models import CertifiedValue, OrderTuple, QuadConfig

logger = logging.getLogger(__name__)

CACHE_DIR = Path(os.getenv("CIRCLE_RESTRICTION_CACHE_DIR", ".cache"))
CACHE_FILENAME = "sixfold_integrals.jsonl"

CacheKey = Tuple[Tuple[int, ...], str]


class IntegralStore:
    """
    Thread-safe integral cache with optional JSONL persistence.

    Reads are plain dict lookups; inserts and rewrites hold a lock so that
    concurrent workers never interleave partial lines in the file.
    """

    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path is not None else None
        self._entries: Dict[CacheKey, Tuple["CertifiedValue", float]] = {}
        self._lock = threading.RLock()
        self.hits = 0
        self.misses = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self):
        from circle_restriction.oscint.models import CertifiedValue

        skipped = 0
        with open(self.path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    key = (tuple(int(n) for n in record["orders"]), str(record["config"]))
                    value = CertifiedValue(float(record["value"]), float(record["abs_error"]))
                    self._entries[key] = (value, float(record.get("timestamp", 0.0)))
                except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                    skipped += 1
        if skipped:
            logger.warning(f"skipped {skipped} malformed cache lines in {self.path}")
        logger.debug(f"loaded {len(self._entries)} cached integrals from {self.path}")

    @staticmethod
    def _record(key: CacheKey, value: "CertifiedValue", timestamp: float) -> str:
        orders, digest = key
        return json.dumps(
            {
                "orders": list(orders),
                "value": value.value,
                "abs_error": value.abs_error,
                "config": digest,
                "timestamp": timestamp,
            }
        )

    def get(self, orders: Tuple[int, ...], digest: str) -> Optional["CertifiedValue"]:
        entry = self._entries.get((tuple(orders), digest))
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        return entry[0]

    def put(self, orders: Tuple[int, ...], digest: str, value: "CertifiedValue"):
        key = (tuple(orders), digest)
        timestamp = time.time()
        with self._lock:
            self._entries[key] = (value, timestamp)
            if self.path is None:
                return
            try:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="utf-8") as f:
                    f.write(self._record(key, value, timestamp) + "\n")
            except OSError as e:
                logger.warning(f"failed to persist integral {orders}: {e}")

    def items(self) -> Iterator[Tuple[CacheKey, "CertifiedValue", float]]:
        for key, (value, timestamp) in list(self._entries.items()):
            yield key, value, timestamp

    def remove(self, keys: List[CacheKey]) -> int:
        """Drop entries and rewrite the backing file. Returns the number removed."""
        with self._lock:
            removed = 0
            for key in keys:
                if self._entries.pop(key, None) is not None:
                    removed += 1
            if removed and self.path is not None:
                self._rewrite()
            return removed

    def _rewrite(self):
        tmp = self.path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as f:
            for key, (value, timestamp) in self._entries.items():
                f.write(self._record(key, value, timestamp) + "\n")
        tmp.replace(self.path)

    def __len__(self) -> int:
        return len(self._entries)


_store: Optional[IntegralStore] = None
_store_lock = threading.Lock()


def get_integral_store() -> IntegralStore:
    """
    Get the shared integral store, creating the default one on first use.

    The default store persists to ``CACHE_DIR / sixfold_integrals.jsonl``.
    """
    global _store
    with _store_lock:
        if _store is None:
            _store = IntegralStore(CACHE_DIR / CACHE_FILENAME)
        return _store


def set_integral_store(store: Optional[IntegralStore]) -> Optional[IntegralStore]:
    """Replace the shared store (``None`` resets to the default). Returns the previous one."""
    global _store
    with _store_lock:
        previous, _store = _store, store
        return previous


def cache_integral(func: Callable) -> Callable:
    """
    Decorator caching ``func(t, cfg)`` results in the shared integral store.

    The wrapped function receives the unsigned canonical tuple and must return
    the unsigned integral; the decorator applies ``t.sign`` on the way out.
    Pass ``override_cache=True`` to recompute and overwrite.

    Example:
        @cache_integral
        def sixfold_integral(t: OrderTuple, cfg: QuadConfig) -> CertifiedValue:
            ...
    """

    @functools.wraps(func)
    def wrapper(t: "OrderTuple", cfg: Optional["QuadConfig"] = None, override_cache: bool = False):
        if cfg is None:
            from circle_restriction.oscint.models import QuadConfig

            cfg = QuadConfig()
        store = get_integral_store()
        digest = cfg.digest()

        cached = None if override_cache else store.get(t.orders, digest)
        if cached is not None:
            logger.debug(f"cache hit {t.key} [{digest}]")
            result = cached
        else:
            logger.debug(f"cache miss {t.key} [{digest}]")
            result = func(t.unsigned(), cfg)
            store.put(t.orders, digest, result)

        return result if t.sign > 0 else -result

    return wrapper
