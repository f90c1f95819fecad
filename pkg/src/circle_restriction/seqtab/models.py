"""Sequence cache and the constants of the companion bounds."""

import logging
import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Optional

from circle_restriction.oscint.models import CertifiedValue, QuadConfig

logger = logging.getLogger(__name__)

C0 = 3.0 / (8.0 * math.pi**2)
EPSILON_1 = 0.03
EPSILON_2 = 0.11
GAMMA_3 = 1.3

SEQUENCE_NAMES = ("alpha", "alpha_tilde", "beta", "gamma", "gamma_tilde", "delta")


@dataclass
class SequenceCache:
    """
    Memoized values of the named sequences.

    alpha, alpha_tilde and beta are keyed by n; gamma, gamma_tilde and delta
    by (n, m). Lookups are lock-free; inserts are serialized.

    Attributes:
        cfg: Quadrature settings every entry was computed with
        c0, epsilon_1, epsilon_2, gamma_3: Constants of the companion bounds
    """

    cfg: QuadConfig = field(default_factory=QuadConfig)
    alpha: Dict[int, CertifiedValue] = field(default_factory=dict)
    alpha_tilde: Dict[int, CertifiedValue] = field(default_factory=dict)
    beta: Dict[int, CertifiedValue] = field(default_factory=dict)
    gamma: Dict[tuple, CertifiedValue] = field(default_factory=dict)
    gamma_tilde: Dict[tuple, CertifiedValue] = field(default_factory=dict)
    delta: Dict[tuple, CertifiedValue] = field(default_factory=dict)
    c0: float = C0
    epsilon_1: float = EPSILON_1
    epsilon_2: float = EPSILON_2
    gamma_3: float = GAMMA_3

    def __post_init__(self):
        self._lock = threading.Lock()

    def lookup(
        self, name: str, key: Hashable, compute: Callable[[], CertifiedValue]
    ) -> CertifiedValue:
        table: Dict = getattr(self, name)
        value = table.get(key)
        if value is not None:
            return value
        value = compute()
        with self._lock:
            table.setdefault(key, value)
        return table[key]

    def entries(self, name: str) -> Dict:
        if name not in SEQUENCE_NAMES:
            raise KeyError(f"unknown sequence {name!r}")
        return dict(getattr(self, name))

    def __len__(self) -> int:
        return sum(len(getattr(self, name)) for name in SEQUENCE_NAMES)

    def warm(self, n_max: int = 64, pair_max: int = 12) -> int:
        """Eagerly fill single-index entries up to n_max and even pairs up to pair_max."""
        from circle_restriction.seqtab.sequences import warm

        return warm(self, n_max=n_max, pair_max=pair_max)


_sequence_cache: Optional[SequenceCache] = None


def get_sequence_cache() -> SequenceCache:
    """
    Get or create the shared sequence cache.

    Returns:
        The process-wide SequenceCache (default QuadConfig on first use)
    """
    global _sequence_cache

    if _sequence_cache is None:
        _sequence_cache = SequenceCache()

    return _sequence_cache


def set_sequence_cache(cache: Optional[SequenceCache]) -> None:
    """
    Replace the shared sequence cache.

    ``None`` resets it; a new default one is created on next use.
    """
    global _sequence_cache
    _sequence_cache = cache
    if cache is not None:
        logger.debug(f"sequence cache set (config {cache.cfg.digest()})")
