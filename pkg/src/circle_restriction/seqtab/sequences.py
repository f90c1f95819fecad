"""
The named sequences of sixfold Bessel integrals.

    alpha_n        = int J_n^2 J_0^4 r dr
    alpha_tilde_n  = int J_n^2 J_1^2 J_0^2 r dr
    beta_n         = int J_n^2 (3 J_1^2 - J_0^2) J_0^2 r dr = 3 alpha_tilde_n - alpha_n
    gamma_{n,m}    = int J_n J_m J_{n+m} J_0^3 r dr
    gamma_tilde    = int J_n J_m J_{n+m} J_1^2 J_0 r dr
    delta_{n,m}    = int J_n J_m J_{n+m} (3 J_1^2 - J_0^2) J_0 r dr = 3 gamma_tilde - gamma
"""

from typing import Optional

from circle_restriction.oscint import CertifiedValue, sixfold_integral
from circle_restriction.seqtab.models import SequenceCache, get_sequence_cache


def _cache(cache: Optional[SequenceCache]) -> SequenceCache:
    return cache if cache is not None else get_sequence_cache()


def _pair_key(n: int, m: int) -> tuple:
    return (n, m) if n >= m else (m, n)


def alpha(n: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """
    alpha_n = I_{n,n,0,0,0,0}; alpha_{-n} = alpha_n.

    Example:
        >>> alpha(0).value
        0.33682...
    """
    cache = _cache(cache)
    n = abs(int(n))
    return cache.lookup("alpha", n, lambda: sixfold_integral((n, n, 0, 0, 0, 0), cache.cfg))


def alpha_tilde(n: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """alpha_tilde_n = I_{n,n,1,1,0,0}."""
    cache = _cache(cache)
    n = abs(int(n))
    return cache.lookup(
        "alpha_tilde", n, lambda: sixfold_integral((n, n, 1, 1, 0, 0), cache.cfg)
    )


def beta(n: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """beta_n = 3 alpha_tilde_n - alpha_n."""
    cache = _cache(cache)
    n = abs(int(n))
    return cache.lookup("beta", n, lambda: 3 * alpha_tilde(n, cache) - alpha(n, cache))


def gamma(n: int, m: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """gamma_{n,m} = I_{n,m,n+m,0,0,0}; symmetric in (n, m)."""
    cache = _cache(cache)
    n, m = _pair_key(int(n), int(m))
    return cache.lookup(
        "gamma", (n, m), lambda: sixfold_integral((n, m, n + m, 0, 0, 0), cache.cfg)
    )


def gamma_tilde(n: int, m: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """gamma_tilde_{n,m} = I_{n,m,n+m,1,1,0}; symmetric in (n, m)."""
    cache = _cache(cache)
    n, m = _pair_key(int(n), int(m))
    return cache.lookup(
        "gamma_tilde", (n, m), lambda: sixfold_integral((n, m, n + m, 1, 1, 0), cache.cfg)
    )


def delta(n: int, m: int, cache: Optional[SequenceCache] = None) -> CertifiedValue:
    """delta_{n,m} = 3 gamma_tilde_{n,m} - gamma_{n,m}; symmetric in (n, m)."""
    cache = _cache(cache)
    n, m = _pair_key(int(n), int(m))
    return cache.lookup(
        "delta", (n, m), lambda: 3 * gamma_tilde(n, m, cache) - gamma(n, m, cache)
    )


def warm(cache: Optional[SequenceCache] = None, n_max: int = 64, pair_max: int = 12) -> int:
    """
    Fill the cache eagerly.

    alpha, alpha_tilde, beta for 0 <= n <= n_max; gamma, gamma_tilde, delta for
    even 2 <= m <= n <= pair_max.

    Returns:
        Number of entries in the cache afterwards
    """
    cache = _cache(cache)
    for n in range(n_max + 1):
        beta(n, cache)
    for n in range(2, pair_max + 1, 2):
        for m in range(2, n + 1, 2):
            delta(n, m, cache)
    return len(cache)
