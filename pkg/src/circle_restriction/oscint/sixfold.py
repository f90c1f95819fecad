"""
Certified sixfold Bessel integrals I_{n1..n6} = int_0^inf prod J_{n_i}(r) r dr.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from circle_restriction.cache import cache_integral
from circle_restriction.errors import AccuracyNotAchievedError, RefusedError
from circle_restriction.oscint.models import (
    MAX_TOTAL_ORDER,
    SPLIT_CEILING,
    CertifiedValue,
    OrderTuple,
    QuadConfig,
)
from circle_restriction.oscint.panels import head_integral
from circle_restriction.oscint.tail import tail_bound

logger = logging.getLogger(__name__)

OrdersLike = Union[OrderTuple, Sequence[int]]


def as_order_tuple(t: OrdersLike) -> OrderTuple:
    return t if isinstance(t, OrderTuple) else OrderTuple.from_orders(t)


def effective_split(t: OrderTuple, cfg: QuadConfig) -> float:
    """
    Split radius actually used for ``t``.

    The configured radius is doubled until max(n)^2 <= 8R, so the Hankel
    coefficients of every factor stay of moderate size on [R, inf). Never
    exceeds the 1e4 ceiling.
    """
    R = cfg.split_radius
    while t.max_order**2 > 8 * R and R < SPLIT_CEILING:
        R *= 2
    return min(R, SPLIT_CEILING)


@cache_integral
def _integrate(t: OrderTuple, cfg: QuadConfig) -> CertifiedValue:
    R = effective_split(t, cfg)
    tail = tail_bound(t, R, cfg.tail_order)
    try:
        head = head_integral(t, R, cfg.head_tol, cfg.max_panels, cfg.panel_width)
    except AccuracyNotAchievedError as e:
        best = e.best + tail if e.best is not None else None
        raise AccuracyNotAchievedError(f"{t.key}: {e}", best) from e

    result = head + tail
    logger.debug(f"I[{t.key}] = {result} (R={R:g}, head {head}, tail {tail})")
    if result.abs_error > cfg.target_error:
        raise AccuracyNotAchievedError(
            f"{t.key}: abs_error {result.abs_error:.2e} above target {cfg.target_error:.2e}",
            result,
        )
    return result


def sixfold_integral(
    t: OrdersLike,
    cfg: Optional[QuadConfig] = None,
    override_cache: bool = False,
) -> CertifiedValue:
    """
    Certified value of I_{n1..n6}.

    The integral is computed once per canonical tuple and QuadConfig; every
    permutation and sign pattern of the orders is served from the same cache
    entry with the parity sign applied.

    Args:
        t: OrderTuple or six signed integer orders (|n| <= 256)
        cfg: Quadrature settings (defaults to ``QuadConfig()``)
        override_cache: Recompute even if a cached value exists

    Returns:
        CertifiedValue of the integral

    Raises:
        InvalidInputError: Malformed orders
        RefusedError: Total order above 512
        AccuracyNotAchievedError: Error band above ``cfg.target_error``;
            ``best`` carries the value obtained

    Example:
        >>> sixfold_integral((2, 2, -4, 0, 0, 0)).value
        0.000907...
    """
    t = as_order_tuple(t)
    if t.total_order > MAX_TOTAL_ORDER:
        raise RefusedError(
            f"total order {t.total_order} of {t.orders} exceeds {MAX_TOTAL_ORDER}"
        )
    return _integrate(t, cfg or QuadConfig(), override_cache=override_cache)


def integral_table(
    tuples: Iterable[OrdersLike],
    cfg: Optional[QuadConfig] = None,
    workers: int = 1,
) -> Dict[Tuple[int, ...], CertifiedValue]:
    """
    Evaluate many integrals, optionally on a thread pool.

    Args:
        tuples: Order tuples (any sign pattern or permutation)
        cfg: Quadrature settings
        workers: Thread count; 1 evaluates serially

    Returns:
        Mapping from canonical orders to the unsigned integral
    """
    cfg = cfg or QuadConfig()
    canonical = sorted({as_order_tuple(t).unsigned() for t in tuples}, key=lambda t: t.orders)
    logger.debug(f"integral table: {len(canonical)} distinct tuples, {workers} workers")

    if workers > 1 and len(canonical) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda t: sixfold_integral(t, cfg), canonical))
    else:
        values = [sixfold_integral(t, cfg) for t in canonical]

    return {t.orders: v for t, v in zip(canonical, values)}
