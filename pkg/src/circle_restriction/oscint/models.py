"""Data models for certified sixfold Bessel integrals."""

import hashlib
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from circle_restriction.errors import InvalidInputError

_EPS = 2.220446049250313e-16

# orders are encoded in base 257 when many tuples are deduplicated at once
MAX_ORDER = 256
MAX_TOTAL_ORDER = 2 * MAX_ORDER
SPLIT_CEILING = 1.0e4

Number = Union[int, float]


@dataclass(frozen=True)
class CertifiedValue:
    """
    A real number with an absolute error bound.

    The true quantity is taken to lie in [value - abs_error, value + abs_error].
    Closed forms and the asymptotic tail carry rigorous bounds; quadrature
    heads carry the Gauss-Kronrod error estimate padded by roundoff floors.
    The arithmetic helpers propagate error bounds and pad each result by a
    few ulps for the floating-point operation itself.
    """

    value: float
    abs_error: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise InvalidInputError(f"certified value must be finite, got {self.value}")
        if self.abs_error < 0 or math.isnan(self.abs_error):
            raise InvalidInputError(f"abs_error must be >= 0, got {self.abs_error}")

    @classmethod
    def exact(cls, value: Number) -> "CertifiedValue":
        return cls(float(value), 0.0)

    @property
    def lower(self) -> float:
        return self.value - self.abs_error

    @property
    def upper(self) -> float:
        return self.value + self.abs_error

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return abs(x - self.value) <= self.abs_error + slack

    def is_positive(self) -> bool:
        return self.lower > 0

    @staticmethod
    def _pad(value: float) -> float:
        return 4 * _EPS * abs(value)

    def __add__(self, other: Union["CertifiedValue", Number]) -> "CertifiedValue":
        other = _coerce(other)
        value = self.value + other.value
        return CertifiedValue(value, self.abs_error + other.abs_error + self._pad(value))

    __radd__ = __add__

    def __neg__(self) -> "CertifiedValue":
        return CertifiedValue(-self.value, self.abs_error)

    def __sub__(self, other: Union["CertifiedValue", Number]) -> "CertifiedValue":
        return self + (-_coerce(other))

    def __rsub__(self, other: Number) -> "CertifiedValue":
        return _coerce(other) - self

    def __mul__(self, other: Union["CertifiedValue", Number]) -> "CertifiedValue":
        other = _coerce(other)
        value = self.value * other.value
        error = (
            abs(self.value) * other.abs_error
            + abs(other.value) * self.abs_error
            + self.abs_error * other.abs_error
        )
        return CertifiedValue(value, error + self._pad(value))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "CertifiedValue":
        if isinstance(other, CertifiedValue):
            raise TypeError("division by a CertifiedValue is not supported")
        value = self.value / other
        return CertifiedValue(value, self.abs_error / abs(other) + self._pad(value))

    def to_dict(self):
        return asdict(self)

    def __str__(self) -> str:
        return f"{self.value:.12g} ± {self.abs_error:.2e}"


def _coerce(x: Union[CertifiedValue, Number]) -> CertifiedValue:
    if isinstance(x, CertifiedValue):
        return x
    return CertifiedValue.exact(x)


def certified_sum(values: Iterable[CertifiedValue]) -> CertifiedValue:
    total = CertifiedValue.exact(0.0)
    for v in values:
        total = total + v
    return total


@dataclass(frozen=True)
class OrderTuple:
    """
    Six Bessel orders in canonical form.

    ``orders`` are nonnegative and sorted descending; ``sign`` is the parity
    sign extracted while folding negative orders, so that
    I(original) = sign * I(orders).
    """

    orders: Tuple[int, int, int, int, int, int]
    sign: int = 1

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "OrderTuple":
        """
        Canonicalize six signed integer orders.

        Raises:
            InvalidInputError: Wrong length, non-integers, or |n| > 256
        """
        raw = list(orders)
        if len(raw) != 6:
            raise InvalidInputError(f"expected six orders, got {len(raw)}")
        if any(int(n) != n for n in raw):
            raise InvalidInputError(f"orders must be integers, got {raw}")
        raw = [int(n) for n in raw]
        if any(abs(n) > MAX_ORDER for n in raw):
            raise InvalidInputError(f"orders must satisfy |n| <= {MAX_ORDER}, got {raw}")

        sign = 1
        for n in raw:
            if n < 0 and n % 2:
                sign = -sign
        canonical = tuple(sorted((abs(n) for n in raw), reverse=True))
        return cls(canonical, sign)

    @property
    def total_order(self) -> int:
        return sum(self.orders)

    @property
    def max_order(self) -> int:
        return self.orders[0]

    @property
    def key(self) -> str:
        return ",".join(str(n) for n in self.orders)

    def unsigned(self) -> "OrderTuple":
        return OrderTuple(self.orders, 1)


class QuadConfig(BaseModel):
    """Quadrature settings for the head/tail split of sixfold integrals."""

    model_config = ConfigDict(frozen=True)

    split_radius: float = Field(default=200.0, description="Head/tail boundary R")
    head_tol: float = Field(default=1e-12, description="Absolute tolerance on [0, R]")
    tail_order: int = Field(default=2, description="Asymptotic correction terms")
    max_panels: int = Field(default=400_000, description="Panel budget for the head")
    panel_width: float = Field(default=0.5, description="Initial Gauss-Kronrod panel width")
    target_error: float = Field(
        default=1e-9, description="Largest acceptable abs_error of one integral"
    )

    @field_validator("split_radius")
    @classmethod
    def _split_radius_range(cls, v: float) -> float:
        if not 20.0 <= v <= SPLIT_CEILING:
            raise ValueError(f"split_radius must lie in [20, {SPLIT_CEILING:g}], got {v}")
        return v

    @field_validator("head_tol", "panel_width", "target_error")
    @classmethod
    def _positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("tail_order")
    @classmethod
    def _tail_order_range(cls, v: int) -> int:
        if v not in (1, 2, 3):
            raise ValueError(f"tail_order must be 1, 2 or 3, got {v}")
        return v

    @field_validator("max_panels")
    @classmethod
    def _max_panels_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"max_panels must be positive, got {v}")
        return v

    def digest(self) -> str:
        return hashlib.sha256(self.model_dump_json().encode()).hexdigest()[:12]
