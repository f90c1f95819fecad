"""
Trigonometric polynomials on the unit circle.

f(omega) = sum_n f^(n) e_n(omega), e_n(theta) = exp(i n theta), with
f^(n) = (1/2pi) int f(omega) omega^-n d sigma, so that
||f||_2^2 = 2 pi sum |f^(n)|^2.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np

from circle_restriction.errors import InvalidInputError

Number = Union[int, float, complex]

# coefficients below this fraction of the largest one are treated as zero
# when building a polynomial from grid samples
SAMPLE_CUTOFF = 1e-15


@dataclass(frozen=True)
class TrigPoly:
    """
    Immutable trigonometric polynomial.

    Attributes:
        terms: (frequency, coefficient) pairs, frequencies ascending, no zeros
        residual: L^2 norm of what was truncated when the polynomial was
            built from grid samples (0 for exact polynomials)
    """

    terms: Tuple[Tuple[int, complex], ...] = ()
    residual: float = 0.0

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, Number], residual: float = 0.0) -> "TrigPoly":
        items = []
        for n, c in coeffs.items():
            if int(n) != n:
                raise InvalidInputError(f"frequencies must be integers, got {n}")
            c = complex(c)
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise InvalidInputError(f"coefficient of frequency {n} is not finite")
            if c != 0:
                items.append((int(n), c))
        return cls(tuple(sorted(items)), float(residual))

    @classmethod
    def constant(cls, c: Number = 1.0) -> "TrigPoly":
        return cls.from_coeffs({0: c})

    @classmethod
    def mode(cls, n: int, c: Number = 1.0) -> "TrigPoly":
        """c e_n."""
        return cls.from_coeffs({n: c})

    @classmethod
    def cosine(cls, n: int, amplitude: float = 1.0) -> "TrigPoly":
        """amplitude cos(n theta)."""
        if n == 0:
            return cls.constant(amplitude)
        return cls.from_coeffs({n: amplitude / 2, -n: amplitude / 2})

    @classmethod
    def from_samples(
        cls, values: np.ndarray, bandwidth: Optional[int] = None
    ) -> "TrigPoly":
        """
        Interpolant of equispaced samples f(2 pi j / N), truncated to |n| <= bandwidth.

        Dropped coefficients (beyond the bandwidth, or negligibly small)
        are accumulated into ``residual`` as an L^2 norm.
        """
        values = np.asarray(values)
        size = values.size
        if bandwidth is None:
            bandwidth = size // 2 - 1
        if not 0 <= bandwidth < size / 2:
            raise InvalidInputError(f"bandwidth {bandwidth} too large for {size} samples")

        spectrum = np.fft.fft(values) / size
        frequencies = np.fft.fftfreq(size, d=1.0 / size).astype(int)
        scale = float(np.abs(spectrum).max()) if size else 0.0

        kept = {}
        dropped = 0.0
        for n, c in zip(frequencies, spectrum):
            if abs(n) <= bandwidth and abs(c) > SAMPLE_CUTOFF * scale:
                kept[int(n)] = complex(c)
            else:
                dropped += abs(c) ** 2
        return cls.from_coeffs(kept, residual=math.sqrt(2 * math.pi * dropped))

    @property
    def coeffs(self) -> Dict[int, complex]:
        return dict(self.terms)

    @property
    def frequencies(self) -> Tuple[int, ...]:
        return tuple(n for n, _ in self.terms)

    @property
    def degree(self) -> int:
        return max((abs(n) for n, _ in self.terms), default=0)

    def coefficient(self, n: int) -> complex:
        return self.coeffs.get(n, 0j)

    @property
    def mean(self) -> complex:
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self.terms

    def eval(self, theta: Union[float, np.ndarray]) -> Union[complex, np.ndarray]:
        """sum_n f^(n) exp(i n theta), scalar or vectorized."""
        theta = np.asarray(theta, dtype=float)
        total = np.zeros(theta.shape, dtype=complex)
        for n, c in self.terms:
            total += c * np.exp(1j * n * theta)
        return complex(total) if total.ndim == 0 else total

    __call__ = eval

    def sample(self, grid_size: int) -> np.ndarray:
        """Values on theta_j = 2 pi j / grid_size (exact when grid_size > 2 degree)."""
        if grid_size <= 2 * self.degree:
            raise InvalidInputError(
                f"grid of {grid_size} points aliases a polynomial of degree {self.degree}"
            )
        spectrum = np.zeros(grid_size, dtype=complex)
        for n, c in self.terms:
            spectrum[n % grid_size] += c
        return np.fft.ifft(spectrum) * grid_size

    def l2_norm(self) -> float:
        """||f||_{L^2(S^1)} = sqrt(2 pi sum |f^(n)|^2)."""
        return math.sqrt(2 * math.pi * sum(abs(c) ** 2 for _, c in self.terms))

    def is_real(self, tol: float = 1e-12) -> bool:
        coeffs = self.coeffs
        return all(abs(c - coeffs.get(-n, 0j).conjugate()) <= tol for n, c in self.terms)

    def is_antipodal(self, tol: float = 1e-12) -> bool:
        """Antipodally symmetric: no odd frequencies."""
        return all(abs(c) <= tol for n, c in self.terms if n % 2)

    def truncate(self, degree: int) -> "TrigPoly":
        """Keep |n| <= degree; the dropped L^2 mass is added to ``residual``."""
        kept = {n: c for n, c in self.terms if abs(n) <= degree}
        dropped = sum(abs(c) ** 2 for n, c in self.terms if abs(n) > degree)
        return TrigPoly.from_coeffs(kept, self.residual + math.sqrt(2 * math.pi * dropped))

    def _map(self, func) -> "TrigPoly":
        return TrigPoly.from_coeffs(dict(func(n, c) for n, c in self.terms), self.residual)

    def shift(self, k: int) -> "TrigPoly":
        """Multiplication by e_k."""
        return self._map(lambda n, c: (n + k, c))

    def conj(self) -> "TrigPoly":
        """Complex conjugate function."""
        return self._map(lambda n, c: (-n, c.conjugate()))

    def reflect(self) -> "TrigPoly":
        """omega -> f(-omega)."""
        return self._map(lambda n, c: (n, -c if n % 2 else c))

    def conj_reflect(self) -> "TrigPoly":
        """f_star(omega) = conj(f(-omega)); coefficients (-1)^m conj(f^(-m))."""
        return self.reflect().conj()

    def rotate(self, angle: float) -> "TrigPoly":
        """theta -> f(theta - angle)."""
        return self._map(lambda n, c: (n, c * complex(math.cos(n * angle), -math.sin(n * angle))))

    def real_part(self) -> "TrigPoly":
        return (self + self.conj()) * 0.5

    def __add__(self, other: Union["TrigPoly", Number]) -> "TrigPoly":
        other = _coerce(other)
        coeffs = self.coeffs
        for n, c in other.terms:
            coeffs[n] = coeffs.get(n, 0j) + c
        return TrigPoly.from_coeffs(coeffs, self.residual + other.residual)

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return self._map(lambda n, c: (n, -c))

    def __sub__(self, other: Union["TrigPoly", Number]) -> "TrigPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Number) -> "TrigPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["TrigPoly", Number]) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            factor = complex(other)
            return TrigPoly.from_coeffs(
                {n: c * factor for n, c in self.terms}, self.residual * abs(factor)
            )
        coeffs: Dict[int, complex] = {}
        for n, a in self.terms:
            for m, b in other.terms:
                coeffs[n + m] = coeffs.get(n + m, 0j) + a * b
        residual = self.residual * _sup_bound(other) + other.residual * _sup_bound(self)
        return TrigPoly.from_coeffs(coeffs, residual)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "TrigPoly":
        return self * (1.0 / complex(other))

    def to_dict(self) -> Dict[str, object]:
        return {
            "coefficients": [[n, c.real, c.imag] for n, c in self.terms],
            "residual": self.residual,
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c.real:.6g}{c.imag:+.6g}j)e{n}" for n, c in self.terms)


def _coerce(x: Union[TrigPoly, Number]) -> TrigPoly:
    return x if isinstance(x, TrigPoly) else TrigPoly.constant(x)


def _sup_bound(f: TrigPoly) -> float:
    return sum(abs(c) for _, c in f.terms)


def trig_sum(polys: Iterable[TrigPoly]) -> TrigPoly:
    total = TrigPoly()
    for p in polys:
        total = total + p
    return total
