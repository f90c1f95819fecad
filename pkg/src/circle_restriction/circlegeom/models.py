"""Radial profile model."""

import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from circle_restriction.errors import InvalidInputError

SINGULAR_RADIUS = 1.0


@dataclass(frozen=True)
class RadialProfile:
    """
    Samples of a radial function r -> value.

    Attributes:
        radii: Ascending radii, none equal to the singular radius
        values: Finite values, one per radius
        singular_radius: Excluded radius (the ring |x| = 1)
        label: What the values are (e.g. "sigma3", "log_ratio")
    """

    radii: List[float]
    values: List[float]
    singular_radius: float = SINGULAR_RADIUS
    label: str = "sigma3"
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.radii) != len(self.values):
            raise InvalidInputError(
                f"radii and values differ in length ({len(self.radii)} vs {len(self.values)})"
            )
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise InvalidInputError("radii must be strictly ascending")
        if any(r == self.singular_radius for r in self.radii):
            raise InvalidInputError(f"radii must avoid the singular radius {self.singular_radius}")
        if any(not math.isfinite(v) for v in self.values):
            raise InvalidInputError("profile values must be finite")

    def to_csv(self, path: Optional[Path] = None) -> str:
        """Two-column CSV ``r,value``; also written to ``path`` if given."""
        buffer = io.StringIO()
        buffer.write(f"r,{self.label}\n")
        for r, v in zip(self.radii, self.values):
            buffer.write(f"{r!r},{v!r}\n")
        text = buffer.getvalue()
        if path is not None:
            Path(path).write_text(text, encoding="utf-8")
        return text

    def ratio_spread(self) -> float:
        """max/min of the values (inf if any value is not positive)."""
        if not self.values or min(self.values) <= 0:
            return math.inf
        return max(self.values) / min(self.values)
