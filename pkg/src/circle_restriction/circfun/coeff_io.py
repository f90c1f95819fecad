"""
Coefficient files.

One record per line, whitespace separated::

    # n  Re f^(n)  Im f^(n)
    0   1.0   0.0
    2   0.5   0.0
    -2  0.5   0.0

Blank lines and text after ``#`` are ignored. A missing imaginary part is
read as 0. Frequencies may not repeat.
"""

import logging
import math
from pathlib import Path
from typing import Dict, Union

from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import CoefficientParseError

logger = logging.getLogger(__name__)


def parse_coefficients(text: str) -> TrigPoly:
    coeffs: Dict[int, complex] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        fields = line.split()
        if len(fields) not in (2, 3):
            raise CoefficientParseError(f"expected 'n re [im]', got {raw.strip()!r}", line_number)
        try:
            n = int(fields[0])
        except ValueError:
            raise CoefficientParseError(f"frequency {fields[0]!r} is not an integer", line_number)
        try:
            re = float(fields[1])
            im = float(fields[2]) if len(fields) == 3 else 0.0
        except ValueError:
            raise CoefficientParseError(f"coefficient in {raw.strip()!r} is not a number", line_number)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise CoefficientParseError("coefficient is not finite", line_number)
        if n in coeffs:
            raise CoefficientParseError(f"frequency {n} appears twice", line_number)
        coeffs[n] = complex(re, im)

    return TrigPoly.from_coeffs(coeffs)


def read_coefficients(path: Union[str, Path]) -> TrigPoly:
    """
    Read a TrigPoly from a coefficient file.

    Raises:
        CoefficientParseError: Malformed line (carries ``line_number``)
        OSError: File cannot be read
    """
    path = Path(path)
    f = parse_coefficients(path.read_text(encoding="utf-8"))
    logger.debug(f"read {len(f.terms)} coefficients from {path}")
    return f


def write_coefficients(f: TrigPoly, path: Union[str, Path]) -> Path:
    """Write f in the coefficient format with full float precision."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# n re im"]
    lines += [f"{n} {c.real!r} {c.imag!r}" for n, c in f.terms]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
