"""
Published tables of the named sequences and their reproduction.

Table one lists alpha_n, alpha_tilde_n, beta_n for 0 <= n <= 10 at 7 decimals;
table two lists gamma, gamma_tilde, delta for seven (n, m) pairs at 8
decimals. Output rounding is round-half-even.
"""

import csv
import json
import logging
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from circle_restriction.errors import InvalidInputError
from circle_restriction.model import VerificationRecord
from circle_restriction.seqtab.models import SequenceCache, get_sequence_cache
from circle_restriction.seqtab.sequences import (
    alpha,
    alpha_tilde,
    beta,
    delta,
    gamma,
    gamma_tilde,
)

logger = logging.getLogger(__name__)

TABLE_ONE_COLUMNS = ("n", "alpha", "alpha_tilde", "beta")
TABLE_TWO_COLUMNS = ("n", "m", "gamma", "gamma_tilde", "delta")
TABLE_ONE_DECIMALS = 7
TABLE_TWO_DECIMALS = 8

# n -> (alpha, alpha_tilde, beta)
TABLE_ONE_REFERENCE: Dict[int, Tuple[float, float, float]] = {
    0: (0.3368280, 0.0673656, -0.1347312),
    1: (0.0673656, 0.0423752, 0.0597600),
    2: (0.0369428, 0.0138533, 0.0046171),
    3: (0.0249883, 0.0088143, 0.0014546),
    4: (0.0188523, 0.0064847, 0.0006018),
    5: (0.0151231, 0.0051433, 0.0003068),
    6: (0.0126216, 0.0042662, 0.0001770),
    7: (0.0108283, 0.0036466, 0.0001115),
    8: (0.0094804, 0.0031850, 0.0000746),
    9: (0.0084305, 0.0028276, 0.0000523),
    10: (0.0075896, 0.0025426, 0.0000382),
}

# (n, m) -> (gamma, gamma_tilde, delta)
TABLE_TWO_REFERENCE: Dict[Tuple[int, int], Tuple[float, float, float]] = {
    (2, 2): (0.00090754, 0.00061039, 0.00092363),
    (4, 2): (0.00019186, 0.00012012, 0.00016850),
    (6, 2): (0.00006958, 0.00004264, 0.00005834),
    (4, 4): (0.00002195, 0.00001272, 0.00001621),
    (6, 4): (0.00000498, 0.00000281, 0.00000345),
    (8, 4): (0.00000160, 0.00000089, 0.00000107),
    (10, 4): (0.00000064, 0.00000035, 0.00000041),
}

# stated precision of the first two columns; the derived column combines
# three times the second with the first
TABLE_ONE_TOLERANCE = (5e-7, 5e-7, 1.5e-6)
TABLE_TWO_TOLERANCE = (5e-8, 5e-8, 2e-7)


def round_half_even(x: float, decimals: int) -> str:
    """Fixed-point string of x rounded half-to-even."""
    quantum = Decimal(1).scaleb(-decimals)
    value = Decimal(repr(x)).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if value == 0:
        value = abs(value)
    return f"{value:f}"


def table_one(cache: Optional[SequenceCache] = None) -> List[Dict]:
    """Rows {n, alpha, alpha_tilde, beta} (CertifiedValues) in published order."""
    cache = cache if cache is not None else get_sequence_cache()
    return [
        {
            "n": n,
            "alpha": alpha(n, cache),
            "alpha_tilde": alpha_tilde(n, cache),
            "beta": beta(n, cache),
        }
        for n in TABLE_ONE_REFERENCE
    ]


def table_two(cache: Optional[SequenceCache] = None) -> List[Dict]:
    """Rows {n, m, gamma, gamma_tilde, delta} (CertifiedValues) in published order."""
    cache = cache if cache is not None else get_sequence_cache()
    return [
        {
            "n": n,
            "m": m,
            "gamma": gamma(n, m, cache),
            "gamma_tilde": gamma_tilde(n, m, cache),
            "delta": delta(n, m, cache),
        }
        for n, m in TABLE_TWO_REFERENCE
    ]


def _formatted(rows: List[Dict], index_columns: Tuple[str, ...], decimals: int) -> List[Dict[str, str]]:
    out = []
    for row in rows:
        formatted = {}
        for key, value in row.items():
            if key in index_columns:
                formatted[key] = str(value)
            else:
                formatted[key] = round_half_even(value.value, decimals)
                formatted[f"{key}_error"] = f"{value.abs_error:.1e}"
        out.append(formatted)
    return out


def _with_errors(columns: Tuple[str, ...]) -> List[str]:
    """Value columns in published order, each followed by its error column."""
    out = []
    for column in columns:
        out.append(column)
        if column not in ("n", "m"):
            out.append(f"{column}_error")
    return out


def format_tables(cache: Optional[SequenceCache] = None) -> Dict[str, List[Dict[str, str]]]:
    """Both tables as lists of string rows, rounded for publication."""
    return {
        "table_one": _formatted(table_one(cache), ("n",), TABLE_ONE_DECIMALS),
        "table_two": _formatted(table_two(cache), ("n", "m"), TABLE_TWO_DECIMALS),
    }


def write_tables(
    out_dir: Path, fmt: str = "csv", cache: Optional[SequenceCache] = None
) -> List[Path]:
    """
    Write both tables to ``out_dir``.

    Args:
        out_dir: Target directory (created if missing)
        fmt: "csv" (one file per table) or "json" (one file with both)
        cache: Sequence cache to read from

    Returns:
        Paths written

    Raises:
        InvalidInputError: Unknown format
    """
    if fmt not in ("csv", "json"):
        raise InvalidInputError(f"table format must be 'csv' or 'json', got {fmt!r}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = format_tables(cache)

    if fmt == "json":
        path = out_dir / "tables.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(tables, f, indent=2)
        logger.info(f"wrote {path}")
        return [path]

    paths = []
    for name, columns in (("table_one", TABLE_ONE_COLUMNS), ("table_two", TABLE_TWO_COLUMNS)):
        path = out_dir / f"{name}.csv"
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=_with_errors(columns), lineterminator="\n")
            writer.writeheader()
            writer.writerows(tables[name])
        logger.info(f"wrote {path}")
        paths.append(path)
    return paths


def table_reproduction_check(cache: Optional[SequenceCache] = None) -> VerificationRecord:
    """
    Every published entry reproduced within its stated precision.

    An entry passes when |computed - published| <= tolerance + abs_error.
    """
    cache = cache if cache is not None else get_sequence_cache()
    deviations: Dict[str, float] = {}
    failures: List[str] = []
    margin = float("inf")
    budget = 0.0

    comparisons = []
    for row in table_one(cache):
        reference = TABLE_ONE_REFERENCE[row["n"]]
        for column, ref, tol in zip(TABLE_ONE_COLUMNS[1:], reference, TABLE_ONE_TOLERANCE):
            comparisons.append((f"{column}[{row['n']}]", row[column], ref, tol))
    for row in table_two(cache):
        reference = TABLE_TWO_REFERENCE[(row["n"], row["m"])]
        for column, ref, tol in zip(TABLE_TWO_COLUMNS[2:], reference, TABLE_TWO_TOLERANCE):
            comparisons.append((f"{column}[{row['n']},{row['m']}]", row[column], ref, tol))

    for name, computed, reference, tolerance in comparisons:
        deviation = abs(computed.value - reference)
        slack = tolerance + computed.abs_error - deviation
        deviations[name] = deviation
        budget += computed.abs_error
        margin = min(margin, slack)
        if slack < 0:
            failures.append(name)

    if failures:
        logger.warning(f"table entries off beyond tolerance: {failures}")
    return VerificationRecord(
        claim="table_reproduction",
        anchor="published tables of alpha, alpha_tilde, beta, gamma, gamma_tilde, delta",
        inputs={"entries": len(comparisons)},
        values={"deviations": deviations, "failures": failures},
        error_budget=budget,
        margin=margin,
        passed=not failures,
    )
