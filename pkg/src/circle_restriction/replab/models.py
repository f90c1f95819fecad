"""Settings and report models for the command-line front end."""

import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from circle_restriction.circfun.extension import DEFAULT_RADIAL_CUT
from circle_restriction.model import CommandResult, VerificationRecord
from circle_restriction.oscint.models import QuadConfig

QUAD_FIELDS = tuple(QuadConfig.model_fields)


class Settings(BaseModel):
    """
    Everything a command needs besides its own arguments.

    The quadrature fields mirror QuadConfig and are validated by it.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    split_radius: float = QuadConfig.model_fields["split_radius"].default
    head_tol: float = QuadConfig.model_fields["head_tol"].default
    tail_order: int = QuadConfig.model_fields["tail_order"].default
    max_panels: int = QuadConfig.model_fields["max_panels"].default
    panel_width: float = QuadConfig.model_fields["panel_width"].default
    target_error: float = QuadConfig.model_fields["target_error"].default

    grid_size: Optional[int] = Field(default=None, description="Grid for |f| and f_sharp")
    cache_path: Optional[Path] = Field(default=None, description="JSONL file for the integral cache")
    radial_cut: float = Field(default=DEFAULT_RADIAL_CUT, description="Radial cut of the direct route")
    workers: int = Field(default=1, description="Threads for integrals and Monte-Carlo seeds")

    @field_validator("grid_size")
    @classmethod
    def _grid_size_power_of_two(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and (v < 16 or v & (v - 1)):
            raise ValueError(f"grid_size must be a power of two >= 16, got {v}")
        return v

    @field_validator("radial_cut")
    @classmethod
    def _radial_cut_range(cls, v: float) -> float:
        if v < 100:
            raise ValueError(f"radial_cut must be at least 100, got {v}")
        return v

    @field_validator("workers")
    @classmethod
    def _workers_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"workers must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def _quad_fields_valid(self) -> "Settings":
        self.quad_config()
        return self

    def quad_config(self) -> QuadConfig:
        return QuadConfig(**{name: getattr(self, name) for name in QUAD_FIELDS})

    def digest(self) -> str:
        """Digest of everything that changes numbers (not paths or thread counts)."""
        payload = self.model_dump_json(exclude={"cache_path", "workers"})
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


@dataclass
class VerificationReport(CommandResult):
    """
    Records of one verification suite.

    Attributes:
        suite: Suite name ("crux", "all", ...)
        records: VerificationRecords in execution order
        config_digest: Settings digest the numbers were computed with
        wall_clock: Seconds spent
        seeds: Seeds used by Monte-Carlo parts, if any
    """

    suite: str
    records: List[VerificationRecord] = field(default_factory=list)
    config_digest: str = ""
    wall_clock: float = 0.0
    seeds: List[int] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def failed(self) -> List[VerificationRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    def summary(self) -> Dict[str, Any]:
        margins = [r.margin for r in self.records]
        return {
            "total": self.total,
            "passed": self.total - len(self.failed),
            "failed": len(self.failed),
            "min_margin": min(margins) if margins else None,
            "failed_claims": sorted({r.claim for r in self.failed}),
        }

    def to_dict(self):
        return {
            "suite": self.suite,
            "summary": self.summary(),
            "config_digest": self.config_digest,
            "wall_clock": self.wall_clock,
            "seeds": self.seeds,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(_finite(self.to_dict()), indent=2, default=_json_default)

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        return path


@dataclass
class ConjectureReport(CommandResult):
    """
    Outcome of a Psi exploration over random nonnegative antipodal functions.

    A negative Psi beyond its error band is reported as ``flagged``; the
    explorer never asserts that Psi >= 0 holds.
    """

    degree: int
    trials: int
    seed: int
    evaluated: int = 0
    min_psi: Optional[float] = None
    min_error: Optional[float] = None
    minimizer_seed: Optional[int] = None
    minimizer: Optional[Dict[str, Any]] = None
    flagged: bool = False
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(_finite(self.to_dict()), indent=2, default=_json_default)

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        return path


@dataclass
class EvalResult(CommandResult):
    """One evaluated quantity with its certified error."""

    form: str
    value: float
    abs_error: float
    source: str = ""
    extras: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.form} = {self.value!r} +- {self.abs_error:.3e}"


def _finite(obj: Any):
    """Non-finite floats become null so the output stays strict JSON."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def _json_default(obj: Any):
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, Path):
        return str(obj)
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")
