"""
Result types shared by every circle-restriction command.

Commands return a CommandResponse; its ``result`` is a CommandResult subclass
(VerificationRecord here, VerificationReport, ConjectureReport and EvalResult
in ``replab.models``) that serializes to plain dicts for JSON reports.
"""

import hashlib
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CommandResult:
    """Base of the command payloads; ``to_dict`` feeds the JSON report writer."""

    def to_dict(self):
        return asdict(self)


@dataclass
class CommandResponse:
    """
    Outcome of one command.

    A command that ran to completion is a success even when some of its
    verification records failed; ``cli.main`` turns failed records into exit
    code 1 and an unsuccessful response into exit code 2.

    Attributes:
        is_success: False only for input errors or library failures
        result: The command's CommandResult (or plain dict) on success, None otherwise
        error: What went wrong, None on success
    """

    is_success: bool
    result: CommandResult | Any
    error: Optional[str] = None


@dataclass
class VerificationRecord(CommandResult):
    """
    Pass/fail record for one checked claim.

    Attributes:
        claim: Short identifier, e.g. "alpha_asymptotic"
        anchor: Human-readable statement of what is checked
        inputs: Parameters of the check (indices, seeds, eps values)
        values: Computed quantities entering the decision
        error_budget: Sum of propagated absolute errors
        margin: Distance from the decision boundary (positive means room)
        passed: Whether the claim holds with the error band respected
        notes: Free-form flags ("tightest", "asymptotic bound used", ...)
    """

    claim: str
    anchor: str
    inputs: Dict[str, Any]
    values: Dict[str, Any]
    error_budget: float
    margin: float
    passed: bool
    notes: List[str] = field(default_factory=list)

    @property
    def inputs_digest(self) -> str:
        payload = json.dumps(self.inputs, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_dict(self):
        data = asdict(self)
        data["inputs_digest"] = self.inputs_digest
        return data
