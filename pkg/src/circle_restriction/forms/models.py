"""Data models for the forms module."""

from dataclasses import asdict, dataclass, field
from typing import Dict, List

from circle_restriction.model import VerificationRecord
from circle_restriction.seqtab.models import EPSILON_1, EPSILON_2, GAMMA_3

# the universal bracket must stay below this
BRACKET_CEILING = 0.974


@dataclass
class SpectralBudget:
    """
    Instance-level budget of the trilinear bound for one nonnegative h.

    The left-hand side |sum_{n,m >= 2} h^(n) h^(m) conj(h^(n+m)) delta_{n,m}|
    is split into six partial sums s1..s6 (min(n, m) = 2, the eta part of
    min(n, m) = 4, and the remainder, each in both index orders).

    Attributes:
        s1..s6: The six partial sums, in absolute value
        lhs: The full left-hand side
        rhs: ||h^||_inf * sum_{n >= 2 even} |h^(n)|^2 beta_n
        error_budget: Certified error of lhs + rhs
        bracket: The universal bracket constant
        hardy_ratio: Hardy quotient of a_j = |h^(2j+2)| beta_{2j+2}^(1/2)
        epsilon_1, epsilon_2, gamma_3: Constants of the companion bounds
    """

    s1: float
    s2: float
    s3: float
    s4: float
    s5: float
    s6: float
    lhs: float
    rhs: float
    error_budget: float
    bracket: float
    hardy_ratio: float
    epsilon_1: float = EPSILON_1
    epsilon_2: float = EPSILON_2
    gamma_3: float = GAMMA_3
    notes: List[str] = field(default_factory=list)

    @property
    def partial_sums(self) -> List[float]:
        return [self.s1, self.s2, self.s3, self.s4, self.s5, self.s6]

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs - self.error_budget

    @property
    def passed(self) -> bool:
        return self.margin >= 0 and self.bracket < BRACKET_CEILING and self.hardy_ratio <= 4.0

    def to_dict(self) -> Dict:
        data = asdict(self)
        data["margin"] = self.margin
        data["passed"] = self.passed
        return data

    def to_record(self, inputs: Dict) -> VerificationRecord:
        return VerificationRecord(
            claim="spectral_budget",
            anchor="|sum h^(n) h^(m) conj h^(n+m) delta_{n,m}| <= ||h^||_inf sum |h^(n)|^2 beta_n",
            inputs=inputs,
            values=self.to_dict(),
            error_budget=self.error_budget,
            margin=min(self.margin, BRACKET_CEILING - self.bracket, 4.0 - self.hardy_ratio),
            passed=self.passed,
            notes=list(self.notes),
        )
