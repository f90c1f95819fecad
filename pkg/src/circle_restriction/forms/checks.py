"""
Identity and inequality checks built on the spectral forms.

All decisions compare a computed margin against the sum of propagated
certified errors; nothing passes on cancellation inside the error band.
"""

import logging
import math
from typing import Optional, Sequence

from circle_restriction.circfun.extension import extension_norm6_spectral, phi_sixth
from circle_restriction.circfun.models import TrigPoly
from circle_restriction.errors import PreconditionError
from circle_restriction.forms.budget import require_nonnegative_antipodal
from circle_restriction.forms.coefficients import cn_coefficient
from circle_restriction.forms.spectral import (
    FORM_SCALE,
    cubic_form,
    dot_form,
    psi,
    sixfold_form,
    trilinear_T,
    trilinear_T_spectral_gpart,
    weighted_form,
)
from circle_restriction.model import VerificationRecord
from circle_restriction.oscint import CertifiedValue, QuadConfig
from circle_restriction.seqtab.models import SequenceCache

logger = logging.getLogger(__name__)

# Sigma_{n != 0} |h^(n)|^2 below this counts as constant
CONSTANT_THRESHOLD = 1e-20
LOCAL_EPS = (0.05, 0.02, 0.01)
MIN_DEFECT_ORDER = 2.5
_ONE = TrigPoly.constant(1.0)


def _agreement_record(
    claim: str,
    anchor: str,
    inputs: dict,
    left: CertifiedValue,
    right: CertifiedValue,
    slack: float = 0.0,
    notes: Optional[list] = None,
) -> VerificationRecord:
    """Pass iff |left - right| <= both errors (+ slack)."""
    budget = left.abs_error + right.abs_error + slack
    deviation = abs(left.value - right.value)
    return VerificationRecord(
        claim=claim,
        anchor=anchor,
        inputs=inputs,
        values={"left": left.to_dict(), "right": right.to_dict(), "deviation": deviation},
        error_budget=budget,
        margin=budget - deviation,
        passed=deviation <= budget,
        notes=notes or [],
    )


def _rounding_slack(*values: CertifiedValue) -> float:
    return 1e-12 * max(abs(v.value) for v in values)


def geometric_identity_check(
    f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> VerificationRecord:
    """
    ||f^sigma||_6^6 = (2 pi)^2 (5/4) C(f) for f = f_star.

    Raises:
        PreconditionError: If f differs from f_star
    """
    if any(abs(c) > 1e-12 for _, c in (f - f.conj_reflect()).terms):
        raise PreconditionError("f must satisfy f = f_star (real and antipodal)")

    norm = extension_norm6_spectral(f, cfg, workers)
    identity = cubic_form(f, cfg, workers) * ((2 * math.pi) ** 2 * 1.25)
    return _agreement_record(
        "geometric_identity",
        "||f^sigma||_6^6 = (2 pi)^2 (5/4) int prod f (|omega_4+omega_5+omega_6|^2 - 1) d Sigma",
        {"f": f.to_dict()},
        norm,
        identity,
        slack=_rounding_slack(norm, identity),
    )


def trilinear_maximum_check(
    h: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> VerificationRecord:
    """
    T(h, h, h) <= T(c, c, c) with c = h^(0), for nonnegative antipodal h.

    T(c, c, c) = c^3 T(1, 1, 1). Equality is expected only for constant h
    (sum_{n != 0} |h^(n)|^2 <= 1e-20) and passes within the error band. A
    non-constant h passes only if T(c,c,c) - T(h,h,h) exceeds the error
    band; a margin inside the band is unresolved and fails.

    Raises:
        PreconditionError: If h is not nonnegative antipodal
    """
    require_nonnegative_antipodal(h)
    c = h.mean.real
    lhs = trilinear_T(h, h, h, cfg, workers)
    rhs = trilinear_T(_ONE, _ONE, _ONE, cfg, workers) * c**3

    budget = lhs.abs_error + rhs.abs_error + _rounding_slack(lhs, rhs)
    margin = rhs.value - lhs.value
    oscillation = sum(abs(a) ** 2 for n, a in h.terms if n != 0)
    constant = oscillation <= CONSTANT_THRESHOLD
    notes = []
    if constant:
        notes.append("constant h: equality case")
        resolved = margin + budget
    else:
        resolved = margin - budget
        if resolved <= 0:
            notes.append("strict inequality not resolved within the error band")
    return VerificationRecord(
        claim="trilinear_maximum",
        anchor="T(h,h,h) <= T(c,c,c), equality iff h is constant",
        inputs={"h": h.to_dict()},
        values={"T_hhh": lhs.value, "T_ccc": rhs.value, "oscillation": oscillation},
        error_budget=budget,
        margin=resolved,
        passed=resolved >= 0 if constant else resolved > 0,
        notes=notes,
    )


def decomposition_check(
    h: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> VerificationRecord:
    """T(h,h,h) = T(c,c,c) + 3T(c,c,g) + 3T(c,g,g) + T(g,g,g) for h = c + g."""
    c = TrigPoly.constant(h.mean)
    g = h - c
    whole = trilinear_T(h, h, h, cfg, workers)
    parts = (
        trilinear_T(c, c, c, cfg, workers)
        + trilinear_T(c, c, g, cfg, workers) * 3
        + trilinear_T(c, g, g, cfg, workers) * 3
        + trilinear_T(g, g, g, cfg, workers)
    )
    return _agreement_record(
        "trilinear_decomposition",
        "T(h,h,h) = T(c,c,c) + 3T(c,c,g) + 3T(c,g,g) + T(g,g,g)",
        {"h": h.to_dict()},
        whole,
        parts,
        slack=_rounding_slack(whole, parts),
    )


def trilinear_gpart_check(
    g: TrigPoly,
    cfg: Optional[QuadConfig] = None,
    cache: Optional[SequenceCache] = None,
    workers: int = 1,
) -> VerificationRecord:
    """T(g,g,g) by the lattice route against the delta double sum."""
    lattice = trilinear_T(g, g, g, cfg, workers)
    spectral = trilinear_T_spectral_gpart(g, cache)
    return _agreement_record(
        "trilinear_gpart",
        "T(g,g,g) = -2 (2 pi)^5 sum g^(n) g^(m) conj g^(n+m) delta_{n,m}",
        {"g": g.to_dict()},
        lattice,
        spectral,
        slack=_rounding_slack(lattice, spectral),
    )


def evaluation_e_check(
    g: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> VerificationRecord:
    """
    E = -B/2 - 3D/2 for real g, with B = F(g,g,1,1,1,1),
    D = int g_1 g_2 omega_4.omega_5 and E = int g_1 g_4 omega_4.omega_5.
    """
    b = sixfold_form(g, g, _ONE, _ONE, _ONE, _ONE, cfg=cfg, workers=workers)
    d = dot_form((g, g, _ONE, _ONE, _ONE, _ONE), 3, 4, cfg, workers)
    e = dot_form((g, _ONE, _ONE, g, _ONE, _ONE), 3, 4, cfg, workers)
    predicted = b * -0.5 - d * 1.5
    record = _agreement_record(
        "evaluation_e",
        "int g_1 g_4 omega_4.omega_5 = -B/2 - 3D/2",
        {"g": g.to_dict()},
        e,
        predicted,
        slack=_rounding_slack(e, b, d),
    )
    record.values.update({"B": b.value, "D": d.value, "E": e.value})
    return record


def psi_second_order(g: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1) -> CertifiedValue:
    """
    int (g_1 + g_2 + g_3 - g_4 - g_5 - g_6)^2 (|omega_4+omega_5+omega_6|^2 - 1) d Sigma,
    the coefficient of eps^2 in Psi(1 + eps g).
    """
    square = g * g
    return (
        weighted_form(square, _ONE, _ONE, _ONE, _ONE, _ONE, cfg=cfg, workers=workers) * 6
        + weighted_form(g, g, _ONE, _ONE, _ONE, _ONE, cfg=cfg, workers=workers) * 12
        - weighted_form(g, _ONE, _ONE, g, _ONE, _ONE, cfg=cfg, workers=workers) * 18
    )


def psi_expansion_check(
    g: TrigPoly,
    cfg: Optional[QuadConfig] = None,
    cache: Optional[SequenceCache] = None,
    workers: int = 1,
) -> VerificationRecord:
    """
    Second-order coefficient of Psi(1 + eps g) equals 12 (2 pi)^5 sum |g^(n)|^2 c_n
    for real mean-zero g.

    Raises:
        PreconditionError: If g is not real with mean zero
    """
    if abs(g.mean) > 1e-12 or not g.is_real():
        raise PreconditionError("g must be real with mean zero")
    direct = psi_second_order(g, cfg, workers)
    closed = CertifiedValue.exact(0.0)
    for n, c in g.terms:
        closed = closed + cn_coefficient(abs(n), cache) * (abs(c) ** 2)
    closed = closed * (12 * FORM_SCALE)
    return _agreement_record(
        "psi_expansion",
        "Psi(1 + eps g) = 12 (2 pi)^5 eps^2 sum |g^(n)|^2 c_n + O(eps^3)",
        {"g": g.to_dict()},
        direct,
        closed,
        slack=_rounding_slack(direct, closed),
    )


def psi_nonnegativity_check(
    f: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1, claim: str = "psi_nonnegative"
) -> VerificationRecord:
    """Psi(f) >= -error."""
    value = psi(f, cfg, workers)
    return VerificationRecord(
        claim=claim,
        anchor="Psi(f) >= 0",
        inputs={"f": f.to_dict()},
        values={"psi": value.value},
        error_budget=value.abs_error,
        margin=value.value + value.abs_error,
        passed=value.value + value.abs_error >= 0,
    )


def _require_local_direction(g: TrigPoly, eps_list: Sequence[float]):
    if abs(g.mean) > 1e-12 or not g.is_real():
        raise PreconditionError("g must be real with mean zero")
    if abs(g.l2_norm() - 1) > 1e-10:
        raise PreconditionError(f"g must have unit L^2 norm, got {g.l2_norm()}")
    if not eps_list or any(not 0 < e <= 0.1 for e in eps_list):
        raise PreconditionError(f"eps values must lie in (0, 0.1], got {list(eps_list)}")


def quadratic_model(
    g: TrigPoly, cfg: Optional[QuadConfig] = None, workers: int = 1
) -> tuple:
    """
    (Phi(1)^6, quadratic coefficient) of Phi(1 + eps g)^6 for real mean-zero g.

    The coefficient is (2 pi)^2 ||1||_2^-6 [X - 3 F_1 ||g||^2 / ||1||^2] with
    X = 3F(g,g,1,1,1,1) + 3F(g_star,g_star,1,1,1,1) + 9F(g,1,1,g_star,1,1)
    and F_1 = F(1,...,1).
    """
    star = g.conj_reflect()
    ones = [_ONE] * 4
    f1 = sixfold_form(*([_ONE] * 6), cfg=cfg, workers=workers)
    x = (
        sixfold_form(g, g, *ones, cfg=cfg, workers=workers) * 3
        + sixfold_form(star, star, *ones, cfg=cfg, workers=workers) * 3
        + sixfold_form(g, _ONE, _ONE, star, _ONE, _ONE, cfg=cfg, workers=workers) * 9
    )
    one_sq = 2 * math.pi
    scale = (2 * math.pi) ** 2 / one_sq**3
    return f1 * scale, (x - f1 * (3 * g.l2_norm() ** 2 / one_sq)) * scale


def local_extremizer_check(
    g: TrigPoly,
    eps_list: Sequence[float] = LOCAL_EPS,
    cfg: Optional[QuadConfig] = None,
    workers: int = 1,
) -> VerificationRecord:
    """
    Phi(1 + eps g) <= Phi(1) for each eps, and the defect from the quadratic
    model decays with observed order >= 2.5.

    The order is measured between consecutive eps values whose defects both
    exceed ten times their error; if none do, the defect is below the error
    band and noted as such.

    Raises:
        PreconditionError: If g is not real, mean-zero, unit-norm or an eps is
            outside (0, 0.1]
    """
    _require_local_direction(g, eps_list)
    eps_sorted = sorted(eps_list, reverse=True)
    base, quadratic = quadratic_model(g, cfg, workers)

    values = {}
    defects = []
    below_margin = math.inf
    budget = 0.0
    for eps in eps_sorted:
        exact = phi_sixth(_ONE + g * eps, cfg, workers)
        model = base + quadratic * eps**2
        defect = exact - model
        defects.append(defect)
        error = exact.abs_error + base.abs_error + _rounding_slack(exact, base)
        below_margin = min(below_margin, base.value - exact.value + error)
        budget = max(budget, error)
        values[str(eps)] = {"phi6": exact.value, "model": model.value, "defect": defect.value}

    orders = []
    for (e1, d1), (e2, d2) in zip(zip(eps_sorted, defects), zip(eps_sorted[1:], defects[1:])):
        if abs(d1.value) > 10 * d1.abs_error and abs(d2.value) > 10 * d2.abs_error:
            orders.append(math.log(abs(d1.value) / abs(d2.value)) / math.log(e1 / e2))

    notes = []
    if orders:
        order_ok = min(orders) >= MIN_DEFECT_ORDER
    else:
        order_ok = True
        notes.append("defect below the error band for every eps")
    logger.debug(f"local model: quadratic coefficient {quadratic}, orders {orders}")
    return VerificationRecord(
        claim="local_extremizer",
        anchor="Phi(1 + eps g) <= Phi(1) with an O(eps^3) quadratic model",
        inputs={"g": g.to_dict(), "eps": eps_sorted},
        values={
            "phi6_one": base.value,
            "quadratic": quadratic.value,
            "by_eps": values,
            "orders": orders,
        },
        error_budget=budget,
        margin=below_margin if order_ok else min(below_margin, min(orders) - MIN_DEFECT_ORDER),
        passed=below_margin >= 0 and order_ok,
        notes=notes,
    )


def local_psi_check(
    g: TrigPoly,
    eps_list: Sequence[float] = LOCAL_EPS,
    cfg: Optional[QuadConfig] = None,
    workers: int = 1,
) -> VerificationRecord:
    """Psi(1 + eps g) >= -error for each eps."""
    _require_local_direction(g, eps_list)
    parts = [
        psi_nonnegativity_check(_ONE + g * eps, cfg, workers, claim=f"psi_local_{eps}")
        for eps in eps_list
    ]
    return VerificationRecord(
        claim="psi_local",
        anchor="Psi(1 + eps g) >= 0 for small eps",
        inputs={"g": g.to_dict(), "eps": list(eps_list)},
        values={p.claim: p.values["psi"] for p in parts},
        error_budget=max(p.error_budget for p in parts),
        margin=min(p.margin for p in parts),
        passed=all(p.passed for p in parts),
    )
