"""
Checkers for operators living on a coalgebra: Rota-Baxter operators,
endomorphism operators and the φ/α commutation advisory
"""
from typing import Optional

from src.core.errors import ArgumentError
from src.core.exact_linear import LinMap, identity, require_endomorphism, scale, tensor
from src.core.structures import CheckReport, EndoOp, HomCoalgebra, RotaBaxterData


def rota_baxter_sides(c: HomCoalgebra, r: LinMap, weight) -> tuple:
    """(R⊗R)Δ and (1⊗R)ΔR + (R⊗1)ΔR + λΔR"""
    one = identity(c.n)
    delta_r = c.delta @ r
    lhs = tensor(r, r) @ c.delta
    rhs = tensor(one, r) @ delta_r + tensor(r, one) @ delta_r + scale(weight, delta_r)
    return lhs, rhs


def check_rota_baxter(c: HomCoalgebra, rb: RotaBaxterData) -> CheckReport:
    """Rota-Baxter identity of weight λ against Δ, plus R∘α = α∘R"""
    require_endomorphism(rb.r, c.n, 'R')
    lhs, rhs = rota_baxter_sides(c, rb.r, rb.weight)
    parts = [
        CheckReport.compare('rota_baxter_identity', lhs, rhs),
        CheckReport.compare('rota_baxter_alpha', rb.r @ c.alpha, c.alpha @ rb.r),
    ]
    return CheckReport.combine('rota_baxter', parts)


def check_endo_op(c: HomCoalgebra, e: EndoOp, phi: Optional[LinMap] = None) -> CheckReport:
    """ΔT = (T⊗T)Δ and Tα = αT; T² = T and Tφ = φT when flagged"""
    t = e.t
    require_endomorphism(t, c.n, 'T')
    if e.require_commute_phi and phi is None:
        raise ArgumentError("endomorphism operator requires commutation with phi, but no phi was given")

    parts = [
        CheckReport.compare('endo_cobracket', c.delta @ t, tensor(t, t) @ c.delta),
        CheckReport.compare('endo_alpha', t @ c.alpha, c.alpha @ t),
    ]
    if e.require_idempotent:
        parts.append(CheckReport.compare('endo_idempotent', t @ t, t))
    if e.require_commute_phi:
        require_endomorphism(phi, c.n, 'phi')
        parts.append(CheckReport.compare('endo_phi', t @ phi, phi @ t))
    return CheckReport.combine('endo_operator', parts)


def check_phi_alpha_commute(phi: LinMap, alpha: LinMap, advisory: bool = True) -> CheckReport:
    """φ∘α = α∘φ; advisory unless a construction needs it"""
    return CheckReport.compare('phi_alpha_commute', phi @ alpha, alpha @ phi, advisory=advisory)


def check_operators_commute(name: str, f: LinMap, g: LinMap) -> CheckReport:
    return CheckReport.compare(name, f @ g, g @ f)
