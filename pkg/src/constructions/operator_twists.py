"""
Cobracket twists by operators: Rota-Baxter twists to Hom-pre-Lie CoDer
pairs and endomorphism-operator twists to Hom-Lie CoDer pairs
"""
from fractions import Fraction

from src.core.errors import ArgumentError
from src.core.exact_linear import format_scalar, identity, tau, tensor
from src.core.logger import log_errors
from src.core.structures import (
    CheckReport, CoalgebraFlavor, CoDerPair, EndoOp, HomCoalgebra, RotaBaxterData
)
from src.checkers.coalgebra_axioms import check_coderivation, check_hom_coassoc
from src.checkers.operator_axioms import check_endo_op, check_operators_commute, check_rota_baxter
from src.checkers.bundle_checker import require_passing


SUPPORTED_WEIGHTS = (Fraction(0), Fraction(-1))


@log_errors('construction', 'rb_twist')
def rb_twist(p: CoDerPair, rb: RotaBaxterData) -> CoDerPair:
    """
    Hom-pre-Lie CoDer pair from a Hom-coassociative one and a Rota-Baxter operator

    λ = −1: Δ̃ = (R⊗1)Δ − τ(1⊗R)Δ − Δ
    λ = 0:  Δ̃ = (R⊗1)Δ − τ(1⊗R)Δ
    R must commute with α and with φ.
    """
    if rb.weight not in SUPPORTED_WEIGHTS:
        raise ArgumentError(f"unsupported Rota-Baxter weight {format_scalar(rb.weight)}: "
                            f"only weights 0 and -1 are supported")
    require_passing('rb_twist', [
        check_hom_coassoc(p.coalg),
        check_coderivation(p.coalg, p.phi),
        check_rota_baxter(p.coalg, rb),
        check_operators_commute('rota_baxter_phi', rb.r, p.phi),
    ])

    one = identity(p.n)
    delta = tensor(rb.r, one) @ p.delta - tau(p.n) @ tensor(one, rb.r) @ p.delta
    if rb.weight == -1:
        delta = delta - p.delta

    coalg = HomCoalgebra(delta, p.alpha, CoalgebraFlavor.PRE_LIE)
    return CoDerPair(coalg, p.phi, {'construction': 'rb_twist', 'lambda': format_scalar(rb.weight)})


def verify_rb_commutation(p: CoDerPair, rb: RotaBaxterData) -> CheckReport:
    """
    (R⊗1)(α⊗φ)Δ = (α⊗φ)(R⊗1)Δ  and  τ(1⊗R)(α⊗φ)Δ = (φ⊗α)τ(1⊗R)Δ
    """
    one = identity(p.n)
    r_left = tensor(rb.r, one)
    r_flip = tau(p.n) @ tensor(one, rb.r)
    alpha_phi = tensor(p.alpha, p.phi)
    parts = [
        CheckReport.compare('rb_commutation_left', r_left @ alpha_phi @ p.delta, alpha_phi @ r_left @ p.delta),
        CheckReport.compare('rb_commutation_flip', r_flip @ alpha_phi @ p.delta,
                            tensor(p.phi, p.alpha) @ r_flip @ p.delta),
    ]
    return CheckReport.combine('rb_commutation', parts)


@log_errors('construction', 'endo_twist')
def endo_twist(p: CoDerPair, e: EndoOp) -> CoDerPair:
    """
    Hom-Lie CoDer pair Δ_c = (1⊗T)Δ − (T⊗1)τΔ

    T must be an idempotent endomorphism operator commuting with α and φ,
    whatever flags `e` carries.
    """
    strict = EndoOp(e.t, require_idempotent=True, require_commute_phi=True)
    require_passing('endo_twist', [
        check_hom_coassoc(p.coalg),
        check_coderivation(p.coalg, p.phi),
        check_endo_op(p.coalg, strict, p.phi),
    ])

    one = identity(p.n)
    delta = tensor(one, e.t) @ p.delta - tensor(e.t, one) @ tau(p.n) @ p.delta
    coalg = HomCoalgebra(delta, p.alpha, CoalgebraFlavor.LIE)
    return CoDerPair(coalg, p.phi, {'construction': 'endo_twist'})
