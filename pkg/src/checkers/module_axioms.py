"""
Comodule, CoDer comodule and representation checkers

Coactions are left coactions ρ: M → L⊗M; representations act L⊗V → V.
"""
from src.core.exact_linear import perm_operator, tensor
from src.core.structures import CheckReport, Comodule, CoDerComodule, Representation


def check_comodule(m: Comodule) -> CheckReport:
    """
    ρβ = (α⊗β)ρ and (Δ⊗β)ρ = (α⊗ρ)ρ − (τ⊗1)(α⊗ρ)ρ
    """
    n, dim_m = m.base.n, m.m
    alpha, delta = m.base.alpha, m.base.delta
    swap_l = perm_operator((n, n, dim_m), (1, 0, 2))

    twice = tensor(alpha, m.rho) @ m.rho
    parts = [
        CheckReport.compare('coaction_twist', m.rho @ m.beta, tensor(alpha, m.beta) @ m.rho),
        CheckReport.compare('coaction_jacobi', tensor(delta, m.beta) @ m.rho, twice - swap_l @ twice),
    ]
    return CheckReport.combine('comodule', parts)


def check_coder_comodule(m: CoDerComodule) -> CheckReport:
    """ρφ_M = (φ_L⊗β)ρ + (α⊗φ_M)ρ"""
    pair = m.pair
    rhs = tensor(pair.phi, m.beta) @ m.rho + tensor(pair.alpha, m.phi_m) @ m.rho
    return CheckReport.compare('coder_comodule', m.rho @ m.phi_m, rhs)


def check_representation(rep: Representation) -> CheckReport:
    """
    Hom-Lie representation laws plus derivation compatibility:

      action(αx ⊗ Aw) = A(action(x ⊗ w))
      action([x,y] ⊗ Aw) = action(αx ⊗ action(y⊗w)) − action(αy ⊗ action(x⊗w))
      φ_V∘action(x⊗·) − action(αx ⊗ φ_V·) = action(φ_L x ⊗ A·)
    """
    pair = rep.pair
    n, v = pair.n, rep.v
    action, a_op, alpha = rep.action, rep.a_op, pair.alpha
    swap_l = perm_operator((n, n, v), (1, 0, 2))

    nested = action @ tensor(alpha, action)
    parts = [
        CheckReport.compare('action_twist', action @ tensor(alpha, a_op), a_op @ action),
        CheckReport.compare('action_bracket', action @ tensor(pair.mu, a_op), nested - nested @ swap_l),
        CheckReport.compare('action_derivation',
                            rep.phi_v @ action - action @ tensor(alpha, rep.phi_v),
                            action @ tensor(pair.phi, a_op)),
    ]
    return CheckReport.combine('representation', parts)
