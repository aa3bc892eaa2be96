"""
Comodules and representations built from a pair, and the semidirect
products they define
"""
from typing import Optional

from src.core.errors import DimensionError
from src.core.exact_linear import (
    LinMap, TensorSpace, block_diagonal, perm_operator, regroup, tau, tensor, xi_squared, zero_map
)
from src.core.logger import log_errors
from src.core.structures import (
    AlgebraFlavor, CoalgebraFlavor, CoDerComodule, CoDerPair, Comodule, DerPair, HomAlgebra,
    HomCoalgebra, Representation
)
from src.checkers.bundle_checker import check_coder_pair, check_der_pair, require_passing
from src.checkers.operator_axioms import check_phi_alpha_commute
from src.constructions.sums import SumSpace, block_embeddings


LEFT_COACTION_NOTE = (
    "left coaction M -> L⊗M; the right-coaction formula "
    "(α⊗Δ) − ξ(Δ⊗α) is converted by −τ across the L/M boundary"
)


@log_errors('construction', 'adjoint_comodule')
def adjoint_comodule(p: CoDerPair) -> CoDerComodule:
    """
    Adjoint CoDer comodule on M = L⊗L

    ρ = (Δ⊗α) − ξ²∘(α⊗Δ), β = α⊗α, φ_M = φ⊗α + α⊗φ. Needs a multiplicative
    Hom-Lie CoDer pair whose φ commutes with α.
    """
    require_passing('adjoint_comodule', check_coder_pair(p) + [
        check_phi_alpha_commute(p.phi, p.alpha, advisory=False),
    ])
    n = p.n
    rho = tensor(p.delta, p.alpha) - xi_squared(n) @ tensor(p.alpha, p.delta)
    beta = tensor(p.alpha, p.alpha)
    phi_m = tensor(p.phi, p.alpha) + tensor(p.alpha, p.phi)

    m_space = TensorSpace((n * n,))
    comod = Comodule(
        p.coalg,
        regroup(rho, m_space, TensorSpace((n, n * n))),
        regroup(beta, m_space, m_space),
    )
    return CoDerComodule(comod, regroup(phi_m, m_space, m_space), p,
                         {'construction': 'adjoint_comodule', 'module_space': 'L⊗L',
                          'convention': LEFT_COACTION_NOTE})


@log_errors('construction', 'regular_comodule')
def regular_comodule(p: CoDerPair) -> CoDerComodule:
    """M = L with ρ = Δ, β = α, φ_M = φ"""
    require_passing('regular_comodule', check_coder_pair(p))
    comod = Comodule(p.coalg, p.delta, p.alpha)
    return CoDerComodule(comod, p.phi, p, {'construction': 'regular_comodule'})


def trivial_comodule(p: CoDerPair, beta: LinMap, phi_m: Optional[LinMap] = None) -> CoDerComodule:
    """Zero coaction on K^m; every (β, φ_M) is admissible"""
    m = beta.domain.dim
    comod = Comodule(p.coalg, zero_map(m, TensorSpace((p.n, m))), beta)
    phi_m = phi_m if phi_m is not None else zero_map(m, m)
    return CoDerComodule(comod, phi_m, p, {'construction': 'trivial_comodule'})


@log_errors('construction', 'semidirect_coalgebra')
def semidirect_coalgebra(p: CoDerPair, m: CoDerComodule) -> CoDerPair:
    """
    CoDer pair on L⊕M with Δ̃(x, m) = Δ(x) + ρ(m) − τ(ρ(m))

    ρ(m) ∈ L⊗M is embedded into the (L, M) block and its flip into the
    (M, L) block. The inputs are not validated: the output passes the Hom-Lie
    CoDer checks exactly when the comodule does.
    """
    if m.pair.coalg != p.coalg or not (m.pair.phi == p.phi):
        raise DimensionError("comodule does not live over the given CoDer pair")

    s = SumSpace(p.n, m.m)
    i_l, i_m = block_embeddings(s)
    rho_part = tensor(i_l, i_m) @ m.rho @ s.project_right()
    delta = (tensor(i_l, i_l) @ p.delta @ s.project_left()
             + rho_part
             - tau(s.dim) @ rho_part)

    coalg = HomCoalgebra(delta, block_diagonal(p.alpha, m.beta), CoalgebraFlavor.LIE)
    return CoDerPair(coalg, block_diagonal(p.phi, m.phi_m),
                     {'construction': 'semidirect_coalgebra', 'summand_dims': [p.n, m.m]})


@log_errors('construction', 'adjoint_representation')
def adjoint_representation(p: DerPair) -> Representation:
    """V = L, action = μ, A = α, φ_V = φ"""
    require_passing('adjoint_representation', check_der_pair(p))
    return Representation(p, p.mu, p.alpha, p.phi, {'construction': 'adjoint_representation'})


@log_errors('construction', 'semidirect_algebra')
def semidirect_algebra(p: DerPair, rep: Representation) -> DerPair:
    """
    Der pair on L⊕V with [x+X, y+Y] = [x,y] + x·Y − y·X, twist α⊕A, φ⊕φ_V

    Like the coalgebra side, the representation is not validated here.
    """
    if rep.pair.alg != p.alg or not (rep.pair.phi == p.phi):
        raise DimensionError("representation does not live over the given Der pair")

    n, v = p.n, rep.v
    s = SumSpace(n, v)
    i_l, i_v = block_embeddings(s)
    p_l, p_v = s.project_left(), s.project_right()
    swap = perm_operator((v, n), (1, 0))

    mu = (i_l @ p.mu @ tensor(p_l, p_l)
          + i_v @ rep.action @ tensor(p_l, p_v)
          - i_v @ rep.action @ swap @ tensor(p_v, p_l))
    alg = HomAlgebra(mu, block_diagonal(p.alpha, rep.a_op), AlgebraFlavor.LIE)
    return DerPair(alg, block_diagonal(p.phi, rep.phi_v),
                   {'construction': 'semidirect_algebra', 'summand_dims': [n, v]})
