"""
Algebra-side identity checkers (Hom-Lie and Hom-associative algebras, derivations)
"""
from src.core.errors import DimensionError
from src.core.exact_linear import LinMap, TensorSpace, add_all, tau, tensor, xi, xi_squared
from src.core.structures import CheckReport, DerPair, HomAlgebra


def _skew(a: HomAlgebra) -> CheckReport:
    return CheckReport.compare('skew', a.mu @ tau(a.n), -a.mu)


def _multiplicative(a: HomAlgebra) -> CheckReport:
    return CheckReport.compare('multiplicative', a.alpha @ a.mu, a.mu @ tensor(a.alpha, a.alpha))


def hom_jacobi_map(a: HomAlgebra) -> LinMap:
    """μ∘(α⊗μ)∘(1+ξ+ξ²) : L⊗L⊗L → L"""
    outer = a.mu @ tensor(a.alpha, a.mu)
    return add_all(outer, outer @ xi(a.n), outer @ xi_squared(a.n))


def check_hom_lie_algebra(a: HomAlgebra) -> CheckReport:
    """Skew-symmetry, multiplicativity and the cyclic Hom-Jacobi identity"""
    parts = [
        _skew(a),
        _multiplicative(a),
        CheckReport.vanishes('hom_jacobi', hom_jacobi_map(a)),
    ]
    return CheckReport.combine('hom_lie_algebra', parts)


def check_hom_assoc_algebra(a: HomAlgebra) -> CheckReport:
    """μ(μ⊗α) = μ(α⊗μ) plus multiplicativity"""
    parts = [
        CheckReport.compare('hom_associativity', a.mu @ tensor(a.mu, a.alpha), a.mu @ tensor(a.alpha, a.mu)),
        _multiplicative(a),
    ]
    return CheckReport.combine('hom_assoc_algebra', parts)


def derivation_defect(a: HomAlgebra, phi: LinMap) -> LinMap:
    """φμ − μ(φ⊗α) − μ(α⊗φ)"""
    return phi @ a.mu - a.mu @ tensor(phi, a.alpha) - a.mu @ tensor(a.alpha, phi)


def check_derivation(a: HomAlgebra, phi: LinMap) -> CheckReport:
    """φ∘μ = μ∘(φ⊗α) + μ∘(α⊗φ)"""
    space = TensorSpace((a.n,))
    if phi.domain != space or phi.codomain != space:
        raise DimensionError("phi must be an operator on the algebra", f"{phi.codomain} <- {phi.domain}", space)
    rhs = a.mu @ tensor(phi, a.alpha) + a.mu @ tensor(a.alpha, phi)
    return CheckReport.compare('derivation', phi @ a.mu, rhs)


def check_der_pair_morphism(src: DerPair, dst: DerPair, h: LinMap) -> CheckReport:
    """hμ₁ = μ₂(h⊗h), hα₁ = α₂h and hφ₁ = φ₂h"""
    if h.domain != TensorSpace((src.n,)) or h.codomain != TensorSpace((dst.n,)):
        raise DimensionError("morphism must map the source space to the target space",
                             f"{h.codomain} <- {h.domain}", f"K^{dst.n} <- K^{src.n}")
    parts = [
        CheckReport.compare('bracket_morphism', h @ src.mu, dst.mu @ tensor(h, h)),
        CheckReport.compare('alpha_morphism', h @ src.alpha, dst.alpha @ h),
        CheckReport.compare('phi_morphism', h @ src.phi, dst.phi @ h),
    ]
    return CheckReport.combine('der_pair_morphism', parts)
