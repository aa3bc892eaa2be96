"""
Coalgebra-side identity checkers

Each checker evaluates both sides of an identity as exact matrices and
returns a CheckReport; a failing report carries the first basis input on
which the sides differ.
"""
from src.core.errors import DimensionError
from src.core.exact_linear import (
    LinMap, TensorSpace, add_all, compose_all, identity, require_endomorphism, tau, tau12, tensor, xi,
    xi_squared
)
from src.core.structures import CheckReport, CoDerPair, HomCoalgebra


def check_skew(c: HomCoalgebra) -> CheckReport:
    """Δ = −τ∘Δ"""
    return CheckReport.compare('skew', c.delta, -(tau(c.n) @ c.delta))


def co_jacobi_map(c: HomCoalgebra) -> LinMap:
    """(1+ξ+ξ²)∘(α⊗Δ)∘Δ : L → L⊗L⊗L"""
    inner = tensor(c.alpha, c.delta) @ c.delta
    return add_all(inner, xi(c.n) @ inner, xi_squared(c.n) @ inner)


def check_hom_co_jacobi(c: HomCoalgebra) -> CheckReport:
    return CheckReport.vanishes('hom_co_jacobi', co_jacobi_map(c))


def check_hom_coassoc(c: HomCoalgebra) -> CheckReport:
    """(α⊗Δ)∘Δ = (Δ⊗α)∘Δ"""
    lhs = tensor(c.alpha, c.delta) @ c.delta
    rhs = tensor(c.delta, c.alpha) @ c.delta
    return CheckReport.compare('hom_coassociativity', lhs, rhs)


def check_multiplicative(c: HomCoalgebra) -> CheckReport:
    """(α⊗α)∘Δ = Δ∘α"""
    return CheckReport.compare('multiplicative', tensor(c.alpha, c.alpha) @ c.delta, c.delta @ c.alpha)


def pre_lie_defect(c: HomCoalgebra) -> LinMap:
    """(1 − τ¹²)((Δ⊗α)Δ − (α⊗Δ)Δ)"""
    associator = tensor(c.delta, c.alpha) @ c.delta - tensor(c.alpha, c.delta) @ c.delta
    return associator - tau12(c.n) @ associator


def check_hom_pre_lie(c: HomCoalgebra) -> CheckReport:
    return CheckReport.vanishes('hom_pre_lie', pre_lie_defect(c))


def coderivation_defect(c: HomCoalgebra, phi: LinMap) -> LinMap:
    """Δφ − (φ⊗α)Δ − (α⊗φ)Δ"""
    return c.delta @ phi - tensor(phi, c.alpha) @ c.delta - tensor(c.alpha, phi) @ c.delta


def check_coderivation(c: HomCoalgebra, phi: LinMap) -> CheckReport:
    """Δ∘φ = (φ⊗α)∘Δ + (α⊗φ)∘Δ"""
    require_endomorphism(phi, c.n, 'phi')
    lhs = c.delta @ phi
    rhs = tensor(phi, c.alpha) @ c.delta + tensor(c.alpha, phi) @ c.delta
    return CheckReport.compare('coderivation', lhs, rhs)


def check_pair_morphism(src: CoDerPair, dst: CoDerPair, h: LinMap) -> CheckReport:
    """(h⊗h)Δ₁ = Δ₂h, hα₁ = α₂h and hφ₁ = φ₂h"""
    if h.domain != TensorSpace((src.n,)) or h.codomain != TensorSpace((dst.n,)):
        raise DimensionError("morphism must map the source space to the target space",
                             f"{h.codomain} <- {h.domain}", f"K^{dst.n} <- K^{src.n}")
    parts = [
        CheckReport.compare('cobracket_morphism', tensor(h, h) @ src.delta, dst.delta @ h),
        CheckReport.compare('alpha_morphism', h @ src.alpha, dst.alpha @ h),
        CheckReport.compare('phi_morphism', h @ src.phi, dst.phi @ h),
    ]
    return CheckReport.combine('pair_morphism', parts)


def classical_co_jacobi_map(c: HomCoalgebra) -> LinMap:
    """(1+ξ+ξ²)∘(1⊗Δ)∘Δ, the untwisted co-Jacobi operator"""
    one = identity(c.n)
    inner = compose_all(tensor(one, c.delta), c.delta)
    return add_all(inner, xi(c.n) @ inner, xi_squared(c.n) @ inner)
