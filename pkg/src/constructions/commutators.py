"""
Commutator functors: Hom-pre-Lie and Hom-coassociative CoDer pairs to
Hom-Lie CoDer pairs via Δ ↦ Δ − τ∘Δ
"""
from src.core.exact_linear import LinMap, tau
from src.core.logger import log_errors
from src.core.structures import CoalgebraFlavor, CoDerPair, HomCoalgebra
from src.checkers.coalgebra_axioms import (
    check_coderivation, check_hom_coassoc, check_hom_pre_lie
)
from src.checkers.bundle_checker import require_passing


def antisymmetrize(delta: LinMap) -> LinMap:
    """Δ − τ∘Δ"""
    n = delta.domain.dim
    return delta - tau(n) @ delta


def _commutator_pair(p: CoDerPair, construction: str) -> CoDerPair:
    coalg = HomCoalgebra(antisymmetrize(p.delta), p.alpha, CoalgebraFlavor.LIE)
    metadata = {'construction': construction, 'source_flavor': p.flavor.value}
    return CoDerPair(coalg, p.phi, metadata)


@log_errors('construction', 'commutator_pre_lie_to_lie')
def commutator_pre_lie_to_lie(p: CoDerPair) -> CoDerPair:
    require_passing('commutator_pre_lie_to_lie', [
        check_hom_pre_lie(p.coalg),
        check_coderivation(p.coalg, p.phi),
    ])
    return _commutator_pair(p, 'commutator_pre_lie_to_lie')


@log_errors('construction', 'commutator_ass_to_lie')
def commutator_ass_to_lie(p: CoDerPair) -> CoDerPair:
    require_passing('commutator_ass_to_lie', [
        check_hom_coassoc(p.coalg),
        check_coderivation(p.coalg, p.phi),
    ])
    return _commutator_pair(p, 'commutator_ass_to_lie')
