"""
Finite-dimensional duality between coalgebra-side and algebra-side structures

Dual bases are identified with the canonical bases, so every dual structure
map is a plain matrix transpose. The dual twist is αᵀ, never α.
"""
import hashlib
from dataclasses import dataclass
from typing import Tuple, Union

from src.core.errors import ArgumentError
from src.core.exact_linear import format_scalar
from src.core.logger import log_errors
from src.core.structures import (
    AlgebraFlavor, CoalgebraFlavor, CoDerComodule, CoDerPair, Comodule, DerPair,
    HomAlgebra, HomCoalgebra, Representation
)
from src.checkers.bundle_checker import (
    check_coder_comodule_full, check_coder_pair, check_der_pair, check_representation_full,
    require_passing
)


BASIS_NOTE = "dual basis e_i* identified with e_i; structure maps transposed, twist dualized as alpha^T"

COALGEBRA_TO_ALGEBRA = {
    CoalgebraFlavor.LIE: AlgebraFlavor.LIE,
    CoalgebraFlavor.COASSOCIATIVE: AlgebraFlavor.ASSOCIATIVE,
    CoalgebraFlavor.PRE_LIE: AlgebraFlavor.UNCHECKED,
    CoalgebraFlavor.UNCHECKED: AlgebraFlavor.UNCHECKED,
}

ALGEBRA_TO_COALGEBRA = {
    AlgebraFlavor.LIE: CoalgebraFlavor.LIE,
    AlgebraFlavor.ASSOCIATIVE: CoalgebraFlavor.COASSOCIATIVE,
    AlgebraFlavor.UNCHECKED: CoalgebraFlavor.UNCHECKED,
}

Dualizable = Union[HomCoalgebra, HomAlgebra, CoDerPair, DerPair, CoDerComodule, Representation]


@dataclass(frozen=True)
class DualityCertificate:
    """Records which structure was dualized into which, and under what convention"""
    source_id: str
    target_id: str
    direction: str
    basis_note: str = BASIS_NOTE

    def to_dict(self) -> dict:
        return {
            'source_id': self.source_id,
            'target_id': self.target_id,
            'direction': self.direction,
            'basis_note': self.basis_note,
        }


def structure_id(obj: Dualizable) -> str:
    """Short content digest of the structure matrices"""
    digest = hashlib.sha256()
    digest.update(type(obj).__name__.encode())
    for name, f in _structure_maps(obj):
        digest.update(name.encode())
        digest.update(str(f.shape).encode())
        digest.update(','.join(format_scalar(x) for x in f.entries.flat).encode())
    return digest.hexdigest()[:16]


def _structure_maps(obj: Dualizable):
    if isinstance(obj, HomCoalgebra):
        return [('delta', obj.delta), ('alpha', obj.alpha)]
    if isinstance(obj, HomAlgebra):
        return [('mu', obj.mu), ('alpha', obj.alpha)]
    if isinstance(obj, CoDerPair):
        return _structure_maps(obj.coalg) + [('phi', obj.phi)]
    if isinstance(obj, DerPair):
        return _structure_maps(obj.alg) + [('phi', obj.phi)]
    if isinstance(obj, CoDerComodule):
        return _structure_maps(obj.pair) + [('rho', obj.rho), ('beta', obj.beta), ('phi_m', obj.phi_m)]
    return _structure_maps(obj.pair) + [('action', obj.action), ('a_op', obj.a_op), ('phi_v', obj.phi_v)]


def dualize_coalgebra(c: HomCoalgebra) -> HomAlgebra:
    """μ = Δᵀ, α* = αᵀ"""
    return HomAlgebra(c.delta.transpose(), c.alpha.transpose(), COALGEBRA_TO_ALGEBRA[c.flavor])


def dualize_algebra(a: HomAlgebra) -> HomCoalgebra:
    """Δ = μᵀ, α* = αᵀ"""
    return HomCoalgebra(a.mu.transpose(), a.alpha.transpose(), ALGEBRA_TO_COALGEBRA[a.flavor])


def _dual_metadata(source, direction: str) -> dict:
    metadata = {k: v for k, v in source.metadata.items() if k != 'duality'}
    metadata['duality'] = {'direction': direction, 'source_id': structure_id(source), 'basis_note': BASIS_NOTE}
    return metadata


@log_errors('duality', 'dualize_coder_pair')
def dualize_coder_pair(p: CoDerPair) -> DerPair:
    """Der pair (L*, Δᵀ, φᵀ, αᵀ) of a valid CoDer pair"""
    require_passing('dualize_coder_pair', check_coder_pair(p))
    return DerPair(dualize_coalgebra(p.coalg), p.phi.transpose(), _dual_metadata(p, 'coalgebra->algebra'))


@log_errors('duality', 'dualize_der_pair')
def dualize_der_pair(p: DerPair) -> CoDerPair:
    require_passing('dualize_der_pair', check_der_pair(p))
    return CoDerPair(dualize_algebra(p.alg), p.phi.transpose(), _dual_metadata(p, 'algebra->coalgebra'))


@log_errors('duality', 'dualize_comodule')
def dualize_comodule(m: CoDerComodule) -> Representation:
    """
    Representation of the dual Der pair on M*

    The action is ρᵀ: L*⊗M* → M*, with A = βᵀ and φ_V = φ_Mᵀ. For the left
    coaction this equals the negated pairing against the right coaction
    (the two signs cancel).
    """
    require_passing('dualize_comodule', check_coder_comodule_full(m))
    pair = dualize_coder_pair(m.pair)
    return Representation(pair, m.rho.transpose(), m.beta.transpose(), m.phi_m.transpose(),
                          _dual_metadata(m, 'comodule->representation'))


@log_errors('duality', 'dualize_representation')
def dualize_representation(rep: Representation) -> CoDerComodule:
    require_passing('dualize_representation', check_representation_full(rep))
    pair = dualize_der_pair(rep.pair)
    comod = Comodule(pair.coalg, rep.action.transpose(), rep.a_op.transpose())
    return CoDerComodule(comod, rep.phi_v.transpose(), pair, _dual_metadata(rep, 'representation->comodule'))


def dualize(obj: Dualizable) -> Tuple[Dualizable, DualityCertificate]:
    """Dualize any supported structure and certify the direction taken"""
    if isinstance(obj, HomCoalgebra):
        target, direction = dualize_coalgebra(obj), 'coalgebra->algebra'
    elif isinstance(obj, HomAlgebra):
        target, direction = dualize_algebra(obj), 'algebra->coalgebra'
    elif isinstance(obj, CoDerPair):
        target, direction = dualize_coder_pair(obj), 'coalgebra->algebra'
    elif isinstance(obj, DerPair):
        target, direction = dualize_der_pair(obj), 'algebra->coalgebra'
    elif isinstance(obj, CoDerComodule):
        target, direction = dualize_comodule(obj), 'comodule->representation'
    elif isinstance(obj, Representation):
        target, direction = dualize_representation(obj), 'representation->comodule'
    else:
        raise ArgumentError(f"cannot dualize a {type(obj).__name__}")
    return target, DualityCertificate(structure_id(obj), structure_id(target), direction)
