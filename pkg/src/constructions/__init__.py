"""
Structure-building constructions

Each construction validates its hypotheses and refuses with the failing
reports, except the semidirect products, whose outputs are meant to be
re-checked.
"""

from .sums import (
    SumSpace, block_embeddings, direct_sum_coalgebras, direct_sum_coder_pairs,
    direct_sum_algebras, direct_sum_der_pairs, direct_sum_comodules
)
from .semidirect import (
    adjoint_comodule, regular_comodule, trivial_comodule, semidirect_coalgebra,
    adjoint_representation, semidirect_algebra
)
from .commutators import commutator_pre_lie_to_lie, commutator_ass_to_lie
from .operator_twists import rb_twist, verify_rb_commutation, endo_twist
from .duality import (
    DualityCertificate, dualize, dualize_coalgebra, dualize_algebra, dualize_coder_pair,
    dualize_der_pair, dualize_comodule, dualize_representation
)

__all__ = [
    'SumSpace',
    'block_embeddings',
    'direct_sum_coalgebras',
    'direct_sum_coder_pairs',
    'direct_sum_algebras',
    'direct_sum_der_pairs',
    'direct_sum_comodules',
    'adjoint_comodule',
    'regular_comodule',
    'trivial_comodule',
    'semidirect_coalgebra',
    'adjoint_representation',
    'semidirect_algebra',
    'commutator_pre_lie_to_lie',
    'commutator_ass_to_lie',
    'rb_twist',
    'verify_rb_commutation',
    'endo_twist',
    'DualityCertificate',
    'dualize',
    'dualize_coalgebra',
    'dualize_algebra',
    'dualize_coder_pair',
    'dualize_der_pair',
    'dualize_comodule',
    'dualize_representation',
]
