"""
Identity checkers

Every checker returns a CheckReport decided by exact matrix equality.
"""

from .coalgebra_axioms import (
    check_skew, check_hom_co_jacobi, check_hom_coassoc, check_multiplicative,
    check_hom_pre_lie, check_coderivation, check_pair_morphism
)
from .algebra_axioms import (
    check_hom_lie_algebra, check_hom_assoc_algebra, check_derivation, check_der_pair_morphism
)
from .module_axioms import check_comodule, check_coder_comodule, check_representation
from .operator_axioms import check_rota_baxter, check_endo_op, check_phi_alpha_commute
from .bundle_checker import (
    check_bundle, check_coalgebra, check_coder_pair, check_der_pair, check_coder_comodule_full,
    check_representation_full, require_passing
)

__all__ = [
    'check_skew',
    'check_hom_co_jacobi',
    'check_hom_coassoc',
    'check_multiplicative',
    'check_hom_pre_lie',
    'check_coderivation',
    'check_pair_morphism',
    'check_hom_lie_algebra',
    'check_hom_assoc_algebra',
    'check_derivation',
    'check_der_pair_morphism',
    'check_comodule',
    'check_coder_comodule',
    'check_representation',
    'check_rota_baxter',
    'check_endo_op',
    'check_phi_alpha_commute',
    'check_bundle',
    'check_coalgebra',
    'check_coder_pair',
    'check_der_pair',
    'check_coder_comodule_full',
    'check_representation_full',
    'require_passing',
]
