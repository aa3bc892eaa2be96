"""
Solvers: linear spaces of (co)derivations, grid search for quadratic
operator identities, and seeded instance generation
"""

from .operator_spaces import (
    OperatorSpaceBasis, coderivation_basis, derivation_basis, coderivation_operator,
    derivation_operator, commutation_operator, nullity
)
from .operator_search import OperatorKind, search_operators, parse_grid, candidate_count
from .seed_library import SEEDS, CLASSICAL_LIE_SEEDS, Seed, get_seed, seeds_for
from .generator import (
    Strategy, GenerationRecipe, InstanceGenerator, generate, generate_many, default_strategy, yau_twist, change_of_basis
)

__all__ = [
    'OperatorSpaceBasis',
    'coderivation_basis',
    'derivation_basis',
    'coderivation_operator',
    'derivation_operator',
    'commutation_operator',
    'nullity',
    'OperatorKind',
    'search_operators',
    'parse_grid',
    'candidate_count',
    'SEEDS',
    'CLASSICAL_LIE_SEEDS',
    'Seed',
    'get_seed',
    'seeds_for',
    'Strategy',
    'GenerationRecipe',
    'InstanceGenerator',
    'generate',
    'generate_many',
    'default_strategy',
    'yau_twist',
    'change_of_basis',
]
