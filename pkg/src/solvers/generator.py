"""
Seeded generation of valid CoDer pairs for closure testing

Every strategy builds a candidate from the seed library and the
constructions, then the full checker suite decides. Candidates that fail
are redrawn up to the configured attempt limit; nothing unvalidated is
ever returned.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional

import numpy as np

from src.core.config import get_config
from src.core.errors import AlgebraError, ArgumentError, GenerationError
from src.core.exact_linear import (
    LinMap, ONE, diagonal, from_matrix, identity, inverse, is_invertible, tensor, zero_map, zeros
)
from src.core.logger import get_logger, log_errors
from src.core.structures import (
    CoalgebraFlavor, CoDerPair, HomCoalgebra, RotaBaxterData, StructureBundle, all_passed
)
from src.checkers.bundle_checker import check_bundle
from src.checkers.coalgebra_axioms import check_multiplicative
from src.constructions.semidirect import regular_comodule, semidirect_coalgebra, trivial_comodule
from src.constructions.sums import direct_sum_coder_pairs, direct_sum_comodules
from src.constructions.operator_twists import rb_twist
from src.solvers.operator_search import OperatorKind, search_operators
from src.solvers.operator_spaces import coderivation_basis
from src.solvers.seed_library import CLASSICAL_LIE_SEEDS, SEEDS, Seed, abelian, seeds_for


class Strategy(str, Enum):
    ZERO = 'zero'
    CLASSICAL_DUAL = 'classical_dual'
    TWIST = 'twist'
    SUM_CLOSURE = 'sum_closure'
    SEMIDIRECT_CLOSURE = 'semidirect_closure'


@dataclass(frozen=True)
class GenerationRecipe:
    strategy: Strategy
    seed: int
    dim: int
    flavor: CoalgebraFlavor = CoalgebraFlavor.LIE

    def __post_init__(self):
        object.__setattr__(self, 'strategy', Strategy(self.strategy))
        object.__setattr__(self, 'flavor', CoalgebraFlavor(self.flavor))
        if self.flavor == CoalgebraFlavor.UNCHECKED:
            raise ArgumentError("cannot generate unchecked structures")
        if int(self.dim) < 1:
            raise ArgumentError(f"dimension must be positive, got {self.dim}")

    def to_dict(self) -> dict:
        return {'strategy': self.strategy.value, 'seed': int(self.seed), 'dim': int(self.dim),
                'flavor': self.flavor.value}


def yau_twist(c: HomCoalgebra, beta: LinMap) -> HomCoalgebra:
    """(Δ, α) ↦ (Δβ, αβ) for a coalgebra morphism β commuting with α"""
    return HomCoalgebra(c.delta @ beta, c.alpha @ beta, c.flavor)


def change_of_basis(c: HomCoalgebra, p: LinMap) -> HomCoalgebra:
    """Δ ↦ (P⊗P)ΔP⁻¹, α ↦ PαP⁻¹"""
    p_inv = inverse(p)
    return HomCoalgebra(tensor(p, p) @ c.delta @ p_inv, p @ c.alpha @ p_inv, c.flavor)


class InstanceGenerator:
    """Draws candidate pairs for one recipe from a seeded numpy Generator"""

    def __init__(self, recipe: GenerationRecipe):
        settings = get_config().get_generation_settings()
        self.recipe = recipe
        self.rng = np.random.default_rng(int(recipe.seed))
        self.coefficient_range = settings['coefficient_range']

    def _coefficient(self) -> Fraction:
        r = self.coefficient_range
        return Fraction(int(self.rng.integers(-r, r + 1)))

    def _nonzero(self) -> Fraction:
        c = self._coefficient()
        return c if c != 0 else ONE

    def _unit_upper(self, n: int) -> LinMap:
        arr = zeros((n, n))
        for i in range(n):
            arr[i, i] = ONE
            for j in range(i + 1, n):
                arr[i, j] = self._coefficient()
        return from_matrix(arr, n, n)

    def _random_phi(self, c: HomCoalgebra, commuting_with=()) -> LinMap:
        basis = coderivation_basis(c, commuting_with_alpha=bool(self.rng.integers(0, 2)),
                                   commuting_with=commuting_with)
        return basis.combination([self._coefficient() for _ in range(basis.dimension)])

    def _pick(self, options: List):
        return options[int(self.rng.integers(0, len(options)))]

    # Coalgebras

    def twisted_seed(self, seed: Seed) -> HomCoalgebra:
        """Seed coalgebra, α-twisted by a member of its morphism family, in a random unit-triangular basis"""
        c = seed.coalgebra()
        beta = seed.morphism([self._nonzero() for _ in range(seed.morphism_params)])
        if is_invertible(beta) and check_multiplicative(HomCoalgebra(c.delta, beta, c.flavor)).passed:
            c = yau_twist(c, beta)
        if c.n > 1 and self.rng.integers(0, 2):
            c = change_of_basis(c, self._unit_upper(c.n))
        return c

    def coalgebra(self, strategy: Strategy, flavor: CoalgebraFlavor, dim: int) -> HomCoalgebra:
        if strategy == Strategy.CLASSICAL_DUAL:
            pool = CLASSICAL_LIE_SEEDS if flavor == CoalgebraFlavor.LIE else [s.name for s in seeds_for(flavor)]
            names = [name for name in pool if SEEDS[name].dimension == dim]
            if not names:
                raise GenerationError(f"no classical {flavor.value} seed of dimension {dim}")
            # the non-abelian candidate is the one wanted when there is a choice
            return SEEDS[names[-1]].coalgebra()
        if strategy == Strategy.TWIST:
            candidates = [s for s in seeds_for(flavor, dim) if s.dimension == dim]
            if not candidates:
                raise GenerationError(f"no {flavor.value} seed of dimension {dim} to twist")
            return self.twisted_seed(self._pick(candidates))
        raise GenerationError(f"strategy {strategy.value} does not produce a bare coalgebra")

    # Pairs

    def pair(self, strategy: Strategy, flavor: CoalgebraFlavor, dim: int) -> CoDerPair:
        if strategy == Strategy.ZERO:
            return CoDerPair(abelian(dim).with_flavor(flavor), zero_map(dim, dim))
        if flavor == CoalgebraFlavor.PRE_LIE and strategy != Strategy.SUM_CLOSURE:
            return self.pre_lie_pair(strategy, dim)
        if strategy == Strategy.SUM_CLOSURE:
            return self.sum_pair(flavor, dim)
        if strategy == Strategy.SEMIDIRECT_CLOSURE:
            return self.semidirect_pair(flavor, dim)

        c = self.coalgebra(strategy, flavor, dim)
        if strategy == Strategy.CLASSICAL_DUAL:
            return CoDerPair(c, zero_map(dim, dim))
        return CoDerPair(c, self._random_phi(c))

    def part(self, flavor: CoalgebraFlavor, dim: int) -> CoDerPair:
        """A summand: a twisted seed when one exists at this size, a further sum otherwise"""
        base_flavor = CoalgebraFlavor.COASSOCIATIVE if flavor == CoalgebraFlavor.PRE_LIE else flavor
        if any(s.dimension == dim for s in seeds_for(base_flavor, dim)):
            return self.pair(Strategy.TWIST, flavor, dim)
        if dim >= 2:
            return self.sum_pair(flavor, dim)
        return self.pair(Strategy.ZERO, flavor, dim)

    def sum_pair(self, flavor: CoalgebraFlavor, dim: int) -> CoDerPair:
        if dim < 2:
            raise GenerationError("a direct sum needs dimension at least 2")
        left = int(self.rng.integers(1, dim))
        return direct_sum_coder_pairs(self.part(flavor, left), self.part(flavor, dim - left))

    def semidirect_pair(self, flavor: CoalgebraFlavor, dim: int) -> CoDerPair:
        """L ⋉ M with M the regular comodule, plus a one-dimensional trivial summand for odd dim"""
        if flavor != CoalgebraFlavor.LIE:
            raise GenerationError(f"semidirect closure produces Hom-Lie pairs only, not {flavor.value}")
        if dim < 2:
            raise GenerationError("a semidirect product needs dimension at least 2")
        base = self.part(flavor, dim // 2)
        module = regular_comodule(base)
        if dim % 2:
            extra = trivial_comodule(base, diagonal([self._nonzero()]), diagonal([self._coefficient()]))
            module = direct_sum_comodules(module, extra)
        return semidirect_coalgebra(base, module)

    def rota_baxter_operator(self, c: HomCoalgebra) -> RotaBaxterData:
        """A weight 0 or −1 Rota-Baxter operator commuting with α; grid search at dim ≤ 2"""
        weight = self._pick([Fraction(0), Fraction(-1)])
        trivial = identity(c.n) if weight == -1 else zero_map(c.n, c.n)
        options = [trivial]
        if c.n <= 2:
            options = search_operators(c, OperatorKind.ROTA_BAXTER, weight=weight) or options
        return RotaBaxterData(self._pick(options), weight)

    def pre_lie_pair(self, strategy: Strategy, dim: int) -> CoDerPair:
        """Rota-Baxter twist of a coassociative pair whose φ commutes with α and R"""
        if strategy == Strategy.SEMIDIRECT_CLOSURE:
            raise GenerationError("semidirect closure produces Hom-Lie pairs only, not pre_lie")
        c = self.coalgebra(strategy, CoalgebraFlavor.COASSOCIATIVE, dim)
        rb = self.rota_baxter_operator(c)
        basis = coderivation_basis(c, commuting_with_alpha=True, commuting_with=[rb.r])
        phi = basis.combination([self._coefficient() for _ in range(basis.dimension)])
        return rb_twist(CoDerPair(c, phi), rb)


@log_errors('solver', 'generate')
def generate(recipe: GenerationRecipe, max_attempts: Optional[int] = None) -> StructureBundle:
    """
    A validated coalgebra bundle for the recipe

    Deterministic in the recipe. Raises GenerationError when the strategy
    cannot build the requested dimension or no draw passes validation.
    """
    settings = get_config().get_generation_settings()
    max_attempts = max_attempts if max_attempts is not None else settings['max_attempts']
    if recipe.dim > settings['max_dim']:
        raise GenerationError(f"dimension {recipe.dim} exceeds the generation limit {settings['max_dim']}")

    generator = InstanceGenerator(recipe)
    logger = get_logger()
    last_failure = None
    for attempt in range(1, max_attempts + 1):
        try:
            pair = generator.pair(recipe.strategy, recipe.flavor, recipe.dim)
        except GenerationError:
            raise
        except AlgebraError as e:
            last_failure = str(e)
            continue

        bundle = StructureBundle.from_coder_pair(pair)
        reports = check_bundle(bundle)
        if all_passed(reports):
            bundle.metadata = {**pair.metadata, 'generator': {**recipe.to_dict(), 'attempts': attempt}}
            return bundle
        last_failure = ', '.join(r.identity_name for r in reports if not r.passed and not r.advisory)
        logger.log_warning('solver', 'generated candidate rejected', {'attempt': attempt, 'failing': last_failure})

    raise GenerationError(f"no valid {recipe.flavor.value} bundle after {max_attempts} attempts "
                          f"({recipe.strategy.value}, dim {recipe.dim}): {last_failure}")


def generate_many(flavor, dim: int, count: int, seed: int = 0, strategies=None) -> List[StructureBundle]:
    """`count` bundles cycling through the strategies that can build `dim`"""
    flavor = CoalgebraFlavor(flavor)
    strategies = [Strategy(s) for s in (strategies or [Strategy.TWIST, Strategy.SUM_CLOSURE])]
    bundles = []
    for k in range(count):
        recipe = GenerationRecipe(strategies[k % len(strategies)], seed + k, dim, flavor)
        bundles.append(generate(recipe))
    return bundles


def default_strategy(flavor, dim: int) -> Strategy:
    """twist when a seed of exactly this size exists, otherwise a direct sum"""
    flavor = CoalgebraFlavor(flavor)
    base = CoalgebraFlavor.COASSOCIATIVE if flavor == CoalgebraFlavor.PRE_LIE else flavor
    if any(s.dimension == dim for s in seeds_for(base)):
        return Strategy.TWIST
    return Strategy.SUM_CLOSURE if dim >= 2 else Strategy.ZERO
