"""
Hand-coded seed structures for instance generation

Lie seeds are the duals of small classical Lie algebras; coassociative seeds
are the smallest non-trivial coassociative coalgebras. Each seed also
carries a family of coalgebra automorphisms used for α-twists.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from src.core.errors import ArgumentError
from src.core.exact_linear import LinMap, diagonal, from_images, identity
from src.core.structures import CoalgebraFlavor, HomCoalgebra, coalgebra_from_images

# Morphism families take a list of nonzero scalars and return an automorphism
MorphismFamily = Callable[[List[Fraction]], LinMap]


@dataclass(frozen=True)
class Seed:
    name: str
    flavor: CoalgebraFlavor
    dimension: int
    build: Callable[[], HomCoalgebra]
    morphism_params: int = 0
    morphism_family: Optional[MorphismFamily] = None

    def coalgebra(self) -> HomCoalgebra:
        return self.build()

    def morphism(self, params: List[Fraction]) -> LinMap:
        """A coalgebra automorphism from the family; identity when there is none"""
        if self.morphism_family is None:
            return identity(self.dimension)
        if len(params) != self.morphism_params:
            raise ArgumentError(f"seed {self.name} takes {self.morphism_params} morphism parameters")
        return self.morphism_family(params)


def _unit(n: int, i: int, j: int, sign: int = 1) -> List[int]:
    """Coordinates of ±e_i⊗e_j in the n² basis"""
    v = [0] * (n * n)
    v[i * n + j] = sign
    return v


def _bracket(n: int, i: int, j: int) -> List[int]:
    """e_i⊗e_j − e_j⊗e_i"""
    v = _unit(n, i, j)
    v[j * n + i] -= 1
    return v


def abelian(n: int) -> HomCoalgebra:
    return coalgebra_from_images([[0] * (n * n) for _ in range(n)], flavor=CoalgebraFlavor.LIE)


def two_dim_nonabelian() -> HomCoalgebra:
    """Δ(e₀) = 0, Δ(e₁) = e₀⊗e₁ − e₁⊗e₀; dual of [e₀, e₁] = e₁"""
    return coalgebra_from_images([[0, 0, 0, 0], _bracket(2, 0, 1)], flavor=CoalgebraFlavor.LIE)


def heisenberg_dual() -> HomCoalgebra:
    """Δ(e₂) = e₀⊗e₁ − e₁⊗e₀; dual of [e₀, e₁] = e₂"""
    return coalgebra_from_images([[0] * 9, [0] * 9, _bracket(3, 0, 1)], flavor=CoalgebraFlavor.LIE)


def group_like() -> HomCoalgebra:
    """n = 1, Δ(e₀) = e₀⊗e₀"""
    return coalgebra_from_images([[1]], flavor=CoalgebraFlavor.COASSOCIATIVE)


def left_unit_coalgebra() -> HomCoalgebra:
    """Δ(e₀) = e₀⊗e₀, Δ(e₁) = e₀⊗e₁"""
    return coalgebra_from_images([_unit(2, 0, 0), _unit(2, 0, 1)], flavor=CoalgebraFlavor.COASSOCIATIVE)


def dual_numbers() -> HomCoalgebra:
    """Δ(e₀) = e₀⊗e₀, Δ(e₁) = e₀⊗e₁ + e₁⊗e₀; dual of K[x]/(x²)"""
    d1 = _unit(2, 0, 1)
    d1[2] = 1
    return coalgebra_from_images([_unit(2, 0, 0), d1], flavor=CoalgebraFlavor.COASSOCIATIVE)


def divided_powers(n: int = 3) -> HomCoalgebra:
    """Δ(e_k) = Σ_{i+j=k} e_i⊗e_j"""
    images = []
    for k in range(n):
        v = [0] * (n * n)
        for i in range(k + 1):
            v[i * n + (k - i)] = 1
        images.append(v)
    return coalgebra_from_images(images, flavor=CoalgebraFlavor.COASSOCIATIVE)


def matrix_coalgebra() -> HomCoalgebra:
    """Dual of 2×2 matrices: Δ(e_ij) = Σ_k e_ik⊗e_kj, basis e00, e01, e10, e11"""
    n = 4
    images = []
    for i in range(2):
        for j in range(2):
            v = [0] * (n * n)
            for k in range(2):
                v[(2 * i + k) * n + (2 * k + j)] = 1
            images.append(v)
    return coalgebra_from_images(images, flavor=CoalgebraFlavor.COASSOCIATIVE)


def _lower_shear(params: List[Fraction]) -> LinMap:
    """α(e₀) = e₀, α(e₁) = s·e₀ + t·e₁"""
    s, t = params
    return from_images([[1, 0], [s, t]], 2, 2)


SEEDS: Dict[str, Seed] = {
    'abelian1': Seed('abelian1', CoalgebraFlavor.LIE, 1, lambda: abelian(1)),
    'abelian2': Seed('abelian2', CoalgebraFlavor.LIE, 2, lambda: abelian(2)),
    'abelian3': Seed('abelian3', CoalgebraFlavor.LIE, 3, lambda: abelian(3)),
    'nonabelian2': Seed('nonabelian2', CoalgebraFlavor.LIE, 2, two_dim_nonabelian, 1,
                        lambda p: diagonal([1, p[0]])),
    'heisenberg': Seed('heisenberg', CoalgebraFlavor.LIE, 3, heisenberg_dual, 2,
                       lambda p: diagonal([p[0], p[1], p[0] * p[1]])),
    'group_like': Seed('group_like', CoalgebraFlavor.COASSOCIATIVE, 1, group_like),
    'left_unit': Seed('left_unit', CoalgebraFlavor.COASSOCIATIVE, 2, left_unit_coalgebra, 2, _lower_shear),
    'dual_numbers': Seed('dual_numbers', CoalgebraFlavor.COASSOCIATIVE, 2, dual_numbers, 1,
                         lambda p: diagonal([1, p[0]])),
    'divided_powers': Seed('divided_powers', CoalgebraFlavor.COASSOCIATIVE, 3, divided_powers),
    'matrix': Seed('matrix', CoalgebraFlavor.COASSOCIATIVE, 4, matrix_coalgebra),
}

CLASSICAL_LIE_SEEDS = ('abelian1', 'abelian2', 'abelian3', 'nonabelian2', 'heisenberg')


def seeds_for(flavor: CoalgebraFlavor, max_dim: int = None) -> List[Seed]:
    flavor = CoalgebraFlavor(flavor)
    return [s for s in SEEDS.values()
            if s.flavor == flavor and (max_dim is None or s.dimension <= max_dim)]


def get_seed(name: str) -> Seed:
    try:
        return SEEDS[name]
    except KeyError:
        raise ArgumentError(f"unknown seed {name!r}; known: {', '.join(sorted(SEEDS))}") from None
