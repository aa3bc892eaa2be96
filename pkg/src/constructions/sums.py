"""
Direct sums of CoDer pairs, Der pairs and CoDer comodules
"""
from dataclasses import dataclass
from typing import Tuple

from src.core.errors import ArgumentError, DimensionError
from src.core.exact_linear import LinMap, ONE, block_diagonal, from_matrix, identity, tensor, zeros
from src.core.logger import log_errors
from src.core.structures import (
    AlgebraFlavor, CoDerComodule, CoDerPair, Comodule, DerPair, HomAlgebra, HomCoalgebra
)
from src.checkers.bundle_checker import check_coder_comodule_full, check_coder_pair, check_der_pair, require_passing


@dataclass(frozen=True)
class SumSpace:
    """K^left ⊕ K^right with its block embeddings and projections"""
    left_dim: int
    right_dim: int

    @property
    def dim(self) -> int:
        return self.left_dim + self.right_dim

    def _block(self, offset: int, size: int) -> LinMap:
        arr = zeros((self.dim, size))
        for i in range(size):
            arr[offset + i, i] = ONE
        return from_matrix(arr, size, self.dim)

    def embed_left(self) -> LinMap:
        return self._block(0, self.left_dim)

    def embed_right(self) -> LinMap:
        return self._block(self.left_dim, self.right_dim)

    def project_left(self) -> LinMap:
        return self.embed_left().transpose()

    def project_right(self) -> LinMap:
        return self.embed_right().transpose()


def block_embeddings(space: SumSpace) -> Tuple[LinMap, LinMap]:
    return space.embed_left(), space.embed_right()


def direct_sum_coalgebras(c1: HomCoalgebra, c2: HomCoalgebra) -> HomCoalgebra:
    """Δ(x, y) = Δ₁(x) + Δ₂(y) with both summands embedded blockwise"""
    if c1.flavor != c2.flavor:
        raise ArgumentError(f"cannot sum coalgebras of different flavors: {c1.flavor.value} and {c2.flavor.value}")
    s = SumSpace(c1.n, c2.n)
    i1, i2 = block_embeddings(s)
    delta = (tensor(i1, i1) @ c1.delta @ s.project_left()
             + tensor(i2, i2) @ c2.delta @ s.project_right())
    return HomCoalgebra(delta, block_diagonal(c1.alpha, c2.alpha), c1.flavor)


@log_errors('construction', 'direct_sum_coder_pairs')
def direct_sum_coder_pairs(p1: CoDerPair, p2: CoDerPair) -> CoDerPair:
    if p1.flavor != p2.flavor:
        raise ArgumentError(f"cannot sum CoDer pairs of different flavors: {p1.flavor.value} and {p2.flavor.value}")
    require_passing('direct_sum_coder_pairs', check_coder_pair(p1) + check_coder_pair(p2))
    coalg = direct_sum_coalgebras(p1.coalg, p2.coalg)
    return CoDerPair(coalg, block_diagonal(p1.phi, p2.phi),
                     {'construction': 'direct_sum', 'summand_dims': [p1.n, p2.n]})


def direct_sum_algebras(a1: HomAlgebra, a2: HomAlgebra) -> HomAlgebra:
    """[(x₁,y₁),(x₂,y₂)] = ([x₁,x₂], [y₁,y₂])"""
    s = SumSpace(a1.n, a2.n)
    i1, i2 = block_embeddings(s)
    p1, p2 = s.project_left(), s.project_right()
    mu = i1 @ a1.mu @ tensor(p1, p1) + i2 @ a2.mu @ tensor(p2, p2)
    return HomAlgebra(mu, block_diagonal(a1.alpha, a2.alpha), a1.flavor)


@log_errors('construction', 'direct_sum_der_pairs')
def direct_sum_der_pairs(p1: DerPair, p2: DerPair) -> DerPair:
    if p1.flavor != AlgebraFlavor.LIE or p2.flavor != AlgebraFlavor.LIE:
        raise ArgumentError(f"direct sum of Der pairs needs two Hom-Lie algebras, got {p1.flavor.value} and {p2.flavor.value}")
    require_passing('direct_sum_der_pairs', check_der_pair(p1) + check_der_pair(p2))
    return DerPair(direct_sum_algebras(p1.alg, p2.alg), block_diagonal(p1.phi, p2.phi),
                   {'construction': 'direct_sum', 'summand_dims': [p1.n, p2.n]})


@log_errors('construction', 'direct_sum_comodules')
def direct_sum_comodules(m1: CoDerComodule, m2: CoDerComodule) -> CoDerComodule:
    """ρ(m₁, m₂) = (1⊗j₁)ρ₁(m₁) + (1⊗j₂)ρ₂(m₂) over a common CoDer pair"""
    if m1.pair.coalg != m2.pair.coalg or not (m1.pair.phi == m2.pair.phi):
        raise DimensionError("comodules must live over the same CoDer pair")
    require_passing('direct_sum_comodules', check_coder_comodule_full(m1) + check_coder_comodule_full(m2))
    s = SumSpace(m1.m, m2.m)
    j1, j2 = block_embeddings(s)
    id_l = identity(m1.pair.n)
    rho = (tensor(id_l, j1) @ m1.rho @ s.project_left()
           + tensor(id_l, j2) @ m2.rho @ s.project_right())
    comod = Comodule(m1.pair.coalg, rho, block_diagonal(m1.beta, m2.beta))
    return CoDerComodule(comod, block_diagonal(m1.phi_m, m2.phi_m), m1.pair,
                         {'construction': 'direct_sum_comodules', 'summand_dims': [m1.m, m2.m]})
