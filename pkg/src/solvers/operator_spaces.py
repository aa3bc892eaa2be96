"""
Spaces of (co)derivations as kernels of linear operators on n×n matrices

An operator φ is flattened row-major (entry (i, j) of its matrix sits at
position i*n + j). The defining identity is linear in φ, so its solution
space is the kernel of the matrix whose k-th column is the flattened defect
of the k-th matrix unit.
"""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from src.core.exact_linear import (
    LinMap, TensorSpace, kernel_basis, map_to_vector, matrix_unit, rank, to_scalar, vector_to_map, zero_map
)
from src.core.logger import log_errors
from src.core.structures import HomAlgebra, HomCoalgebra
from src.checkers.algebra_axioms import derivation_defect
from src.checkers.coalgebra_axioms import coderivation_defect


@dataclass(frozen=True)
class OperatorSpaceBasis:
    """Basis of a solution space inside the n²-dimensional space of operators on K^n"""
    ambient_dim: int
    basis: Tuple[LinMap, ...]
    identity_name: str

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def combination(self, coefficients: Sequence) -> LinMap:
        """Σ c_k b_k"""
        if len(coefficients) != self.dimension:
            raise ValueError(f"expected {self.dimension} coefficients, got {len(coefficients)}")
        result = zero_map(self.ambient_dim, self.ambient_dim)
        for c, b in zip(coefficients, self.basis):
            c = to_scalar(c)
            if c:
                result = result + c * b
        return result


def _linear_operator(n: int, defect: Callable[[LinMap], LinMap]) -> LinMap:
    columns = [map_to_vector(defect(matrix_unit(n, *divmod(k, n)))) for k in range(n * n)]
    arr = np.stack(columns, axis=1)
    return LinMap(TensorSpace((n * n,)), TensorSpace((arr.shape[0],)), arr)


def _stack(operators: List[LinMap]) -> LinMap:
    arr = np.concatenate([op.entries for op in operators], axis=0)
    return LinMap(operators[0].domain, TensorSpace((arr.shape[0],)), arr)


def commutation_operator(n: int, g: LinMap) -> LinMap:
    """φ ↦ φg − gφ"""
    return _linear_operator(n, lambda e: e @ g - g @ e)


def coderivation_operator(c: HomCoalgebra) -> LinMap:
    """φ ↦ Δφ − (φ⊗α)Δ − (α⊗φ)Δ, as an n³ × n² matrix"""
    return _linear_operator(c.n, lambda e: coderivation_defect(c, e))


def derivation_operator(a: HomAlgebra) -> LinMap:
    """φ ↦ φμ − μ(φ⊗α) − μ(α⊗φ), as an n³ × n² matrix"""
    return _linear_operator(a.n, lambda e: derivation_defect(a, e))


def _solve(n: int, operators: List[LinMap], name: str) -> OperatorSpaceBasis:
    kernel = kernel_basis(_stack(operators))
    return OperatorSpaceBasis(n, tuple(vector_to_map(v, n) for v in kernel), name)


def _constraints(n: int, alpha: LinMap, commuting_with_alpha: bool, commuting_with: Sequence[LinMap]) -> List[LinMap]:
    extra = [alpha] if commuting_with_alpha else []
    return [commutation_operator(n, g) for g in list(extra) + list(commuting_with)]


@log_errors('solver', 'coderivation_basis')
def coderivation_basis(c: HomCoalgebra, commuting_with_alpha: bool = False,
                       commuting_with: Sequence[LinMap] = ()) -> OperatorSpaceBasis:
    """
    Basis of CoDer_α(L), optionally cut down to coderivations commuting
    with α and/or with the given operators
    """
    ops = [coderivation_operator(c)] + _constraints(c.n, c.alpha, commuting_with_alpha, commuting_with)
    return _solve(c.n, ops, 'coderivation')


@log_errors('solver', 'derivation_basis')
def derivation_basis(a: HomAlgebra, commuting_with_alpha: bool = False,
                     commuting_with: Sequence[LinMap] = ()) -> OperatorSpaceBasis:
    ops = [derivation_operator(a)] + _constraints(a.n, a.alpha, commuting_with_alpha, commuting_with)
    return _solve(a.n, ops, 'derivation')


def nullity(operator: LinMap) -> int:
    """dim ker = columns − rank"""
    return operator.domain.dim - rank(operator)
