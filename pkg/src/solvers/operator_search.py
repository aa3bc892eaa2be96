"""
Exhaustive grid search for Rota-Baxter and endomorphism operators

Both defining identities are quadratic in the operator, so candidates are
enumerated over a finite scalar grid, cheapest linear filter first. Results
come out in lexicographic order of their row-major entries (grid sorted
ascending).
"""
import itertools
from enum import Enum
from typing import List, Optional, Sequence

import numpy as np

from src.core.config import get_config
from src.core.errors import ArgumentError, SearchGuardExceeded
from src.core.exact_linear import LinMap, TensorSpace, format_scalar, to_scalar
from src.core.logger import get_logger, log_errors
from src.core.structures import EndoOp, HomCoalgebra, RotaBaxterData
from src.checkers.operator_axioms import check_endo_op, check_rota_baxter


class OperatorKind(str, Enum):
    ROTA_BAXTER = 'rota_baxter'
    ENDO = 'endo'


def parse_grid(text: str) -> List:
    """"0,1,-1/2" -> sorted distinct rationals"""
    values = [to_scalar(v) for v in str(text).split(',') if v.strip()]
    if not values:
        raise ArgumentError(f"empty scalar grid: {text!r}")
    return sorted(set(values))


def candidate_count(n: int, grid: Sequence) -> int:
    return len(set(grid)) ** (n * n)


def _candidates(n: int, grid: Sequence):
    space = TensorSpace((n,))
    for entries in itertools.product(grid, repeat=n * n):
        yield LinMap(space, space, np.array(entries, dtype=object).reshape(n, n))


def _commutes(f: LinMap, g: LinMap) -> bool:
    return not bool(np.any((f @ g).entries != (g @ f).entries))


@log_errors('solver', 'search_operators')
def search_operators(c: HomCoalgebra, kind, grid: Optional[Sequence] = None, weight=None,
                     require_idempotent: bool = False, phi: Optional[LinMap] = None,
                     max_candidates: Optional[int] = None, max_dim: Optional[int] = None) -> List[LinMap]:
    """
    All grid matrices satisfying the operator's defining identity and α-commutation

    kind is 'rota_baxter' (needs `weight`) or 'endo'. For endomorphism
    operators, `require_idempotent` and `phi` add T² = T and Tφ = φT.
    Raises SearchGuardExceeded when |grid|^(n²) exceeds the candidate guard.
    """
    config = get_config()
    kind = OperatorKind(kind)
    grid = sorted({to_scalar(g) for g in (grid if grid is not None else config.get_default_grid())})
    max_candidates = max_candidates if max_candidates is not None else config.get_max_candidates()
    max_dim = max_dim if max_dim is not None else config.get_search_max_dim()

    n = c.n
    total = candidate_count(n, grid)
    if total > max_candidates:
        raise SearchGuardExceeded(total, max_candidates)
    if n > max_dim:
        raise ArgumentError(f"operator search is limited to dimension {max_dim}, got {n}")
    if kind == OperatorKind.ROTA_BAXTER and weight is None:
        raise ArgumentError("Rota-Baxter search needs a weight")

    found = []
    for candidate in _candidates(n, grid):
        if not _commutes(candidate, c.alpha):
            continue
        if kind == OperatorKind.ROTA_BAXTER:
            report = check_rota_baxter(c, RotaBaxterData(candidate, weight))
        else:
            report = check_endo_op(c, EndoOp(candidate, require_idempotent, phi is not None), phi)
        if report.passed:
            found.append(candidate)

    get_logger().log_success('solver', 'grid_search', {
        'kind': kind.value, 'dimension': n, 'grid': [format_scalar(g) for g in grid],
        'candidates': total, 'found': len(found),
    })
    return found
