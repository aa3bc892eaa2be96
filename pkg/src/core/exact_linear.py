"""
Exact rational linear algebra over tensor powers of a base space

Matrices are numpy object arrays of fractions.Fraction; nothing here ever
touches floating point. Tensor bases are flattened row-major
(lexicographic in the index tuple), and every Kronecker product and
permutation operator uses that same order.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from src.core.errors import ArgumentError, DimensionError


Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value) -> Fraction:
    """
    Coerce a value to an exact rational

    Accepts int, Fraction, sympy Rational and strings such as "3", "-2/5".
    Floats are rejected: exactness is never traded away silently.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ArgumentError(f"not a rational scalar: {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ArgumentError(f"malformed rational {value!r}: {e}") from e
    raise ArgumentError(f"not a rational scalar: {value!r} ({type(value).__name__})")


def format_scalar(value: Fraction) -> str:
    """Canonical text of a rational: "p" or "p/q" with q > 0, reduced"""
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fraction_array(rows, shape: Tuple[int, int] = None) -> np.ndarray:
    """Build a 2-d object array of Fractions from nested sequences"""
    arr = np.empty(shape if shape is not None else np.shape(rows), dtype=object)
    src = np.asarray(rows, dtype=object) if not isinstance(rows, np.ndarray) else rows
    if src.shape != arr.shape:
        raise DimensionError("entry array has the wrong shape", src.shape, arr.shape)
    for idx, value in np.ndenumerate(src):
        arr[idx] = to_scalar(value)
    return arr


def zeros(shape: Tuple[int, ...]) -> np.ndarray:
    return np.full(shape, ZERO, dtype=object)


@dataclass(frozen=True)
class TensorSpace:
    """
    Tensor product of coordinate spaces K^{d_1} ⊗ ... ⊗ K^{d_k}

    A homogeneous space K^n ⊗ ... ⊗ K^n of arity k has dimension n^k; arity 0
    is the scalar line. Mixed factors (L ⊗ M with dim L != dim M) are allowed
    so that coactions M -> L ⊗ M are ordinary maps.
    """
    factors: Tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        if any(d <= 0 for d in factors):
            raise ArgumentError(f"factor dimensions must be positive: {factors}")
        object.__setattr__(self, 'factors', factors)

    @classmethod
    def power(cls, n: int, k: int) -> 'TensorSpace':
        if k < 0:
            raise ArgumentError(f"arity must be non-negative, got {k}")
        return cls((n,) * k)

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def dim(self) -> int:
        return int(np.prod(self.factors, dtype=np.int64)) if self.factors else 1

    @property
    def is_homogeneous(self) -> bool:
        return len(set(self.factors)) <= 1

    @property
    def base_dim(self) -> Optional[int]:
        """n for a homogeneous space of positive arity, else None"""
        if self.factors and self.is_homogeneous:
            return self.factors[0]
        return None

    def tensor(self, other: 'TensorSpace') -> 'TensorSpace':
        return TensorSpace(self.factors + other.factors)

    def index_tuple(self, flat: int) -> Tuple[int, ...]:
        if not self.factors:
            return ()
        return tuple(int(i) for i in np.unravel_index(flat, self.factors))

    def flat_index(self, index: Sequence[int]) -> int:
        if not self.factors:
            return 0
        return int(np.ravel_multi_index(tuple(index), self.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "K"
        return "⊗".join(f"K^{d}" for d in self.factors)


@dataclass(frozen=True, eq=False)
class LinMap:
    """
    Exact linear map between tensor spaces

    entries has shape (codomain.dim, domain.dim); column j is the image of
    the j-th domain basis tensor. `source_rows` is set for permutation
    matrices (row r of P @ v equals v[source_rows[r]]) and lets composition
    reindex instead of multiplying.
    """
    domain: TensorSpace
    codomain: TensorSpace
    entries: np.ndarray
    source_rows: Optional[Tuple[int, ...]] = field(default=None, repr=False)

    def __post_init__(self):
        entries = self.entries
        if not (isinstance(entries, np.ndarray) and entries.dtype == object and entries.ndim == 2):
            entries = fraction_array(entries, (self.codomain.dim, self.domain.dim))
        if entries.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionError(
                f"matrix shape {entries.shape} does not match {self.codomain} <- {self.domain}",
                entries.shape, (self.codomain.dim, self.domain.dim))
        entries.flags.writeable = False
        object.__setattr__(self, 'entries', entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def column(self, j: int) -> np.ndarray:
        """Image of the j-th domain basis tensor"""
        return self.entries[:, j]

    def apply(self, vector: Sequence) -> np.ndarray:
        vec = np.asarray([to_scalar(v) for v in vector], dtype=object)
        if vec.shape != (self.domain.dim,):
            raise DimensionError("vector does not live in the domain", vec.shape, (self.domain.dim,))
        return self.entries @ vec

    def is_zero(self) -> bool:
        return not bool(np.any(self.entries != 0))

    def transpose(self) -> 'LinMap':
        src = None
        if self.source_rows is not None:
            src = tuple(int(i) for i in np.argsort(self.source_rows))
        return LinMap(self.codomain, self.domain, self.entries.T.copy(), src)

    def to_rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self.entries]

    def __matmul__(self, other: 'LinMap') -> 'LinMap':
        return compose(self, other)

    def __add__(self, other: 'LinMap') -> 'LinMap':
        return add(self, other)

    def __sub__(self, other: 'LinMap') -> 'LinMap':
        return add(self, scale(-1, other))

    def __neg__(self) -> 'LinMap':
        return scale(-1, self)

    def __rmul__(self, c) -> 'LinMap':
        return scale(c, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and equal(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinMap({self.codomain} <- {self.domain}, {self.to_rows()})"


def _space(n: Union[int, Sequence[int], TensorSpace], k: int = 1) -> TensorSpace:
    if isinstance(n, TensorSpace):
        return n
    if isinstance(n, (int, np.integer)):
        return TensorSpace.power(int(n), k)
    return TensorSpace(tuple(n))


def from_matrix(rows, domain, codomain) -> LinMap:
    """LinMap from a (codomain x domain) matrix given row by row"""
    domain, codomain = _space(domain), _space(codomain)
    return LinMap(domain, codomain, fraction_array(rows, (codomain.dim, domain.dim)))


def from_images(images, domain, codomain) -> LinMap:
    """LinMap from image vectors: images[j] is the image of the j-th basis tensor"""
    domain, codomain = _space(domain), _space(codomain)
    arr = fraction_array(images, (domain.dim, codomain.dim))
    return LinMap(domain, codomain, arr.T.copy())


def identity(space) -> LinMap:
    space = _space(space)
    arr = zeros((space.dim, space.dim))
    for i in range(space.dim):
        arr[i, i] = ONE
    return LinMap(space, space, arr, tuple(range(space.dim)))


def zero_map(domain, codomain) -> LinMap:
    domain, codomain = _space(domain), _space(codomain)
    return LinMap(domain, codomain, zeros((codomain.dim, domain.dim)))


def diagonal(values: Sequence) -> LinMap:
    values = [to_scalar(v) for v in values]
    arr = zeros((len(values), len(values)))
    for i, v in enumerate(values):
        arr[i, i] = v
    space = TensorSpace((len(values),))
    return LinMap(space, space, arr)


def compose(g: LinMap, f: LinMap) -> LinMap:
    """g ∘ f; defined iff domain(g) = codomain(f)"""
    if g.domain != f.codomain:
        raise DimensionError("cannot compose", g.domain, f.codomain)
    if g.source_rows is not None:
        src = np.asarray(g.source_rows, dtype=np.int64)
        combined = None
        if f.source_rows is not None:
            combined = tuple(int(i) for i in np.asarray(f.source_rows, dtype=np.int64)[src])
        return LinMap(f.domain, g.codomain, f.entries[src, :].copy(), combined)
    if f.source_rows is not None:
        dest = np.argsort(np.asarray(f.source_rows, dtype=np.int64))
        return LinMap(f.domain, g.codomain, g.entries[:, dest].copy())
    return LinMap(f.domain, g.codomain, g.entries @ f.entries)


def compose_all(*maps: LinMap) -> LinMap:
    """compose_all(h, g, f) = h ∘ g ∘ f"""
    return reduce(compose, maps)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product: (f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y)"""
    domain = f.domain.tensor(g.domain)
    codomain = f.codomain.tensor(g.codomain)
    src = None
    if f.source_rows is not None and g.source_rows is not None:
        width = g.domain.dim
        src = tuple(int(a) * width + int(b) for a in f.source_rows for b in g.source_rows)
    return LinMap(domain, codomain, np.kron(f.entries, g.entries), src)


def tensor_all(*maps: LinMap) -> LinMap:
    return reduce(tensor, maps)


def add(f: LinMap, g: LinMap) -> LinMap:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DimensionError("cannot add maps between different spaces",
                             f"{f.codomain} <- {f.domain}", f"{g.codomain} <- {g.domain}")
    return LinMap(f.domain, f.codomain, f.entries + g.entries)


def add_all(first: LinMap, *rest: LinMap) -> LinMap:
    return reduce(add, rest, first)


def scale(c, f: LinMap) -> LinMap:
    c = to_scalar(c)
    return LinMap(f.domain, f.codomain, f.entries * c)


def equal(f: LinMap, g: LinMap) -> bool:
    """Exact entrywise comparison; spaces must match"""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DimensionError("cannot compare maps between different spaces",
                             f"{f.codomain} <- {f.domain}", f"{g.codomain} <- {g.domain}")
    return not bool(np.any(f.entries != g.entries))


def regroup(f: LinMap, domain=None, codomain=None) -> LinMap:
    """Relabel domain/codomain factor structure; the matrix is unchanged"""
    domain = f.domain if domain is None else _space(domain)
    codomain = f.codomain if codomain is None else _space(codomain)
    if domain.dim != f.domain.dim or codomain.dim != f.codomain.dim:
        raise DimensionError("regrouping must preserve dimension",
                             f"{f.codomain} <- {f.domain}", f"{codomain} <- {domain}")
    return LinMap(domain, codomain, f.entries, f.source_rows)


def perm_operator(n, image_positions: Sequence[int]) -> LinMap:
    """
    Permutation of tensor factors

    Input factor p is moved to output slot image_positions[p], so
    (1, 0) is τ: x⊗y ↦ y⊗x and (2, 0, 1) is ξ: x⊗y⊗z ↦ y⊗z⊗x.
    `n` is a base dimension or a tuple of factor dimensions.
    """
    image = tuple(int(p) for p in image_positions)
    k = len(image)
    if sorted(image) != list(range(k)):
        raise ArgumentError(f"not a permutation of 0..{k - 1}: {image}")
    domain = _space(n, k)
    if domain.arity != k:
        raise ArgumentError(f"{k} image positions for a space of arity {domain.arity}")

    out_factors = [0] * k
    for p, q in enumerate(image):
        out_factors[q] = domain.factors[p]
    codomain = TensorSpace(tuple(out_factors))

    src = []
    for r in range(codomain.dim):
        out_index = codomain.index_tuple(r)
        in_index = tuple(out_index[image[p]] for p in range(k))
        src.append(domain.flat_index(in_index))

    arr = zeros((codomain.dim, domain.dim))
    for r, s in enumerate(src):
        arr[r, s] = ONE
    return LinMap(domain, codomain, arr, tuple(src))


def tau(n) -> LinMap:
    """x ⊗ y ↦ y ⊗ x"""
    return perm_operator(n, (1, 0))


def xi(n) -> LinMap:
    """x ⊗ y ⊗ z ↦ y ⊗ z ⊗ x"""
    return perm_operator(n, (2, 0, 1))


def xi_squared(n) -> LinMap:
    """x ⊗ y ⊗ z ↦ z ⊗ x ⊗ y"""
    return perm_operator(n, (1, 2, 0))


def tau12(n) -> LinMap:
    """x ⊗ y ⊗ z ↦ y ⊗ x ⊗ z"""
    return perm_operator(n, (1, 0, 2))


def _to_sympy(arr: np.ndarray) -> sympy.Matrix:
    rows, cols = arr.shape
    return sympy.Matrix(rows, cols, [sympy.Rational(x.numerator, x.denominator) for x in arr.flat])


def _from_sympy_vector(vec) -> np.ndarray:
    return np.asarray([Fraction(int(x.p), int(x.q)) for x in vec], dtype=object)


def kernel_basis(f: LinMap) -> List[np.ndarray]:
    """
    Exact basis of {v : f(v) = 0}

    sympy's rref-based nullspace: one vector per pivot-free column, with that
    free variable set to 1. Empty iff f is injective.
    """
    null = _to_sympy(f.entries).nullspace()
    return [_from_sympy_vector(v) for v in null]


def rank(f: LinMap) -> int:
    return int(_to_sympy(f.entries).rank())


def vectors_rank(vectors: Sequence[np.ndarray]) -> int:
    if not vectors:
        return 0
    arr = np.stack([np.asarray(v, dtype=object) for v in vectors], axis=1)
    return int(_to_sympy(arr).rank())


def inverse(f: LinMap) -> LinMap:
    if f.domain.dim != f.codomain.dim:
        raise DimensionError("only square maps can be inverted", f.domain, f.codomain)
    m = _to_sympy(f.entries)
    if m.det() == 0:
        raise ArgumentError("map is singular")
    inv = m.inv()
    arr = np.asarray([[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)], dtype=object)
    return LinMap(f.codomain, f.domain, arr)


def is_invertible(f: LinMap) -> bool:
    return f.domain.dim == f.codomain.dim and rank(f) == f.domain.dim


def require_endomorphism(f: LinMap, n: int, name: str):
    """Raise DimensionError unless f is an operator on K^n"""
    space = TensorSpace((n,))
    if f.domain != space or f.codomain != space:
        raise DimensionError(f"{name} must be an operator on K^{n}", f"{f.codomain} <- {f.domain}", space)


def block_diagonal(f: LinMap, g: LinMap) -> LinMap:
    """f ⊕ g on arity-1 spaces"""
    if f.domain.arity != 1 or f.codomain.arity != 1 or g.domain.arity != 1 or g.codomain.arity != 1:
        raise DimensionError("block sums are defined on arity-1 spaces", f.domain, g.domain)
    arr = zeros((f.codomain.dim + g.codomain.dim, f.domain.dim + g.domain.dim))
    arr[:f.codomain.dim, :f.domain.dim] = f.entries
    arr[f.codomain.dim:, f.domain.dim:] = g.entries
    return LinMap(TensorSpace((f.domain.dim + g.domain.dim,)),
                  TensorSpace((f.codomain.dim + g.codomain.dim,)), arr)


def matrix_unit(n: int, row: int, col: int) -> LinMap:
    """E_{row,col} on K^n: e_col ↦ e_row"""
    arr = zeros((n, n))
    arr[row, col] = ONE
    return from_matrix(arr, n, n)


def vector_to_map(vec: Sequence, n: int) -> LinMap:
    """Inverse of map_to_vector: row-major n x n matrix entries"""
    arr = np.asarray([to_scalar(v) for v in vec], dtype=object).reshape(n, n)
    return from_matrix(arr, n, n)


def map_to_vector(f: LinMap) -> np.ndarray:
    return f.entries.reshape(-1).copy()
