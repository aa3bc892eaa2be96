#!/usr/bin/env python3
"""
Tests for the exact linear algebra layer
"""
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import ArgumentError, DimensionError
from src.core.exact_linear import (
    TensorSpace, compose, diagonal, format_scalar, from_images, from_matrix, identity, inverse,
    is_invertible, kernel_basis, map_to_vector, perm_operator, rank, regroup, require_endomorphism, tau,
    tau12, tensor, to_scalar, vector_to_map, xi, xi_squared, zero_map
)


small_ints = st.integers(min_value=-3, max_value=3)


def square_maps(n):
    return st.lists(small_ints, min_size=n * n, max_size=n * n).map(
        lambda xs: from_matrix(np.array(xs, dtype=object).reshape(n, n), n, n))


def basis_vector(dim, i):
    v = [0] * dim
    v[i] = 1
    return v


def test_scalars():
    """Scalars are exact rationals; floats and booleans are refused"""
    print("\nTest: Scalars")

    assert to_scalar("-2/4") == Fraction(-1, 2)
    assert to_scalar(3) == Fraction(3)
    assert format_scalar(Fraction(6, 4)) == "3/2"
    assert format_scalar(Fraction(-5)) == "-5"
    print("✓ parsing and canonical text")

    for bad in (0.5, True, "1/0", "abc", None):
        with pytest.raises(ArgumentError):
            to_scalar(bad)
    print("✓ rejected non-rationals")


def test_tensor_space_indexing():
    print("\nTest: TensorSpace indexing")

    space = TensorSpace((2, 3))
    assert space.dim == 6
    assert space.arity == 2
    assert not space.is_homogeneous
    assert space.base_dim is None
    assert space.index_tuple(4) == (1, 1)
    assert space.flat_index((1, 2)) == 5
    assert TensorSpace.power(3, 2).base_dim == 3
    assert TensorSpace(()).dim == 1
    print(f"✓ {space} has dimension {space.dim}")


def test_permutations_move_factors():
    """τ swaps two factors, ξ rotates three to the left"""
    print("\nTest: Permutation operators")

    n = 2
    e01 = basis_vector(4, TensorSpace.power(n, 2).flat_index((0, 1)))
    swapped = tau(n).apply(e01)
    assert list(swapped) == basis_vector(4, TensorSpace.power(n, 2).flat_index((1, 0)))

    cube = TensorSpace.power(n, 3)
    e011 = basis_vector(8, cube.flat_index((0, 1, 1)))
    assert list(xi(n).apply(e011)) == basis_vector(8, cube.flat_index((1, 1, 0)))
    assert list(xi_squared(n).apply(e011)) == basis_vector(8, cube.flat_index((1, 0, 1)))
    assert list(tau12(n).apply(e011)) == basis_vector(8, cube.flat_index((1, 0, 1)))
    print("✓ τ, ξ, ξ², τ¹² act on basis tensors as expected")

    assert xi(n) @ xi(n) == xi_squared(n)
    assert xi(n) @ xi_squared(n) == identity(cube)
    assert tau(n) @ tau(n) == identity(TensorSpace.power(n, 2))
    print("✓ group relations")

    with pytest.raises(ArgumentError):
        perm_operator(2, (0, 0))


def test_mixed_factor_swap():
    """τ on K^2 ⊗ K^3 lands in K^3 ⊗ K^2"""
    print("\nTest: Mixed-dimension swap")

    swap = perm_operator((2, 3), (1, 0))
    assert swap.domain == TensorSpace((2, 3))
    assert swap.codomain == TensorSpace((3, 2))
    back = perm_operator((3, 2), (1, 0))
    assert back @ swap == identity(TensorSpace((2, 3)))
    print("✓ swap and its inverse")


@settings(max_examples=40, deadline=None)
@given(square_maps(2), square_maps(2))
def test_swap_naturality(f, g):
    """τ∘(f⊗g) = (g⊗f)∘τ, which also exercises the permutation fast paths"""
    assert tau(2) @ tensor(f, g) == tensor(g, f) @ tau(2)


@settings(max_examples=40, deadline=None)
@given(square_maps(2), square_maps(2), square_maps(2))
def test_rotation_naturality(f, g, h):
    """ξ∘(f⊗g⊗h) = (g⊗h⊗f)∘ξ"""
    lhs = xi(2) @ tensor(tensor(f, g), h)
    rhs = tensor(tensor(g, h), f) @ xi(2)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(square_maps(3))
def test_fast_path_matches_dense_product(f):
    dense_perm = from_matrix(tau(3).entries, TensorSpace((3, 3)), TensorSpace((3, 3)))
    g = tensor(f, identity(3))
    assert compose(tau(3), g) == compose(dense_perm, g)
    assert compose(g, tau(3)) == compose(g, dense_perm)
    assert tau(3).transpose() == dense_perm.transpose()


@settings(max_examples=30, deadline=None)
@given(st.lists(small_ints, min_size=12, max_size=12))
def test_rank_nullity(entries):
    f = from_matrix(np.array(entries, dtype=object).reshape(3, 4), 4, 3)
    kernel = kernel_basis(f)
    assert len(kernel) == 4 - rank(f)
    for v in kernel:
        assert not any(f.apply(v))


def test_kernel_of_rank_one_matrix():
    print("\nTest: Kernel example")

    kernel = kernel_basis(from_matrix([[1, 1], [2, 2]], 2, 2))
    assert len(kernel) == 1
    (v,) = kernel
    assert v[0] != 0
    assert v[0] == -v[1]
    assert all(isinstance(x, Fraction) for x in v)
    print(f"✓ kernel spanned by {[format_scalar(x) for x in v]}")


def test_from_images_is_image_major():
    print("\nTest: Image-major construction")

    f = from_images([[1, 2], [3, 4]], 2, 2)
    assert list(f.column(0)) == [1, 2]
    assert list(f.column(1)) == [3, 4]
    assert f == from_matrix([[1, 3], [2, 4]], 2, 2)
    assert vector_to_map(map_to_vector(f), 2) == f
    print("✓ row i of the images is the image of e_i")


def test_inverse_and_invertibility():
    print("\nTest: Inverse")

    p = from_matrix([[1, 2, -1], [0, 1, 3], [0, 0, 1]], 3, 3)
    assert is_invertible(p)
    assert p @ inverse(p) == identity(3)
    assert not is_invertible(diagonal([1, 0]))
    with pytest.raises(ArgumentError):
        inverse(diagonal([1, 0]))
    print("✓ unit upper-triangular inverse is exact")


def test_dimension_errors():
    print("\nTest: Dimension errors")

    with pytest.raises(DimensionError):
        compose(identity(2), identity(3))
    with pytest.raises(DimensionError):
        identity(2) + zero_map(2, 3)
    with pytest.raises(DimensionError):
        regroup(identity(4), TensorSpace((3,)))
    m = regroup(identity(4), TensorSpace((2, 2)), TensorSpace((2, 2)))
    assert m == identity(TensorSpace((2, 2)))

    require_endomorphism(identity(3), 3, "phi")
    for bad in (identity(2), zero_map(3, 2), identity(TensorSpace((3, 1)))):
        with pytest.raises(DimensionError) as info:
            require_endomorphism(bad, 3, "phi")
        assert "phi must be an operator on K^3" in str(info.value)
    print("✓ mismatched spaces are refused")


def run_all_tests():
    """Run all tests"""
    print("\nExact Linear Algebra Test Suite")

    tests = [
        test_scalars,
        test_tensor_space_indexing,
        test_permutations_move_factors,
        test_mixed_factor_swap,
        test_swap_naturality,
        test_rotation_naturality,
        test_fast_path_matches_dense_product,
        test_rank_nullity,
        test_kernel_of_rank_one_matrix,
        test_from_images_is_image_major,
        test_inverse_and_invertibility,
        test_dimension_errors,
    ]

    passed = 0
    failed = 0

    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            print(f"\n✗ Test failed: {test.__name__}")
            print(f"  Error: {e}")
            import traceback
            traceback.print_exc()
            failed += 1

    print("\nTest Summary")
    print(f"Passed: {passed}/{len(tests)}")
    print(f"Failed: {failed}/{len(tests)}")

    return failed == 0


if __name__ == '__main__':
    success = run_all_tests()
    sys.exit(0 if success else 1)
