#!/usr/bin/env python3
"""
Tests for coalgebra/algebra duality and its certificates
"""
import sys
from itertools import count
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import ArgumentError, ConstructionRefused
from src.core.exact_linear import diagonal, from_images, identity, zero_map
from src.core.structures import (
    AlgebraFlavor, CoalgebraFlavor, CoDerPair, DerPair, HomCoalgebra, Representation, all_passed,
    algebra_from_images
)
from src.checkers import check_coder_comodule_full, check_der_pair, check_derivation, check_representation_full
from src.constructions import (
    DualityCertificate, adjoint_comodule, adjoint_representation, dualize, dualize_algebra, dualize_coalgebra,
    dualize_coder_pair, dualize_comodule, dualize_der_pair, dualize_representation, direct_sum_coder_pairs,
    direct_sum_der_pairs, regular_comodule
)
from src.solvers import GenerationRecipe, coderivation_basis, derivation_basis, generate
from src.solvers.seed_library import abelian, left_unit_coalgebra, two_dim_nonabelian


def lie_pairs(total: int):
    for k in count():
        if k == total:
            return
        dim = 1 + k % 4
        strategy = 'twist' if dim == 1 or (dim < 4 and k % 2 == 0) else 'sum_closure'
        yield generate(GenerationRecipe(strategy, k, dim)).coder_pair()


def l2_pair() -> CoDerPair:
    return CoDerPair(two_dim_nonabelian(), diagonal([0, 1]))


def test_l2_dualizes_to_bracket():
    """Δ(e1) = e0⊗e1 − e1⊗e0 is dual to [e0, e1] = e1"""
    print("\nTest: L2 dual")

    dual = dualize_coder_pair(l2_pair())
    expected = algebra_from_images([[0, 0], [0, 1], [0, -1], [0, 0]], 2)
    assert dual.alg == expected
    assert dual.phi == diagonal([0, 1])
    assert dual.flavor == AlgebraFlavor.LIE
    assert dual.metadata['duality']['direction'] == 'coalgebra->algebra'
    print("✓ matrices transposed, flavor mapped to lie")


def test_dual_pairs_are_valid_and_double_dual_is_identity():
    print("\nTest: Duality of generated pairs")

    checked = 0
    for pair in lie_pairs(100):
        dual = dualize_coder_pair(pair)
        assert all_passed(check_der_pair(dual))
        assert dual.alpha == pair.alpha.transpose()

        back = dualize_der_pair(dual)
        assert back == pair
        assert back.flavor == CoalgebraFlavor.LIE
        checked += 1
    print(f"✓ {checked} pairs: duals valid, double duals equal the originals")


def test_flavor_mapping():
    print("\nTest: Flavor mapping")

    c = left_unit_coalgebra()
    assert dualize_coalgebra(c).flavor == AlgebraFlavor.ASSOCIATIVE
    assert dualize_algebra(dualize_coalgebra(c)) == c
    assert dualize_coalgebra(c.with_flavor(CoalgebraFlavor.PRE_LIE)).flavor == AlgebraFlavor.UNCHECKED
    assert dualize_coalgebra(c.with_flavor(CoalgebraFlavor.UNCHECKED)).flavor == AlgebraFlavor.UNCHECKED
    print("✓ coassociative ↔ associative, pre-Lie dualizes unchecked")


def test_invalid_pairs_are_refused():
    print("\nTest: Refused dualizations")

    delta = from_images([[0, 0, 0, 0], [0, 1, 0, 0]], 2, (2, 2))
    broken = CoDerPair(HomCoalgebra(delta, identity(2), CoalgebraFlavor.LIE), identity(2))
    with pytest.raises(ConstructionRefused) as info:
        dualize_coder_pair(broken)
    assert any(not r.passed for r in info.value.reports)
    print(f"✓ {info.value}")

    with pytest.raises(ArgumentError):
        dualize(identity(2))


def test_comodule_and_representation_duality():
    print("\nTest: Comodule duality")

    module = regular_comodule(l2_pair())
    rep = dualize_comodule(module)
    assert isinstance(rep, Representation)
    assert all_passed(check_representation_full(rep))
    assert rep == adjoint_representation(dualize_coder_pair(l2_pair()))
    print("✓ regular comodule dualizes to the adjoint representation")

    back = dualize_representation(rep)
    assert back.rho == module.rho
    assert back.beta == module.beta
    assert back.phi_m == module.phi_m
    assert all_passed(check_coder_comodule_full(back))
    print("✓ and back again")

    adjoint = adjoint_comodule(l2_pair())
    dual_module = dualize_comodule(adjoint)
    assert dual_module.v == 4
    assert all_passed(check_representation_full(dual_module))
    print("✓ the adjoint comodule dualizes to a representation on L2* ⊗ L2*")


def test_certificates():
    print("\nTest: Duality certificates")

    pair = l2_pair()
    target, certificate = dualize(pair)
    assert isinstance(target, DerPair)
    assert isinstance(certificate, DualityCertificate)
    assert certificate.direction == 'coalgebra->algebra'
    assert certificate.source_id != certificate.target_id
    assert set(certificate.to_dict()) == {'source_id', 'target_id', 'direction', 'basis_note'}

    _, again = dualize(l2_pair())
    assert again == certificate

    back, reverse = dualize(target)
    assert back == pair
    assert reverse.direction == 'algebra->coalgebra'
    assert reverse.source_id == certificate.target_id
    assert reverse.target_id == certificate.source_id
    print(f"✓ {certificate.source_id} ⇄ {certificate.target_id}")


def test_duality_turns_coalgebra_sums_into_algebra_sums():
    """dual(P₁ ⊕ P₂) = dual(P₁) ⊕ dual(P₂), matrix for matrix"""
    print("\nTest: Duals of direct sums")

    fixed = [(CoDerPair(abelian(2), zero_map(2, 2)), l2_pair())]
    pairs = list(lie_pairs(12))
    checked = 0
    for left, right in fixed + list(zip(pairs, pairs[1:])):
        whole = dualize_coder_pair(direct_sum_coder_pairs(left, right))
        parts = direct_sum_der_pairs(dualize_coder_pair(left), dualize_coder_pair(right))
        assert whole == parts
        checked += 1
    print(f"✓ {checked} sums: dualizing commutes with the direct sum")


def test_dual_operator_spaces_have_equal_dimension():
    print("\nTest: Dual (co)derivation spaces")

    for pair in lie_pairs(30):
        dual = dualize_coder_pair(pair)
        assert derivation_basis(dual.alg).dimension == coderivation_basis(pair.coalg).dimension
        for element in coderivation_basis(pair.coalg).basis:
            assert check_derivation(dual.alg, element.transpose()).passed
    print("✓ transposed coderivations are derivations of the dual")


def run_all_tests():
    """Run all tests"""
    print("\nDuality Test Suite")

    tests = [
        test_l2_dualizes_to_bracket,
        test_dual_pairs_are_valid_and_double_dual_is_identity,
        test_flavor_mapping,
        test_invalid_pairs_are_refused,
        test_comodule_and_representation_duality,
        test_certificates,
        test_duality_turns_coalgebra_sums_into_algebra_sums,
        test_dual_operator_spaces_have_equal_dimension,
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
