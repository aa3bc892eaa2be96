"""
Bundle-level checking: runs every checker that applies to a structure
"""
from typing import List

from src.core.errors import ArgumentError, ConstructionRefused
from src.core.structures import (
    AlgebraFlavor, CheckReport, CoalgebraFlavor, CoDerComodule, CoDerPair, DerPair,
    HomAlgebra, HomCoalgebra, Representation, StructureBundle, StructureKind, all_passed
)
from src.checkers.coalgebra_axioms import (
    check_coderivation, check_hom_co_jacobi, check_hom_coassoc, check_hom_pre_lie,
    check_multiplicative, check_skew
)
from src.checkers.algebra_axioms import check_derivation, check_hom_assoc_algebra, check_hom_lie_algebra
from src.checkers.module_axioms import check_comodule, check_coder_comodule, check_representation
from src.checkers.operator_axioms import check_endo_op, check_phi_alpha_commute, check_rota_baxter


COALGEBRA_SUITES = {
    CoalgebraFlavor.LIE: (check_skew, check_hom_co_jacobi, check_multiplicative),
    CoalgebraFlavor.COASSOCIATIVE: (check_hom_coassoc, check_multiplicative),
    CoalgebraFlavor.PRE_LIE: (check_hom_pre_lie, check_multiplicative),
    CoalgebraFlavor.UNCHECKED: (),
}

ALGEBRA_SUITES = {
    AlgebraFlavor.LIE: (check_hom_lie_algebra,),
    AlgebraFlavor.ASSOCIATIVE: (check_hom_assoc_algebra,),
    AlgebraFlavor.UNCHECKED: (),
}


def check_coalgebra(c: HomCoalgebra) -> List[CheckReport]:
    if c.flavor not in COALGEBRA_SUITES:
        raise ArgumentError(f"unknown coalgebra flavor: {c.flavor}")
    return [checker(c) for checker in COALGEBRA_SUITES[c.flavor]]


def check_algebra(a: HomAlgebra) -> List[CheckReport]:
    if a.flavor not in ALGEBRA_SUITES:
        raise ArgumentError(f"unknown algebra flavor: {a.flavor}")
    return [checker(a) for checker in ALGEBRA_SUITES[a.flavor]]


def check_coder_pair(p: CoDerPair) -> List[CheckReport]:
    """Flavor suite plus the coderivation law; φα = αφ is reported as advisory"""
    return check_coalgebra(p.coalg) + [
        check_coderivation(p.coalg, p.phi),
        check_phi_alpha_commute(p.phi, p.alpha),
    ]


def check_der_pair(p: DerPair) -> List[CheckReport]:
    return check_algebra(p.alg) + [
        check_derivation(p.alg, p.phi),
        check_phi_alpha_commute(p.phi, p.alpha),
    ]


def check_coder_comodule_full(m: CoDerComodule) -> List[CheckReport]:
    return check_coder_pair(m.pair) + [check_comodule(m.comod), check_coder_comodule(m)]


def check_representation_full(rep: Representation) -> List[CheckReport]:
    return check_der_pair(rep.pair) + [check_representation(rep)]


def check_bundle(bundle: StructureBundle) -> List[CheckReport]:
    """
    Run every applicable checker

    Coalgebra bundles get their flavor suite, then the coderivation law if φ
    is present, the Rota-Baxter identity if R is present and the
    endomorphism-operator laws if T is present.
    """
    if bundle.structure == StructureKind.COALGEBRA:
        c = bundle.coalgebra
        reports = check_coalgebra(c)
        if bundle.phi is not None:
            reports.append(check_coderivation(c, bundle.phi))
            reports.append(check_phi_alpha_commute(bundle.phi, c.alpha))
        if bundle.rota_baxter is not None:
            reports.append(check_rota_baxter(c, bundle.rota_baxter))
        if bundle.endo is not None:
            reports.append(check_endo_op(c, bundle.endo, bundle.phi))
        return reports

    if bundle.structure == StructureKind.ALGEBRA:
        reports = check_algebra(bundle.algebra)
        if bundle.phi is not None:
            reports.append(check_derivation(bundle.algebra, bundle.phi))
            reports.append(check_phi_alpha_commute(bundle.phi, bundle.algebra.alpha))
        return reports

    if bundle.structure == StructureKind.COMODULE:
        return check_coder_comodule_full(bundle.module)

    if bundle.structure == StructureKind.REPRESENTATION:
        return check_representation_full(bundle.module)

    raise ArgumentError(f"unknown structure kind: {bundle.structure}")


def require_passing(construction: str, reports: List[CheckReport]):
    """Refuse a construction whose inputs fail any non-advisory check"""
    if not all_passed(reports):
        raise ConstructionRefused(construction, [r for r in reports if not r.passed and not r.advisory])
