"""
Domain types for Hom-Lie (co)algebras, (co)derivation pairs, comodules,
representations and operators, plus the CheckReport returned by every checker
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from src.core.errors import ArgumentError, DimensionError
from src.core.exact_linear import (
    LinMap, TensorSpace, format_scalar, from_images, identity, to_scalar, zero_map
)


class CoalgebraFlavor(str, Enum):
    LIE = 'lie'
    COASSOCIATIVE = 'coassociative'
    PRE_LIE = 'pre_lie'
    UNCHECKED = 'unchecked'


class AlgebraFlavor(str, Enum):
    LIE = 'lie'
    ASSOCIATIVE = 'associative'
    UNCHECKED = 'unchecked'


def parse_flavor(value, flavor_type=CoalgebraFlavor):
    """Flavor tag from text; unknown tags raise ArgumentError"""
    if isinstance(value, flavor_type):
        return value
    try:
        return flavor_type(str(value))
    except ValueError:
        allowed = ', '.join(f.value for f in flavor_type)
        raise ArgumentError(f"unknown flavor '{value}' (expected one of: {allowed})")


def _expect(f: LinMap, domain: Tuple[int, ...], codomain: Tuple[int, ...], name: str):
    if f.domain != TensorSpace(domain) or f.codomain != TensorSpace(codomain):
        raise DimensionError(f"{name} has the wrong type",
                             f"{f.codomain} <- {f.domain}",
                             f"{TensorSpace(codomain)} <- {TensorSpace(domain)}")


@dataclass(frozen=True)
class Witness:
    """Basis input on which an identity fails, with both evaluated sides"""
    index: Tuple[int, ...]
    lhs: Tuple[Fraction, ...]
    rhs: Tuple[Fraction, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': list(self.index),
            'lhs': [format_scalar(x) for x in self.lhs],
            'rhs': [format_scalar(x) for x in self.rhs],
        }


@dataclass(frozen=True)
class CheckReport:
    """
    Outcome of one identity check

    passed is False exactly when a witness is present. Advisory reports are
    informational and never count towards an aggregate verdict.
    """
    identity_name: str
    passed: bool
    witness: Optional[Witness] = None
    detail: str = ''
    advisory: bool = False

    def __post_init__(self):
        if self.passed == (self.witness is not None):
            raise ArgumentError(f"report '{self.identity_name}': witness must be present iff the check failed")

    @classmethod
    def compare(cls, name: str, lhs: LinMap, rhs: LinMap, detail: str = '', advisory: bool = False) -> 'CheckReport':
        """Compare two maps column by column; the first differing column is the witness"""
        if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
            raise DimensionError(f"sides of '{name}' live in different spaces",
                                 f"{lhs.codomain} <- {lhs.domain}", f"{rhs.codomain} <- {rhs.domain}")
        diff = lhs.entries != rhs.entries
        bad_columns = np.flatnonzero(np.any(diff, axis=0))
        if bad_columns.size == 0:
            return cls(name, True, None, '', advisory)
        col = int(bad_columns[0])
        witness = Witness(lhs.domain.index_tuple(col),
                          tuple(lhs.column(col)), tuple(rhs.column(col)))
        return cls(name, False, witness, detail or name, advisory)

    @classmethod
    def vanishes(cls, name: str, f: LinMap, detail: str = '') -> 'CheckReport':
        return cls.compare(name, f, zero_map(f.domain, f.codomain), detail)

    @classmethod
    def combine(cls, name: str, parts: List['CheckReport']) -> 'CheckReport':
        """One report for a conjunction of clauses; detail names the first failing clause"""
        for part in parts:
            if not part.passed:
                return cls(name, False, part.witness, part.identity_name)
        return cls(name, True)

    def to_dict(self) -> Dict[str, Any]:
        record = {
            'name': self.identity_name,
            'passed': self.passed,
            'witness_index': None,
            'lhs': None,
            'rhs': None,
            'detail': self.detail,
            'advisory': self.advisory,
        }
        if self.witness is not None:
            w = self.witness.to_dict()
            record.update(witness_index=w['index'], lhs=w['lhs'], rhs=w['rhs'])
        return record

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckReport':
        witness = None
        if data.get('witness_index') is not None:
            witness = Witness(tuple(int(i) for i in data['witness_index']),
                              tuple(to_scalar(x) for x in data['lhs']),
                              tuple(to_scalar(x) for x in data['rhs']))
        return cls(data['name'], bool(data['passed']), witness,
                   data.get('detail', ''), bool(data.get('advisory', False)))

    def describe(self) -> str:
        """One human-readable line"""
        status = 'PASS' if self.passed else 'FAIL'
        line = f"{self.identity_name}: {status}"
        if self.advisory:
            line += " (advisory)"
        if self.witness is not None:
            w = self.witness.to_dict()
            basis = '⊗'.join(f"e{i}" for i in w['index'])
            line += f" at {basis} [{self.detail}] lhs={w['lhs']} rhs={w['rhs']}"
        return line


def all_passed(reports: List[CheckReport]) -> bool:
    """Aggregate verdict; advisory reports are ignored"""
    return all(r.passed for r in reports if not r.advisory)


def failing(reports: List[CheckReport]) -> List[CheckReport]:
    return [r for r in reports if not r.passed and not r.advisory]


@dataclass(frozen=True)
class HomCoalgebra:
    """Cobracket Δ: L → L⊗L with twist α on L = K^n"""
    delta: LinMap
    alpha: LinMap
    flavor: CoalgebraFlavor = CoalgebraFlavor.LIE

    def __post_init__(self):
        n = self.delta.domain.dim
        _expect(self.delta, (n,), (n, n), 'delta')
        _expect(self.alpha, (n,), (n,), 'alpha')
        object.__setattr__(self, 'flavor', parse_flavor(self.flavor, CoalgebraFlavor))

    @property
    def n(self) -> int:
        return self.delta.domain.dim

    def with_flavor(self, flavor) -> 'HomCoalgebra':
        return HomCoalgebra(self.delta, self.alpha, flavor)


@dataclass(frozen=True)
class HomAlgebra:
    """Bracket/product μ: L⊗L → L with twist α"""
    mu: LinMap
    alpha: LinMap
    flavor: AlgebraFlavor = AlgebraFlavor.LIE

    def __post_init__(self):
        n = self.mu.codomain.dim
        _expect(self.mu, (n, n), (n,), 'mu')
        _expect(self.alpha, (n,), (n,), 'alpha')
        object.__setattr__(self, 'flavor', parse_flavor(self.flavor, AlgebraFlavor))

    @property
    def n(self) -> int:
        return self.mu.codomain.dim


@dataclass(frozen=True)
class CoDerPair:
    coalg: HomCoalgebra
    phi: LinMap
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        _expect(self.phi, (self.coalg.n,), (self.coalg.n,), 'phi')

    @property
    def n(self) -> int:
        return self.coalg.n

    @property
    def delta(self) -> LinMap:
        return self.coalg.delta

    @property
    def alpha(self) -> LinMap:
        return self.coalg.alpha

    @property
    def flavor(self) -> CoalgebraFlavor:
        return self.coalg.flavor


@dataclass(frozen=True)
class DerPair:
    alg: HomAlgebra
    phi: LinMap
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        _expect(self.phi, (self.alg.n,), (self.alg.n,), 'phi')

    @property
    def n(self) -> int:
        return self.alg.n

    @property
    def mu(self) -> LinMap:
        return self.alg.mu

    @property
    def alpha(self) -> LinMap:
        return self.alg.alpha

    @property
    def flavor(self) -> AlgebraFlavor:
        return self.alg.flavor


@dataclass(frozen=True)
class Comodule:
    """Left coaction ρ: M → L⊗M with module twist β"""
    base: HomCoalgebra
    rho: LinMap
    beta: LinMap

    def __post_init__(self):
        m = self.beta.domain.dim
        _expect(self.rho, (m,), (self.base.n, m), 'rho')
        _expect(self.beta, (m,), (m,), 'beta')

    @property
    def m(self) -> int:
        return self.beta.domain.dim


@dataclass(frozen=True)
class CoDerComodule:
    comod: Comodule
    phi_m: LinMap
    pair: CoDerPair
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        _expect(self.phi_m, (self.comod.m,), (self.comod.m,), 'phi_m')
        if self.pair.coalg != self.comod.base:
            raise DimensionError("comodule and CoDer pair do not share the base coalgebra")

    @property
    def m(self) -> int:
        return self.comod.m

    @property
    def rho(self) -> LinMap:
        return self.comod.rho

    @property
    def beta(self) -> LinMap:
        return self.comod.beta


@dataclass(frozen=True)
class Representation:
    """Action L⊗V → V of a Der pair, with module twist A and operator φ_V"""
    pair: DerPair
    action: LinMap
    a_op: LinMap
    phi_v: LinMap
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        v = self.a_op.domain.dim
        _expect(self.action, (self.pair.n, v), (v,), 'action')
        _expect(self.a_op, (v,), (v,), 'a_op')
        _expect(self.phi_v, (v,), (v,), 'phi_v')

    @property
    def v(self) -> int:
        return self.a_op.domain.dim


@dataclass(frozen=True)
class RotaBaxterData:
    r: LinMap
    weight: Fraction

    def __post_init__(self):
        n = self.r.domain.dim
        _expect(self.r, (n,), (n,), 'R')
        object.__setattr__(self, 'weight', to_scalar(self.weight))


@dataclass(frozen=True)
class EndoOp:
    t: LinMap
    require_idempotent: bool = False
    require_commute_phi: bool = False

    def __post_init__(self):
        n = self.t.domain.dim
        _expect(self.t, (n,), (n,), 'T')


class StructureKind(str, Enum):
    COALGEBRA = 'coalgebra'
    ALGEBRA = 'algebra'
    COMODULE = 'comodule'
    REPRESENTATION = 'representation'


Module = Union[CoDerComodule, Representation]


@dataclass
class StructureBundle:
    """
    Everything a bundle document carries

    coalgebra bundles hold `coalgebra` (+ optional phi, R, T); algebra bundles
    hold `algebra` (+ optional phi); comodule and representation bundles hold
    their base structure plus `module`.
    """
    structure: StructureKind
    coalgebra: Optional[HomCoalgebra] = None
    algebra: Optional[HomAlgebra] = None
    phi: Optional[LinMap] = None
    rota_baxter: Optional[RotaBaxterData] = None
    endo: Optional[EndoOp] = None
    module: Optional[Module] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.structure = StructureKind(self.structure)
        base_is_coalgebra = self.structure in (StructureKind.COALGEBRA, StructureKind.COMODULE)
        if base_is_coalgebra and self.coalgebra is None:
            raise ArgumentError(f"{self.structure.value} bundle needs a coalgebra")
        if not base_is_coalgebra and self.algebra is None:
            raise ArgumentError(f"{self.structure.value} bundle needs an algebra")
        if self.structure in (StructureKind.COMODULE, StructureKind.REPRESENTATION) and self.module is None:
            raise ArgumentError(f"{self.structure.value} bundle needs module data")

    @property
    def dimension(self) -> int:
        return self.coalgebra.n if self.coalgebra is not None else self.algebra.n

    @property
    def flavor(self) -> str:
        base = self.coalgebra if self.coalgebra is not None else self.algebra
        return base.flavor.value

    def coder_pair(self) -> CoDerPair:
        """The bundle read as a CoDer pair; a missing φ is the zero coderivation"""
        if self.coalgebra is None:
            raise ArgumentError(f"{self.structure.value} bundle has no coalgebra")
        if self.module is not None:
            return self.module.pair
        phi = self.phi if self.phi is not None else zero_map(self.coalgebra.n, self.coalgebra.n)
        return CoDerPair(self.coalgebra, phi, dict(self.metadata))

    def der_pair(self) -> DerPair:
        if self.algebra is None:
            raise ArgumentError(f"{self.structure.value} bundle has no algebra")
        if self.module is not None:
            return self.module.pair
        phi = self.phi if self.phi is not None else zero_map(self.algebra.n, self.algebra.n)
        return DerPair(self.algebra, phi, dict(self.metadata))

    @classmethod
    def from_coder_pair(cls, pair: CoDerPair, **extra) -> 'StructureBundle':
        return cls(StructureKind.COALGEBRA, coalgebra=pair.coalg, phi=pair.phi,
                   metadata=dict(pair.metadata), **extra)

    @classmethod
    def from_der_pair(cls, pair: DerPair) -> 'StructureBundle':
        return cls(StructureKind.ALGEBRA, algebra=pair.alg, phi=pair.phi, metadata=dict(pair.metadata))

    @classmethod
    def from_module(cls, module: Module) -> 'StructureBundle':
        if isinstance(module, CoDerComodule):
            return cls(StructureKind.COMODULE, coalgebra=module.pair.coalg, phi=module.pair.phi,
                       module=module, metadata=dict(module.metadata))
        return cls(StructureKind.REPRESENTATION, algebra=module.pair.alg, phi=module.pair.phi,
                   module=module, metadata=dict(module.metadata))


def coalgebra_from_images(delta_images, alpha=None, flavor=CoalgebraFlavor.LIE) -> HomCoalgebra:
    """
    HomCoalgebra from image vectors

    delta_images[i] is the n²-coefficient vector of Δ(e_i); alpha defaults
    to the identity and otherwise is given the same way (row i = α(e_i)).
    """
    n = len(delta_images)
    delta = from_images(delta_images, TensorSpace((n,)), TensorSpace((n, n)))
    alpha_map = identity(n) if alpha is None else from_images(alpha, n, n)
    return HomCoalgebra(delta, alpha_map, flavor)


def algebra_from_images(mu_images, n: int, alpha=None, flavor=AlgebraFlavor.LIE) -> HomAlgebra:
    """HomAlgebra from image vectors: mu_images[i*n+j] is [e_i, e_j]"""
    mu = from_images(mu_images, TensorSpace((n, n)), TensorSpace((n,)))
    alpha_map = identity(n) if alpha is None else from_images(alpha, n, n)
    return HomAlgebra(mu, alpha_map, flavor)


def report_dicts(reports: List[CheckReport]) -> List[Dict[str, Any]]:
    return [r.to_dict() for r in reports]
