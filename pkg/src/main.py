#!/usr/bin/env python3
"""
Hom-Lie CoDer toolkit - command-line orchestrator for checking, building,
dualizing, solving and searching structure bundles

Exit codes: 0 all checks pass, 1 semantic failure (failing check, refused
construction, guard), 2 unreadable or malformed input.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.bundle_io import load_bundle, matrix_rows, reports_to_json, save_bundle, serialize
from src.core.config import get_config
from src.core.errors import AlgebraError, ArgumentError, BundleFormatError, ConstructionRefused
from src.core.exact_linear import LinMap, from_images, identity, zero_map
from src.core.logger import FailureAnalyzer, get_logger
from src.core.structures import (
    CoDerComodule, CoDerPair, DerPair, EndoOp, Representation, RotaBaxterData, StructureBundle,
    StructureKind, all_passed, report_dicts
)
from src.checkers import check_bundle
from src.constructions import (
    adjoint_comodule, adjoint_representation, commutator_ass_to_lie, commutator_pre_lie_to_lie,
    direct_sum_coder_pairs, direct_sum_der_pairs, dualize, endo_twist, rb_twist, regular_comodule,
    semidirect_algebra, semidirect_coalgebra
)
from src.solvers import (
    GenerationRecipe, OperatorKind, coderivation_basis, default_strategy, derivation_basis, generate,
    parse_grid, search_operators
)


def parse_operator(text: Optional[str], n: int, fallback: Optional[LinMap], name: str) -> LinMap:
    """
    Operator from the command line: identity, zero, or inline image-major
    rows "a,b;c,d" (row i is the image of e_i); defaults to the bundle's own
    """
    if text is None:
        if fallback is None:
            raise ArgumentError(f"--{name} is required: the bundle carries no {name} matrix")
        return fallback
    if text == 'identity':
        return identity(n)
    if text == 'zero':
        return zero_map(n, n)
    rows = [row.split(',') for row in text.split(';')]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ArgumentError(f"--{name} must be {n} rows of {n} entries, got {text!r}")
    return from_images(rows, n, n)


def _as_structure(bundle: StructureBundle):
    """The richest object a bundle describes"""
    if bundle.module is not None:
        return bundle.module
    if bundle.structure == StructureKind.COALGEBRA:
        return bundle.coder_pair()
    return bundle.der_pair()


def _as_bundle(obj) -> StructureBundle:
    if isinstance(obj, CoDerPair):
        return StructureBundle.from_coder_pair(obj)
    if isinstance(obj, DerPair):
        return StructureBundle.from_der_pair(obj)
    if isinstance(obj, (CoDerComodule, Representation)):
        return StructureBundle.from_module(obj)
    raise ArgumentError(f"cannot store a {type(obj).__name__} as a bundle")


def _require(bundle: StructureBundle, *kinds: StructureKind) -> StructureBundle:
    if bundle.structure not in kinds:
        expected = ' or '.join(k.value for k in kinds)
        raise ArgumentError(f"expected a {expected} bundle, got {bundle.structure.value}")
    return bundle


class HomCoderOrchestrator:
    """Dispatches CLI commands to the library"""

    def __init__(self):
        self.config = get_config()
        self.logger = get_logger()
        self.project_root = Path(__file__).parent.parent

        # kind: (handler, number of input bundles, description)
        self.constructions = {
            'semidirect': (self._semidirect, 1, 'Semidirect CoDer pair L⊕M from a comodule bundle'),
            'semidirect-alg': (self._semidirect_alg, 1, 'Semidirect Der pair L⊕V from a representation bundle'),
            'dsum': (self._dsum, 2, 'Direct sum of two CoDer pairs of the same flavor'),
            'dsum-alg': (self._dsum_alg, 2, 'Direct sum of two Hom-Lie Der pairs'),
            'commutator-prelie': (self._commutator_prelie, 1, 'Hom-Lie CoDer pair from a Hom-pre-Lie one'),
            'commutator-ass': (self._commutator_ass, 1, 'Hom-Lie CoDer pair from a Hom-coassociative one'),
            'rb-twist': (self._rb_twist, 1, 'Hom-pre-Lie CoDer pair from a Rota-Baxter operator (--R, --lambda)'),
            'endo-twist': (self._endo_twist, 1, 'Hom-Lie CoDer pair from an idempotent endomorphism operator (--T)'),
            'adjoint-comodule': (self._adjoint_comodule, 1, 'Adjoint CoDer comodule on L⊗L'),
            'regular-comodule': (self._regular_comodule, 1, 'Regular CoDer comodule M = L'),
            'adjoint-representation': (self._adjoint_representation, 1, 'Adjoint representation V = L'),
            'dualize': (self._dualize, 1, 'Dual structure (transposed matrices)'),
        }

    # Construction handlers

    def _semidirect(self, bundles, args):
        bundle = _require(bundles[0], StructureKind.COMODULE)
        return _as_bundle(semidirect_coalgebra(bundle.module.pair, bundle.module))

    def _semidirect_alg(self, bundles, args):
        bundle = _require(bundles[0], StructureKind.REPRESENTATION)
        return _as_bundle(semidirect_algebra(bundle.module.pair, bundle.module))

    def _dsum(self, bundles, args):
        left, right = (_require(b, StructureKind.COALGEBRA) for b in bundles)
        return _as_bundle(direct_sum_coder_pairs(left.coder_pair(), right.coder_pair()))

    def _dsum_alg(self, bundles, args):
        left, right = (_require(b, StructureKind.ALGEBRA) for b in bundles)
        return _as_bundle(direct_sum_der_pairs(left.der_pair(), right.der_pair()))

    def _commutator_prelie(self, bundles, args):
        return _as_bundle(commutator_pre_lie_to_lie(_require(bundles[0], StructureKind.COALGEBRA).coder_pair()))

    def _commutator_ass(self, bundles, args):
        return _as_bundle(commutator_ass_to_lie(_require(bundles[0], StructureKind.COALGEBRA).coder_pair()))

    def _rb_twist(self, bundles, args):
        bundle = _require(bundles[0], StructureKind.COALGEBRA)
        own = bundle.rota_baxter
        r = parse_operator(args.R, bundle.dimension, own.r if own else None, 'R')
        weight = args.weight if args.weight is not None else (own.weight if own else None)
        if weight is None:
            raise ArgumentError("--lambda is required: the bundle carries no Rota-Baxter weight")
        return _as_bundle(rb_twist(bundle.coder_pair(), RotaBaxterData(r, weight)))

    def _endo_twist(self, bundles, args):
        bundle = _require(bundles[0], StructureKind.COALGEBRA)
        t = parse_operator(args.T, bundle.dimension, bundle.endo.t if bundle.endo else None, 'T')
        return _as_bundle(endo_twist(bundle.coder_pair(), EndoOp(t, True, True)))

    def _adjoint_comodule(self, bundles, args):
        return _as_bundle(adjoint_comodule(_require(bundles[0], StructureKind.COALGEBRA).coder_pair()))

    def _regular_comodule(self, bundles, args):
        return _as_bundle(regular_comodule(_require(bundles[0], StructureKind.COALGEBRA).coder_pair()))

    def _adjoint_representation(self, bundles, args):
        return _as_bundle(adjoint_representation(_require(bundles[0], StructureKind.ALGEBRA).der_pair()))

    def _dualize(self, bundles, args):
        target, certificate = dualize(_as_structure(bundles[0]))
        out = _as_bundle(target)
        out.metadata['duality_certificate'] = certificate.to_dict()
        return out

    # Commands

    def _emit(self, bundle: StructureBundle, out: Optional[str]):
        if out:
            path = save_bundle(bundle, out, self.config.get_indent())
            print(f"wrote {path}", file=sys.stderr)
        else:
            sys.stdout.write(serialize(bundle, self.config.get_indent()))

    def check(self, args) -> int:
        bundle = load_bundle(args.path)
        reports = check_bundle(bundle)
        if args.json:
            sys.stdout.write(reports_to_json(reports))
        else:
            for report in reports:
                print(report.describe())
        passed = all_passed(reports)
        self.logger.log_success('cli', 'check', {'path': args.path, 'passed': passed})
        return 0 if passed else 1

    def construct(self, args) -> int:
        if args.kind not in self.constructions:
            raise ArgumentError(f"unknown construction {args.kind!r}; available: {', '.join(self.constructions)}")
        handler, arity, _ = self.constructions[args.kind]
        if len(args.paths) != arity:
            raise ArgumentError(f"{args.kind} takes {arity} input bundle(s), got {len(args.paths)}")

        bundles = [load_bundle(p) for p in args.paths]
        out = handler(bundles, args)
        reports = check_bundle(out)
        out.metadata['reports'] = report_dicts(reports)
        self._emit(out, args.out)
        for report in reports:
            print(report.describe(), file=sys.stderr)
        return 0 if all_passed(reports) else 1

    def dualize(self, args) -> int:
        args.kind, args.paths = 'dualize', [args.path]
        return self.construct(args)

    def solve(self, args) -> int:
        bundle = load_bundle(args.path)
        if args.kind == 'coder':
            if bundle.coalgebra is None:
                raise ArgumentError("coderivations need a coalgebra bundle")
            basis = coderivation_basis(bundle.coalgebra, commuting_with_alpha=args.commuting_alpha)
        else:
            if bundle.algebra is None:
                raise ArgumentError("derivations need an algebra bundle")
            basis = derivation_basis(bundle.algebra, commuting_with_alpha=args.commuting_alpha)

        print(f"dimension: {basis.dimension}")
        for element in basis.basis:
            print(json.dumps(matrix_rows(element), separators=(',', ':')))
        return 0

    def search(self, args) -> int:
        if args.kind:
            return self._search_operators(args)

        flavor = args.flavor or 'lie'
        strategy = args.strategy or default_strategy(flavor, args.dim)
        for k in range(args.count):
            recipe = GenerationRecipe(strategy, args.seed + k, args.dim, flavor)
            bundle = generate(recipe)
            if args.out:
                self._emit(bundle, str(Path(args.out) / f"{flavor}_{recipe.strategy.value}_{recipe.seed}.json"))
            else:
                sys.stdout.write(serialize(bundle))
        return 0

    def _search_operators(self, args) -> int:
        if not args.input:
            raise ArgumentError("operator search needs --input BUNDLE")
        bundle = _require(load_bundle(args.input), StructureKind.COALGEBRA)
        if args.dim is not None and args.dim != bundle.dimension:
            raise ArgumentError(f"--dim {args.dim} does not match the bundle dimension {bundle.dimension}")

        kind = OperatorKind.ROTA_BAXTER if args.kind == 'rb' else OperatorKind.ENDO
        grid = parse_grid(args.grid) if args.grid else None
        found = search_operators(bundle.coalgebra, kind, grid=grid, weight=args.weight,
                                 require_idempotent=args.idempotent,
                                 phi=bundle.phi if args.commute_phi else None)
        print(f"found: {len(found)}")
        for operator in found:
            print(json.dumps(matrix_rows(operator), separators=(',', ':')))
        return 0

    def list_constructions(self, args) -> int:
        print("\nAvailable constructions:")
        for kind, (_, arity, description) in self.constructions.items():
            print(f"  {kind} ({arity} input): {description}")
        print(f"\nTotal: {len(self.constructions)} constructions")
        return 0

    def failures(self, args) -> int:
        print(FailureAnalyzer().generate_report(args.out))
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Hom-Lie CoDer toolkit')
    parser.add_argument('--verbose', action='store_true', help='Echo log records to stderr')
    commands = parser.add_subparsers(dest='command')

    check = commands.add_parser('check', help='Run every applicable checker on a bundle')
    check.add_argument('path')
    check.add_argument('--json', action='store_true', help='Emit the report list as JSON')

    construct = commands.add_parser('construct', help='Build a structure from input bundles')
    construct.add_argument('kind')
    construct.add_argument('paths', nargs='+')
    construct.add_argument('--out', help='Output bundle path (default: stdout)')
    construct.add_argument('--lambda', dest='weight', help='Rota-Baxter weight')
    construct.add_argument('--R', dest='R', help='identity, zero or rows "a,b;c,d"')
    construct.add_argument('--T', dest='T', help='identity, zero or rows "a,b;c,d"')

    dual = commands.add_parser('dualize', help='Dualize a bundle')
    dual.add_argument('path')
    dual.add_argument('--out')

    solve = commands.add_parser('solve', help='Basis of (co)derivations')
    solve.add_argument('kind', choices=['coder', 'der'])
    solve.add_argument('path')
    solve.add_argument('--commuting-alpha', action='store_true', help='Only operators commuting with alpha')

    search = commands.add_parser('search', help='Generate bundles or grid-search operators')
    search.add_argument('flavor', nargs='?', choices=['lie', 'coassociative', 'pre_lie'])
    search.add_argument('--dim', type=int)
    search.add_argument('--seed', type=int, default=0)
    search.add_argument('--strategy', choices=['zero', 'classical_dual', 'twist', 'sum_closure',
                                               'semidirect_closure'])
    search.add_argument('--count', type=int, default=1)
    search.add_argument('--out', help='Directory for generated bundles (default: stdout)')
    search.add_argument('--kind', choices=['rb', 'endo'], help='Search operators instead of generating')
    search.add_argument('--input', help='Coalgebra bundle to search operators on')
    search.add_argument('--grid', help='Scalar grid, e.g. "-1,0,1"')
    search.add_argument('--lambda', dest='weight', help='Rota-Baxter weight')
    search.add_argument('--idempotent', action='store_true')
    search.add_argument('--commute-phi', action='store_true', help="Require T to commute with the bundle's phi")

    commands.add_parser('list', help='List construction kinds')

    failures = commands.add_parser('failures', help='Summarize logged failures')
    failures.add_argument('--out', help='Also write the report to this file')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2

    get_logger(verbose=args.verbose or None)
    orchestrator = HomCoderOrchestrator()
    commands = {
        'check': orchestrator.check,
        'construct': orchestrator.construct,
        'dualize': orchestrator.dualize,
        'solve': orchestrator.solve,
        'search': orchestrator.search,
        'list': orchestrator.list_constructions,
        'failures': orchestrator.failures,
    }
    if args.command == 'search' and not args.kind and args.dim is None:
        parser.error('search needs --dim when generating bundles')

    try:
        return commands[args.command](args)
    except (BundleFormatError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except ConstructionRefused as e:
        print(f"Error: {e}", file=sys.stderr)
        for report in e.reports:
            print(f"  {report.describe()}", file=sys.stderr)
        return 1
    except AlgebraError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
