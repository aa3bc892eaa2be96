"""
Bundle documents: the JSON text format for structures and check reports

Every matrix is stored image-major (row i holds the coordinates of the image
of the i-th domain basis tensor), so a document matrix is the transpose of
the LinMap matrix. Entries are rational strings; serialization is canonical:
sorted keys, no insignificant whitespace, reduced fractions.
"""
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.core.config import get_config
from src.core.errors import ArgumentError, BundleFormatError
from src.core.exact_linear import LinMap, TensorSpace, format_scalar, from_images, zero_map
from src.core.logger import get_logger
from src.core.structures import (
    AlgebraFlavor, CheckReport, CoalgebraFlavor, CoDerComodule, CoDerPair, Comodule, DerPair,
    EndoOp, HomAlgebra, HomCoalgebra, Representation, RotaBaxterData, StructureBundle, StructureKind,
    parse_flavor
)


RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(/\d+)?$')

TOP_LEVEL_KEYS = {
    'format_version', 'structure', 'dimension', 'flavor', 'matrices', 'lambda',
    'module_dimension', 'operator_flags', 'metadata',
}

# (required, optional) matrix names per structure kind
MATRIX_NAMES = {
    StructureKind.COALGEBRA: ({'delta', 'alpha'}, {'phi', 'R', 'T'}),
    StructureKind.ALGEBRA: ({'mu', 'alpha'}, {'phi'}),
    StructureKind.COMODULE: ({'delta', 'alpha', 'rho', 'beta', 'phi_m'}, {'phi'}),
    StructureKind.REPRESENTATION: ({'mu', 'alpha', 'action', 'a_op', 'phi_v'}, {'phi'}),
}

OPERATOR_FLAGS = {'idempotent', 'commute_phi'}


@dataclass
class BundleDocument:
    """
    The JSON record of one structure bundle

    Matrices hold canonical rational strings; `lambda_` is the Rota-Baxter
    weight and is present exactly when matrix R is.
    """
    format_version: str
    structure: str
    dimension: int
    flavor: str
    matrices: Dict[str, List[List[str]]]
    lambda_: Optional[str] = None
    module_dimension: Optional[int] = None
    operator_flags: Optional[Dict[str, bool]] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        record = {
            'format_version': self.format_version,
            'structure': self.structure,
            'dimension': self.dimension,
            'flavor': self.flavor,
            'matrices': self.matrices,
            'metadata': self.metadata,
        }
        if self.lambda_ is not None:
            record['lambda'] = self.lambda_
        if self.module_dimension is not None:
            record['module_dimension'] = self.module_dimension
        if self.operator_flags is not None:
            record['operator_flags'] = self.operator_flags
        return record

    @classmethod
    def from_dict(cls, data: Dict[str, Any], text: str = '') -> 'BundleDocument':
        """Validated document; every problem raises BundleFormatError with its field"""
        return DocumentReader(text).read(data)

    def to_json(self, indent: Optional[int] = None) -> str:
        if indent is None:
            body = json.dumps(self.to_dict(), sort_keys=True, separators=(',', ':'), ensure_ascii=False)
        else:
            body = json.dumps(self.to_dict(), sort_keys=True, indent=indent, ensure_ascii=False)
        return body + '\n'


class DocumentReader:
    """Validates decoded JSON against the bundle schema, before any computation"""

    def __init__(self, text: str = ''):
        self.lines = text.splitlines()

    def _line(self, field_path: str) -> Optional[int]:
        key = field_path.split('[')[0].split('.')[-1]
        needle = f'"{key}"'
        for number, line in enumerate(self.lines, start=1):
            if needle in line:
                return number
        return None

    def error(self, message: str, field_path: str) -> BundleFormatError:
        return BundleFormatError(message, field_path, self._line(field_path))

    def _positive_int(self, data: dict, key: str) -> int:
        value = data.get(key)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise self.error(f"{key} must be a positive integer, got {value!r}", key)
        return value

    def rational(self, value, field_path: str) -> str:
        """Canonical text of one entry; floats, booleans and decimals are rejected"""
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise self.error(f"malformed rational {value!r}: entries are strings or integers", field_path)
        text = str(value)
        if not RATIONAL_PATTERN.match(text):
            raise self.error(f"malformed rational {value!r}", field_path)
        _, _, denominator = text.partition('/')
        if denominator and int(denominator) == 0:
            raise self.error(f"malformed rational {value!r}: zero denominator", field_path)
        return format_scalar(text)

    def matrix(self, rows, name: str, shape) -> List[List[str]]:
        path = f"matrices.{name}"
        n_rows, n_cols = shape
        if not isinstance(rows, list) or len(rows) != n_rows:
            found = len(rows) if isinstance(rows, list) else type(rows).__name__
            raise self.error(f"{name} must have {n_rows} rows, got {found}", path)
        canonical = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n_cols:
                found = len(row) if isinstance(row, list) else type(row).__name__
                raise self.error(f"{name} row {i} must have {n_cols} entries, got {found}", path)
            canonical.append([self.rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
        return canonical

    def read(self, data: Dict[str, Any]) -> BundleDocument:
        if not isinstance(data, dict):
            raise self.error("a bundle document is a JSON object", 'document')
        unknown = set(data) - TOP_LEVEL_KEYS
        if unknown:
            first = sorted(unknown)[0]
            raise self.error(f"unknown key {first!r}", first)

        expected_version = get_config().get_format_version()
        version = data.get('format_version')
        if str(version) != expected_version or not isinstance(version, str):
            raise self.error(f"unsupported format_version {version!r} (expected {expected_version!r})",
                             'format_version')

        try:
            structure = StructureKind(data.get('structure'))
        except ValueError:
            allowed = ', '.join(k.value for k in StructureKind)
            raise self.error(f"unknown structure {data.get('structure')!r} (expected one of: {allowed})",
                             'structure') from None

        n = self._positive_int(data, 'dimension')
        flavor_type = CoalgebraFlavor if structure in (StructureKind.COALGEBRA, StructureKind.COMODULE) \
            else AlgebraFlavor
        try:
            flavor = parse_flavor(data.get('flavor'), flavor_type).value
        except ArgumentError as e:
            raise self.error(str(e), 'flavor') from None

        module_dimension = None
        if structure in (StructureKind.COMODULE, StructureKind.REPRESENTATION):
            module_dimension = self._positive_int(data, 'module_dimension')
        elif 'module_dimension' in data:
            raise self.error("module_dimension is only allowed on module bundles", 'module_dimension')

        matrices = data.get('matrices')
        if not isinstance(matrices, dict):
            raise self.error("matrices must be an object of named matrices", 'matrices')
        required, optional = MATRIX_NAMES[structure]
        missing = sorted(required - set(matrices))
        if missing:
            raise self.error(f"missing required matrix {missing[0]!r}", f"matrices.{missing[0]}")
        extra = sorted(set(matrices) - required - optional)
        if extra:
            raise self.error(f"unknown matrix {extra[0]!r} for a {structure.value} bundle", f"matrices.{extra[0]}")

        shapes = matrix_shapes(n, module_dimension)
        canonical = {name: self.matrix(rows, name, shapes[name]) for name, rows in matrices.items()}

        lambda_ = None
        if 'R' in canonical:
            if 'lambda' not in data:
                raise self.error("matrix R needs a lambda (Rota-Baxter weight)", 'lambda')
            lambda_ = self.rational(data['lambda'], 'lambda')
        elif 'lambda' in data:
            raise self.error("lambda is only allowed together with matrix R", 'lambda')

        # present exactly when T is, with every flag spelled out
        flags = None
        if 'operator_flags' in data and 'T' not in canonical:
            raise self.error("operator_flags are only allowed together with matrix T", 'operator_flags')
        if 'T' in canonical:
            given = data.get('operator_flags', {})
            if not isinstance(given, dict) or set(given) - OPERATOR_FLAGS \
                    or not all(isinstance(v, bool) for v in given.values()):
                raise self.error(f"operator_flags must map {sorted(OPERATOR_FLAGS)} to booleans",
                                 'operator_flags')
            flags = {k: given.get(k, False) for k in sorted(OPERATOR_FLAGS)}
            if flags['commute_phi'] and 'phi' not in canonical:
                raise self.error("commute_phi needs matrix phi", 'operator_flags.commute_phi')

        metadata = data.get('metadata', {})
        if not isinstance(metadata, dict):
            raise self.error("metadata must be an object", 'metadata')

        return BundleDocument(version, structure.value, n, flavor, canonical, lambda_,
                              module_dimension, flags, metadata)


def matrix_shapes(n: int, m: Optional[int] = None) -> Dict[str, tuple]:
    """Document (rows, columns) of every matrix name, image-major"""
    shapes = {
        'delta': (n, n * n), 'mu': (n * n, n),
        'alpha': (n, n), 'phi': (n, n), 'R': (n, n), 'T': (n, n),
    }
    if m is not None:
        shapes.update({
            'rho': (m, n * m), 'beta': (m, m), 'phi_m': (m, m),
            'action': (n * m, m), 'a_op': (m, m), 'phi_v': (m, m),
        })
    return shapes


def matrix_rows(f: LinMap) -> List[List[str]]:
    """Image-major rows of canonical rational strings"""
    return [[format_scalar(x) for x in row] for row in f.entries.T]


def _map(doc: BundleDocument, name: str, domain, codomain) -> LinMap:
    return from_images(doc.matrices[name], TensorSpace(domain), TensorSpace(codomain))


def bundle_from_document(doc: BundleDocument) -> StructureBundle:
    structure = StructureKind(doc.structure)
    n, m = doc.dimension, doc.module_dimension
    alpha = _map(doc, 'alpha', (n,), (n,))
    phi = _map(doc, 'phi', (n,), (n,)) if 'phi' in doc.matrices else None
    metadata = dict(doc.metadata)

    if structure in (StructureKind.COALGEBRA, StructureKind.COMODULE):
        coalg = HomCoalgebra(_map(doc, 'delta', (n,), (n, n)), alpha, doc.flavor)
        if structure == StructureKind.COALGEBRA:
            rb = None
            if 'R' in doc.matrices:
                rb = RotaBaxterData(_map(doc, 'R', (n,), (n,)), doc.lambda_)
            endo = None
            if 'T' in doc.matrices:
                flags = doc.operator_flags or {}
                endo = EndoOp(_map(doc, 'T', (n,), (n,)), flags.get('idempotent', False),
                              flags.get('commute_phi', False))
            return StructureBundle(structure, coalgebra=coalg, phi=phi, rota_baxter=rb, endo=endo,
                                   metadata=metadata)

        pair = CoDerPair(coalg, phi if phi is not None else zero_map(n, n))
        comod = Comodule(coalg, _map(doc, 'rho', (m,), (n, m)), _map(doc, 'beta', (m,), (m,)))
        module = CoDerComodule(comod, _map(doc, 'phi_m', (m,), (m,)), pair, metadata)
        return StructureBundle(structure, coalgebra=coalg, phi=phi, module=module, metadata=metadata)

    alg = HomAlgebra(_map(doc, 'mu', (n, n), (n,)), alpha, doc.flavor)
    if structure == StructureKind.ALGEBRA:
        return StructureBundle(structure, algebra=alg, phi=phi, metadata=metadata)

    pair = DerPair(alg, phi if phi is not None else zero_map(n, n))
    module = Representation(pair, _map(doc, 'action', (n, m), (m,)), _map(doc, 'a_op', (m,), (m,)),
                            _map(doc, 'phi_v', (m,), (m,)), metadata)
    return StructureBundle(structure, algebra=alg, phi=phi, module=module, metadata=metadata)


def document_from_bundle(bundle: StructureBundle) -> BundleDocument:
    matrices = {}
    lambda_ = module_dimension = flags = None
    base = bundle.coalgebra if bundle.coalgebra is not None else bundle.algebra

    if bundle.coalgebra is not None:
        matrices['delta'] = matrix_rows(bundle.coalgebra.delta)
    else:
        matrices['mu'] = matrix_rows(bundle.algebra.mu)
    matrices['alpha'] = matrix_rows(base.alpha)
    if bundle.phi is not None:
        matrices['phi'] = matrix_rows(bundle.phi)
    if bundle.rota_baxter is not None:
        matrices['R'] = matrix_rows(bundle.rota_baxter.r)
        lambda_ = format_scalar(bundle.rota_baxter.weight)
    if bundle.endo is not None:
        matrices['T'] = matrix_rows(bundle.endo.t)
        flags = {'idempotent': bundle.endo.require_idempotent, 'commute_phi': bundle.endo.require_commute_phi}

    module = bundle.module
    if isinstance(module, CoDerComodule):
        module_dimension = module.m
        matrices.update(rho=matrix_rows(module.rho), beta=matrix_rows(module.beta),
                        phi_m=matrix_rows(module.phi_m))
    elif isinstance(module, Representation):
        module_dimension = module.v
        matrices.update(action=matrix_rows(module.action), a_op=matrix_rows(module.a_op),
                        phi_v=matrix_rows(module.phi_v))

    return BundleDocument(get_config().get_format_version(), bundle.structure.value, bundle.dimension,
                          bundle.flavor, matrices, lambda_, module_dimension, flags, dict(bundle.metadata))


def parse_document(text: str) -> BundleDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise BundleFormatError(f"not valid JSON: {e.msg}", 'document', e.lineno) from None
    return BundleDocument.from_dict(data, text)


def parse(text: str) -> StructureBundle:
    """Bundle from document text; malformed documents raise BundleFormatError"""
    return bundle_from_document(parse_document(text))


def serialize(bundle: StructureBundle, indent: Optional[int] = None) -> str:
    return document_from_bundle(bundle).to_json(indent)


def canonicalize(text: str) -> str:
    """Canonical form of a document: the bytes serialize(parse(text)) produces"""
    return parse_document(text).to_json()


def load_bundle(path) -> StructureBundle:
    path = Path(path)
    bundle = parse(path.read_text(encoding='utf-8'))
    get_logger().log_success('io', 'load_bundle', {'path': str(path), 'structure': bundle.structure.value})
    return bundle


def save_bundle(bundle: StructureBundle, path, indent: Optional[int] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(bundle, indent), encoding='utf-8')
    get_logger().log_success('io', 'save_bundle', {'path': str(path), 'structure': bundle.structure.value})
    return path


def reports_to_json(reports: List[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, separators=(',', ':'),
                      ensure_ascii=False) + '\n'


def reports_from_json(text: str) -> List[CheckReport]:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as e:
        raise BundleFormatError(f"not a report list: {e.msg}", 'reports', e.lineno) from None
    if not isinstance(records, list):
        raise BundleFormatError("a report stream is a JSON list", 'reports')
    try:
        return [CheckReport.from_dict(r) for r in records]
    except (KeyError, TypeError, ArgumentError) as e:
        raise BundleFormatError(f"malformed report record: {e}", 'reports') from None
