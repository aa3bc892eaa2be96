#!/usr/bin/env python3
"""
Tests for bundle documents and the command-line interface
"""
import io
import json
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.bundle_io import (
    canonicalize, load_bundle, parse, reports_from_json, reports_to_json, save_bundle, serialize
)
from src.core.errors import BundleFormatError
from src.core.structures import StructureKind, all_passed
from src.checkers import check_bundle
from src.main import main


BUNDLES = Path(__file__).parent.parent / 'data' / 'bundles'


def corpus_text(name: str) -> str:
    return (BUNDLES / name).read_text(encoding='utf-8')


def corpus_data(name: str) -> dict:
    return json.loads(corpus_text(name))


def run_cli(*argv):
    """(exit code, stdout, stderr) of one CLI invocation"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main([str(a) for a in argv])
    return code, out.getvalue(), err.getvalue()


def format_error(data) -> BundleFormatError:
    text = data if isinstance(data, str) else json.dumps(data)
    with pytest.raises(BundleFormatError) as info:
        parse(text)
    return info.value


def test_corpus_round_trips_byte_for_byte():
    print("\nTest: Corpus round trip")

    paths = sorted(BUNDLES.glob('*.json'))
    assert len(paths) >= 9
    for path in paths:
        text = path.read_text(encoding='utf-8')
        assert serialize(parse(text)) == text, path.name
        assert canonicalize(text) == text, path.name
    print(f"✓ {len(paths)} documents are canonical")


def test_noncanonical_input_is_normalized():
    print("\nTest: Canonicalization")

    data = corpus_data('l2.json')
    data['matrices']['delta'] = [[0, 0, 0, 0], [0, "2/2", "-3/3", "+0"]]
    data['matrices']['alpha'] = [["4/4", 0], [0, 1]]
    pretty = json.dumps(data, indent=2)
    assert canonicalize(pretty) == corpus_text('l2.json')
    assert parse(pretty).coalgebra == parse(corpus_text('l2.json')).coalgebra

    indented = serialize(parse(corpus_text('l2.json')), indent=2)
    assert '\n  ' in indented
    assert canonicalize(indented) == corpus_text('l2.json')
    print("✓ integers, unreduced fractions and whitespace normalize")


def test_operator_flags_have_one_canonical_form():
    print("\nTest: Operator flags")

    documents = [path.read_text(encoding='utf-8') for path in sorted(BUNDLES.glob('*.json'))]
    data = corpus_data('l2.json')
    data['matrices']['T'] = [[1, 0], [0, 1]]
    documents.append(json.dumps(data))
    data['operator_flags'] = {'idempotent': True}
    documents.append(json.dumps(data, indent=2))

    for text in documents:
        assert canonicalize(text) == serialize(parse(text))

    assert '"operator_flags":{"commute_phi":false,"idempotent":true}' in canonicalize(documents[-1])
    assert '"operator_flags":{"commute_phi":false,"idempotent":false}' in canonicalize(documents[-2])
    print(f"✓ {len(documents)} documents: canonicalize and serialize(parse) agree")

    del data['matrices']['phi']
    data['operator_flags'] = {'commute_phi': True}
    assert format_error(data).field == 'operator_flags.commute_phi'

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / 'no_phi.json'
        path.write_text(json.dumps(data), encoding='utf-8')
        code, _, err = run_cli('check', path)
        assert code == 2
        assert 'commute_phi' in err
    print("✓ commute_phi without phi is a format error")


def test_malformed_documents():
    print("\nTest: Malformed documents")

    data = corpus_data('l2.json')
    data['matrices']['delta'][1][1] = "1/0"
    assert format_error(data).field == 'matrices.delta[1][1]'

    for bad in (0.5, "1.5", True, "x"):
        data = corpus_data('l2.json')
        data['matrices']['phi'][0][0] = bad
        assert format_error(data).field == 'matrices.phi[0][0]'

    data = corpus_data('l2.json')
    data['matrices']['delta'][0] = ["0", "0"]
    assert format_error(data).field == 'matrices.delta'

    data = corpus_data('l2.json')
    data['matrices']['alpha'] = data['matrices']['alpha'][:1]
    assert format_error(data).field == 'matrices.alpha'

    data = corpus_data('l2.json')
    del data['matrices']['alpha']
    assert format_error(data).field == 'matrices.alpha'

    data = corpus_data('l2.json')
    data['format_version'] = "2"
    assert format_error(data).field == 'format_version'

    data = corpus_data('l2.json')
    data['flavor'] = 'jordan'
    assert format_error(data).field == 'flavor'

    data = corpus_data('l2.json')
    data['matrices']['R'] = [["1", "0"], ["0", "1"]]
    assert format_error(data).field == 'lambda'

    data = corpus_data('l2.json')
    data['lambda'] = "-1"
    assert format_error(data).field == 'lambda'

    data = corpus_data('l2.json')
    data['colour'] = 'blue'
    assert format_error(data).field == 'colour'

    data = corpus_data('l2_algebra.json')
    data['matrices']['delta'] = corpus_data('l2.json')['matrices']['delta']
    assert format_error(data).field == 'matrices.delta'

    error = format_error('{"dimension": 2,\n')
    assert error.field == 'document'
    assert error.line is not None
    print("✓ bad entries, shapes, versions, flavors and keys are refused")


def test_errors_carry_line_numbers():
    print("\nTest: Error line numbers")

    data = corpus_data('l2.json')
    data['format_version'] = "7"
    pretty = json.dumps(data, indent=2, sort_keys=True)
    expected = next(i for i, line in enumerate(pretty.splitlines(), start=1) if '"format_version"' in line)
    error = format_error(pretty)
    assert error.line == expected
    assert f"line {expected}" in str(error)
    print(f"✓ {error}")


def test_report_stream_round_trip():
    print("\nTest: Report stream")

    reports = check_bundle(parse(corpus_text('l2_perturbed.json')))
    text = reports_to_json(reports)
    assert reports_from_json(text) == reports
    assert not all_passed(reports_from_json(text))

    with pytest.raises(BundleFormatError):
        reports_from_json('{"name": "skew"}')
    with pytest.raises(BundleFormatError):
        reports_from_json('[{"passed": true}]')
    print("✓ reports survive serialization")


def test_save_and_load():
    print("\nTest: Save and load")

    bundle = parse(corpus_text('l2_regular_comodule.json'))
    assert bundle.structure == StructureKind.COMODULE
    with tempfile.TemporaryDirectory() as tmp:
        path = save_bundle(bundle, Path(tmp) / 'nested' / 'copy.json')
        assert path.read_text(encoding='utf-8') == corpus_text('l2_regular_comodule.json')
        assert serialize(load_bundle(path)) == serialize(bundle)
    print("✓ saved bundles reload identically")


def test_cli_check():
    print("\nTest: CLI check")

    for path in sorted(BUNDLES.glob('*.json')):
        code, out, _ = run_cli('check', path)
        assert code == (1 if path.name == 'l2_perturbed.json' else 0), path.name
        assert out.strip()

    code, out, _ = run_cli('check', BUNDLES / 'l2_perturbed.json')
    assert 'skew: FAIL at e1' in out

    code, out, _ = run_cli('check', BUNDLES / 'l2_perturbed.json', '--json')
    assert code == 1
    assert not all_passed(reports_from_json(out))

    code, _, err = run_cli('check', BUNDLES / 'missing.json')
    assert code == 2
    assert 'Error' in err

    with tempfile.TemporaryDirectory() as tmp:
        bad = Path(tmp) / 'bad.json'
        bad.write_text('{"format_version": "1"', encoding='utf-8')
        assert run_cli('check', bad)[0] == 2
    print("✓ exit codes 0 / 1 / 2")


def test_cli_construct():
    print("\nTest: CLI construct")

    with tempfile.TemporaryDirectory() as tmp:
        out_path = Path(tmp) / 'rb.json'
        code, _, err = run_cli('construct', 'rb-twist', BUNDLES / 'l2ass.json',
                               '--lambda=-1', '--R=identity', '--out', out_path)
        assert code == 0
        assert 'wrote' in err
        twisted = load_bundle(out_path)
        assert twisted.flavor == 'pre_lie'
        assert all(r['passed'] or r['advisory'] for r in twisted.metadata['reports'])
        print("✓ rb-twist of l2ass written and valid")

        code, out, _ = run_cli('construct', 'commutator-prelie', out_path)
        assert code == 0
        assert parse(out).flavor == 'lie'

    code, out, _ = run_cli('construct', 'semidirect', BUNDLES / 'l2_regular_comodule.json')
    assert code == 0
    assert parse(out).dimension == 4

    code, out, _ = run_cli('construct', 'endo-twist', BUNDLES / 'l2ass.json', '--T=1,0;0,0')
    assert code == 0
    assert all_passed(check_bundle(parse(out)))

    code, _, err = run_cli('construct', 'rb-twist', BUNDLES / 'l2.json', '--lambda=-1', '--R=identity')
    assert code == 1
    assert 'refused' in err

    assert run_cli('construct', 'dsum', BUNDLES / 'l2.json', BUNDLES / 'l2ass.json')[0] == 1
    assert run_cli('construct', 'dsum', BUNDLES / 'l2.json')[0] == 1
    assert run_cli('construct', 'pushout', BUNDLES / 'l2.json')[0] == 1
    print("✓ refusals exit 1")


def test_cli_dualize():
    print("\nTest: CLI dualize")

    code, out, _ = run_cli('dualize', BUNDLES / 'l2.json')
    assert code == 0
    dual = parse(out)
    assert dual.structure == StructureKind.ALGEBRA
    certificate = dual.metadata['duality_certificate']
    assert certificate['direction'] == 'coalgebra->algebra'

    code, out, _ = run_cli('construct', 'dualize', BUNDLES / 'l2_regular_comodule.json')
    assert code == 0
    assert parse(out).structure == StructureKind.REPRESENTATION
    print("✓ pair and comodule dualized")


def test_cli_solve():
    print("\nTest: CLI solve")

    code, out, _ = run_cli('solve', 'coder', BUNDLES / 'l2.json')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'dimension: 2'
    assert lines[1:] == ['[["0","0"],["1","0"]]', '[["0","0"],["0","1"]]']

    assert run_cli('solve', 'coder', BUNDLES / 'zero3.json')[1].startswith('dimension: 9')
    assert run_cli('solve', 'coder', BUNDLES / 'group_like.json')[1] == 'dimension: 0\n'
    assert run_cli('solve', 'der', BUNDLES / 'l2_algebra.json')[1].startswith('dimension: 2')
    assert run_cli('solve', 'coder', BUNDLES / 'l2_algebra.json')[0] == 1
    print("✓ L2 has 2 coderivations, zero3 has 9, group-like none")


def test_cli_search():
    print("\nTest: CLI search")

    code, out, _ = run_cli('search', 'lie', '--dim', 2, '--seed', 7)
    assert code == 0
    bundle = parse(out)
    assert bundle.dimension == 2
    assert all_passed(check_bundle(bundle))
    assert run_cli('search', 'lie', '--dim', 2, '--seed', 7)[1] == out
    print("✓ seeded generation is valid and reproducible")

    code, out, _ = run_cli('search', '--kind', 'rb', '--input', BUNDLES / 'l2ass.json',
                           '--lambda=-1', '--grid=-1,0,1')
    assert code == 0
    assert out.startswith('found: ')
    assert '[["1","0"],["0","1"]]' in out.splitlines()

    assert run_cli('search', 'lie', '--dim', 9)[0] == 1
    assert run_cli('search', '--kind', 'endo', '--input', BUNDLES / 'l2ass.json', '--dim', 3)[0] == 1

    with tempfile.TemporaryDirectory() as tmp:
        code, _, _ = run_cli('search', 'pre_lie', '--dim', 2, '--count', 2, '--out', tmp)
        assert code == 0
        written = sorted(Path(tmp).glob('*.json'))
        assert len(written) == 2
        for path in written:
            assert all_passed(check_bundle(load_bundle(path)))

    with pytest.raises(SystemExit) as info:
        run_cli('search', 'lie')
    assert info.value.code == 2
    print("✓ operator search, guards and batch output")


def test_cli_misc():
    print("\nTest: CLI list")

    code, out, _ = run_cli('list')
    assert code == 0
    assert 'Total: 12 constructions' in out
    assert run_cli()[0] == 2
    print("✓ list and bare invocation")


def run_all_tests():
    """Run all tests"""
    print("\nBundle I/O and CLI Test Suite")

    tests = [
        test_corpus_round_trips_byte_for_byte,
        test_noncanonical_input_is_normalized,
        test_operator_flags_have_one_canonical_form,
        test_malformed_documents,
        test_errors_carry_line_numbers,
        test_report_stream_round_trip,
        test_save_and_load,
        test_cli_check,
        test_cli_construct,
        test_cli_dualize,
        test_cli_solve,
        test_cli_search,
        test_cli_misc,
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
