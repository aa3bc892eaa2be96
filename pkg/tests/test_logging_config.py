#!/usr/bin/env python3
"""
Tests for configuration and the production logging system
"""
import json
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import src.core.logger as logger_module
from src.core.config import Config, get_config
from src.core.errors import ConstructionRefused
from src.core.exact_linear import diagonal, identity
from src.core.logger import COMPONENTS, FailureAnalyzer, ProductionLogger, safe_execute
from src.core.structures import CoDerPair, RotaBaxterData
from src.constructions import rb_twist
from src.solvers.seed_library import two_dim_nonabelian


CUSTOM_CONFIG = """
search:
  max_candidates: 500
  default_grid: ["0", "1/2"]
generation:
  max_dim: 3
io:
  indent: 2
logging:
  log_dir: /tmp/homcoder-test-logs
"""


class use_logger:
    """Route the global logger to a scratch directory for one block"""

    def __init__(self, log_dir):
        self.log_dir = log_dir

    def __enter__(self) -> ProductionLogger:
        logger_module._logger = ProductionLogger(base_log_dir=self.log_dir)
        return logger_module._logger

    def __exit__(self, *exc):
        # the next get_logger() re-attaches handlers to the configured directory
        logger_module._logger = None
        return False


def test_default_config():
    print("\nTest: Default configuration")

    config = get_config()
    assert config.get_format_version() == '1'
    assert config.get_indent() is None
    assert config.get_default_grid() == [Fraction(-1), Fraction(0), Fraction(1)]
    assert config.get_max_candidates() == 10_000_000
    assert config.get_search_max_dim() == 3
    assert config.get_generation_settings() == {'max_dim': 4, 'max_attempts': 50, 'coefficient_range': 2}
    assert config.get_log_dir().is_absolute()
    print("✓ config/global.yaml loaded")


def test_custom_config_file():
    print("\nTest: Custom configuration")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / 'custom.yaml'
        path.write_text(CUSTOM_CONFIG, encoding='utf-8')
        config = Config(str(path))

        assert config.get('search.max_candidates') == 500
        assert config.get('search.missing', 'fallback') == 'fallback'
        assert config.get('search.max_candidates.deeper', 7) == 7
        assert config.get_default_grid() == [Fraction(0), Fraction(1, 2)]
        assert config.get_indent() == 2
        assert config.get_generation_settings()['max_dim'] == 3
        assert config.get_generation_settings()['max_attempts'] == 50
        assert config.get_log_dir() == Path('/tmp/homcoder-test-logs')

        path.write_text("io:\n  format_version: \"2\"\n", encoding='utf-8')
        config.reload()
        assert config.get_format_version() == '2'

    with pytest.raises(FileNotFoundError):
        Config('/nonexistent/global.yaml')
    print("✓ dot-notation lookups, defaults and reload")


def test_production_logger_writes_component_logs():
    print("\nTest: Component logs")

    with tempfile.TemporaryDirectory() as tmp:
        with use_logger(tmp) as logger:
            logger.log_success('solver', 'grid_search', {'found': 3})
            logger.log_warning('io', 'slow read', {'path': 'x.json'})
            logger.log_failure('checker', 'check_skew', ValueError('boom'), {'n': 2})

            for component in COMPONENTS:
                assert (logger.log_dir / f'{component}.log').exists()
            solver_log = (logger.log_dir / 'solver.log').read_text(encoding='utf-8')
            assert 'SUCCESS: grid_search | {"found": 3}' in solver_log
            assert 'WARNING: slow read' in (logger.log_dir / 'io.log').read_text(encoding='utf-8')

            lines = (logger.log_dir / 'failures.log').read_text(encoding='utf-8').splitlines()
            record = json.loads(lines[-1])
            assert record['component'] == 'checker'
            assert record['error_type'] == 'ValueError'
            assert record['context'] == {'n': 2}
            assert logger.get_logger('unknown') is logger.get_logger('general')
    print("✓ per-component files and JSON failure records")


def test_refusals_are_logged_with_reports():
    print("\nTest: Logged refusals")

    pair = CoDerPair(two_dim_nonabelian(), diagonal([0, 1]))
    with tempfile.TemporaryDirectory() as tmp:
        with use_logger(tmp):
            with pytest.raises(ConstructionRefused):
                rb_twist(pair, RotaBaxterData(identity(2), -1))
            # safe_execute logs on top of the decorator: two records for one call
            assert safe_execute(rb_twist, pair, RotaBaxterData(identity(2), -1),
                                component='construction', default='fallback') == 'fallback'

            analysis = FailureAnalyzer(tmp).analyze_failures()
            assert analysis['total_failures'] == 3
            assert analysis['by_component'] == {'construction': 3}
            assert analysis['by_error_type'] == {'ConstructionRefused': 3}
            assert analysis['most_common'][0] == ('rb_twist', 3)

            record = FailureAnalyzer(tmp).load_failures()[0]
            names = [r['name'] for r in record['context']['reports']]
            assert 'hom_coassociativity' in names

            report_path = Path(tmp) / 'failures.txt'
            text = FailureAnalyzer(tmp).generate_report(str(report_path))
            assert 'Total Failures: 3' in text
            assert report_path.read_text() == text
    print("✓ refused constructions carry their failing reports into the log")


def test_failure_analyzer_on_missing_directory():
    print("\nTest: Empty failure log")

    analysis = FailureAnalyzer('/nonexistent/logs').analyze_failures()
    assert analysis['total_failures'] == 0
    assert analysis['most_common'] == []
    print("✓ no logs, no failures")


def run_all_tests():
    """Run all tests"""
    print("\nConfiguration and Logging Test Suite")

    tests = [
        test_default_config,
        test_custom_config_file,
        test_production_logger_writes_component_logs,
        test_refusals_are_logged_with_reports,
        test_failure_analyzer_on_missing_directory,
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
