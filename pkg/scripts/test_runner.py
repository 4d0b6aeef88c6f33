#!/usr/bin/env python3
"""Domain-based test runner for coxcheck.

Usage:
    python scripts/test_runner.py <domain> [pytest-args...]
    python scripts/test_runner.py algebra
    python scripts/test_runner.py services --coverage
    python scripts/test_runner.py all -x -v
    python scripts/test_runner.py all -m "not slow"

Domains:
    algebra     Exact rationals, Smith normal form, FLINT-backed linear algebra
    services    Triangle and plane criteria, jet oracle, survey, reports, moduli
    models      Data models (triangle, wps, jets, matrix, survey, moduli)
    utils       Utilities (logger, helpers, validation, error_handler, splash)
    config      Configuration (settings, validation)
    cli         Command-line front end
    all         Full test suite

Options:
    --coverage  Add --cov scoped to the matching src/ directory
    Any other args are passed through to pytest.
"""

import subprocess
import sys

DOMAINS = {
    "algebra": {
        "test_path": "tests/test_algebra/",
        "cov_source": "src/algebra/",
    },
    "services": {
        "test_path": "tests/test_services/",
        "cov_source": "src/services/",
    },
    "models": {
        "test_path": "tests/test_models/",
        "cov_source": "src/models/",
    },
    "utils": {
        "test_path": "tests/test_utils/",
        "cov_source": "src/utils/",
    },
    "config": {
        "test_path": "tests/test_config/",
        "cov_source": "src/config/",
    },
    "cli": {
        "test_path": "tests/test_cli/",
        "cov_source": "src/cli.py",
    },
    "all": {
        "test_path": "tests/",
        "cov_source": "src/",
    },
}


def _usage(stream=sys.stdout):
    print(__doc__, file=stream)
    print("Available domains:", ", ".join(sorted(DOMAINS)), file=stream)


def build_command(domain, args):
    """pytest argv for one domain; --coverage becomes --cov on its sources."""
    cfg = DOMAINS[domain]
    passthrough = [a for a in args if a != "--coverage"]
    cmd = [sys.executable, "-m", "pytest", cfg["test_path"]]
    if len(passthrough) != len(args):
        cmd += [f"--cov={cfg['cov_source']}", "--cov-report=term-missing"]
    return cmd + passthrough


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] in ("-h", "--help"):
        _usage()
        return 0
    domain, rest = argv[0], argv[1:]
    if domain not in DOMAINS:
        print(f"Unknown domain: {domain}", file=sys.stderr)
        _usage(sys.stderr)
        return 2
    return subprocess.call(build_command(domain, rest))


if __name__ == "__main__":
    sys.exit(main())
