#!/usr/bin/env python3
"""Run every acceptance criterion and print one PASS/FAIL line per criterion.

Exits nonzero if any criterion fails.  The criteria live next to the test
suite in tests/test_acceptance.py; this wrapper just loads and runs them
without requiring pytest.
"""

import importlib.util
import pathlib
import sys


def _load_acceptance():
    path = pathlib.Path(__file__).resolve().parents[1] / "tests" / "test_acceptance.py"
    spec = importlib.util.spec_from_file_location("acceptance", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


if __name__ == "__main__":
    sys.exit(1 if _load_acceptance().report() else 0)
