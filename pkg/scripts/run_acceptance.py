"""Run the acceptance criteria and print one PASS/FAIL line each."""

import sys
from pathlib import Path

import pytest

root = Path(__file__).resolve().parent.parent
sys.exit(pytest.main(["-q", "-s", "-p", "no:cacheprovider", str(root / "tests" / "test_acceptance.py")]))
