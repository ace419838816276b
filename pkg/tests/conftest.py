import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from xtalk.gatelib import builtin_library  # noqa: E402
from xtalk.netlist import parse_blif  # noqa: E402

CORPUS = Path(__file__).resolve().parents[1] / "src" / "xtalk" / "corpus"
GOLDEN = Path(__file__).parent / "golden"

# acceptance outcomes, filled by tests/test_acceptance.py
ACCEPTANCE = {}


def corpus_files():
    return sorted(CORPUS.glob("*.blif"))


def load_corpus(name):
    return parse_blif((CORPUS / f"{name}.blif").read_text())


@pytest.fixture(scope="session")
def lib():
    return builtin_library()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
