import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from genus_range.words import Dow  # noqa: E402


@st.composite
def dows(draw, min_n=0, max_n=6):
    """Random double-occurrence words: a random perfect matching of positions."""
    n = draw(st.integers(min_n, max_n))
    symbols = draw(st.permutations(list(range(1, n + 1)) * 2))
    return Dow(tuple(symbols))


@pytest.fixture
def tmp_jsonl(tmp_path):
    return tmp_path / "survey.jsonl"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
