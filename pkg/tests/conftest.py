import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dgw.presentations import parse_presentation  # noqa: E402

EXAMPLE = "base: aaaaa\n+0@1\n+0@5\n-1@0\n-0@1\n-1@2\n-0@0\n"


@pytest.fixture
def p23():
    return parse_presentation("<a,b | a=bab, b=aba>")


@pytest.fixture
def example(p23):
    from dgw.diagrams import parse_diagram
    return parse_diagram(EXAMPLE, p23)
