import pytest
from hypothesis import settings, strategies as st

from monopath.model import ColouredTournament, Digraph, parse_cdt

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

MONO_C3 = "cdt 3 1\n0 1 0\n1 2 0\n2 0 0\n"
RAINBOW_C3 = "cdt 3 3\n0 1 0\n1 2 1\n2 0 2\n"
RAINBOW_TRANSITIVE = "cdt 3 3\n0 1 0\n0 2 1\n1 2 2\n"


@pytest.fixture
def mono_c3():
    return parse_cdt(MONO_C3)


@pytest.fixture
def rainbow_c3():
    return parse_cdt(RAINBOW_C3)


@pytest.fixture
def rainbow_transitive():
    return parse_cdt(RAINBOW_TRANSITIVE)


@st.composite
def tournaments(draw, max_n=8, max_k=3, min_n=0):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_k))
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            flip = draw(st.booleans())
            c = draw(st.integers(0, k - 1))
            arcs.append((j, i, c) if flip else (i, j, c))
    return ColouredTournament(n, k, arcs)


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, chosen)


# acceptance report ---------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
