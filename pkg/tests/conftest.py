import pytest
from hypothesis import strategies as st

from gemforge.colored_graph import ColouredGraph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a one-line pass/fail verdict for the acceptance summary."""

    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@st.composite
def matchings(draw, size):
    perm = draw(st.permutations(range(size)))
    inv = [0] * size
    for a, b in zip(perm[::2], perm[1::2]):
        inv[a], inv[b] = b, a
    return inv


@st.composite
def coloured_graphs(draw, max_half=8):
    size = 2 * draw(st.integers(1, max_half))
    return ColouredGraph.from_involutions([draw(matchings(size)) for _ in range(4)])
