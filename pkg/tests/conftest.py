from pathlib import Path

import pytest

from observing import GOSystem, Grammar, ObserverSpec, compile_observer
from observing.formats import parse_system

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"

G_RULES = [("S", "pS"), ("S", "p"), ("S", "A"), ("A", "AB"), ("A", "C"), ("B", "C"), ("C", "t")]

A2_SPEC = ObserverSpec([("S", ""), ("A B*", "a"), ("C+ B*", "b"), ("t+ C*", "c")], "!")
A1_SPEC = ObserverSpec([("(S|A|B|C|t|p)+", "a")], "!")


@pytest.fixture(scope="session")
def G():
    return Grammar("SABC", "tp", "S", G_RULES)


@pytest.fixture(scope="session")
def A2(G):
    return compile_observer(A2_SPEC, G.alphabet)


@pytest.fixture(scope="session")
def A1(G):
    return compile_observer(A1_SPEC, G.alphabet)


@pytest.fixture(scope="session")
def sys_a2(G, A2):
    return GOSystem(G, A2, A2_SPEC)


@pytest.fixture(scope="session")
def sys_a1(G, A1):
    return GOSystem(G, A1, A1_SPEC)


@pytest.fixture(scope="session")
def phi():
    return parse_system((SYSTEMS / "bmdn_sticker.obs").read_text())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
