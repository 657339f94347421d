import random
import re

import pytest

from observing import FormatError, GOSystem, ObservableStickerSystem
from observing.formats import format_system, parse_system

from conftest import SYSTEMS
from oracles import random_go_systems

GRAMMAR = (SYSTEMS / "anbncn.obs").read_text()
STICKER = (SYSTEMS / "bmdn_sticker.obs").read_text()


def test_paper_grammar_file(sys_a2):
    system = parse_system(GRAMMAR)
    assert isinstance(system, GOSystem)
    assert system.grammar == sys_a2.grammar
    rng = random.Random(0)
    for _ in range(300):
        word = [rng.choice(sorted(system.grammar.alphabet)) for _ in range(rng.randint(0, 8))]
        assert system.observer(word) == sys_a2.observer(word)


def test_sticker_file():
    system = parse_system(STICKER)
    assert isinstance(system, ObservableStickerSystem)
    assert system.system.alphabet == frozenset("acgt")
    assert ("g", "c") in system.system.rho
    assert [str(d) for d in system.system.dominoes] == ["a/-", "-/t", "c/-", "-/g"]


@pytest.mark.parametrize("path", sorted(SYSTEMS.glob("*.obs")), ids=lambda p: p.name)
def test_round_trip(path):
    first = parse_system(path.read_text())
    again = parse_system(format_system(first))
    assert again == first
    assert format_system(again) == format_system(first)


@pytest.mark.parametrize("system", random_go_systems(10, seed=2), ids=lambda s: str(s.grammar.rules))
def test_round_trip_random(system):
    assert parse_system(format_system(system)) == system


def test_multichar_symbols():
    text = """
    [grammar]
    nonterminals: Start X1
    terminals: ab c
    start: Start
    rules:
      Start -> ab X1
      X1 -> c
      X1 -> ~
    [observer]
    output: x
    cases:
      Start => x
      ab X1? => ~
      _ => !
    """
    system = parse_system(text)
    assert system.grammar.rules[0].rhs == ("ab", "X1")
    assert system.grammar.rules[2].rhs == ()
    assert parse_system(format_system(system)) == system


BROKEN = {
    "missing catch-all": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
[observer]
output: x
cases:
  S => x
""", "observer incomplete", 9),
    "duplicated section": ("""[grammar]
nonterminals: S
[grammar]
""", "duplicated section", 3),
    "undeclared symbol": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a b
[observer]
output: x
cases:
  _ => x
""", "undeclared symbol", 6),
    "unknown pattern symbol": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
[observer]
output: x
cases:
  S Q => x
  _ => x
""", "unknown symbol", 10),
    "rho unknown symbol": ("""[sticker]
alphabet: a t
rho: a~g
axioms: a/t
dominoes: a/-
[observer]
output: b
cases:
  _ => b
""", "unknown symbol", 3),
    "bad axiom": ("""[sticker]
alphabet: a t
rho: a~t
axioms: a/a
dominoes: a/-
[observer]
output: b
cases:
  _ => b
""", "not well-started", 4),
    "duplicate rule": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
  S -> a
[observer]
output: x
cases:
  _ => x
""", "duplicate rule", 7),
    "case after catch-all": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
[observer]
output: x
cases:
  _ => x
  S => x
""", "after the '_'", 11),
    "undeclared output": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
[observer]
output: x
cases:
  _ => y
""", "not declared", 10),
    "no observer": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
""", "missing [observer]", 1),
    "two basic systems": ("""[grammar]
nonterminals: S
[sticker]
alphabet: a
""", "exactly one", 3),
    "two-sided domino": ("""[sticker]
alphabet: a t
rho: a~t
axioms: a/t
dominoes: a/t
[observer]
output: b
cases:
  _ => b
""", "single strand", 5),
    "malformed regex": ("""[grammar]
nonterminals: S
terminals: a
start: S
rules:
  S -> a
[observer]
output: x
cases:
  (S => x
  _ => x
""", "missing ')'", 10),
}


@pytest.mark.parametrize("name", sorted(BROKEN))
def test_errors_carry_line_numbers(name):
    text, message, line = BROKEN[name]
    with pytest.raises(FormatError, match=re.escape(message)) as info:
        parse_system(text)
    assert info.value.line == line


def test_garbage_never_crashes():
    rng = random.Random(1)
    pieces = GRAMMAR.splitlines() + STICKER.splitlines() + ["->", "=>", "[", ":", "~", "!", "_"]
    for _ in range(300):
        text = "\n".join(rng.choice(pieces) for _ in range(rng.randint(0, 20)))
        try:
            parse_system(text)
        except FormatError as exc:
            assert exc.line >= 1
