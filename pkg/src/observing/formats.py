"""Text format for observed systems.

A file holds one basic-system section (``[grammar]`` or ``[sticker]``) and
one ``[observer]`` section. ``#`` starts a comment. Example::

    [grammar]
    nonterminals: S A B C
    terminals: t p
    start: S
    rules:
      S -> p S
      A -> A B
      C -> t

    [observer]
    output: a b c
    cases:
      S     => ~
      A B*  => a
      C+ B* => b
      t+ C* => c
      _     => !

Sticker sections use ``alphabet:``, ``rho:`` (``a~t`` pairs), ``axioms:``
(``upper/lower``, ``-`` for an empty strand) and ``dominoes:`` (``x/-`` or
``-/x``). Their observer patterns use double-symbol tokens ``[a/t]``,
``[a/-]`` and ``[-/t]``.
"""

from __future__ import annotations

import re

from . import regex
from .errors import FormatError, ObservingError, PatternError
from .go import GOSystem
from .grammar import SYMBOL_NAME, Grammar, Rule
from .observer import BOTTOM, LAMBDA, ObserverSpec, PatternCase, compile_observer, render
from .sticker import (GAP, LOWER, UPPER, Complementarity, Molecule, ObservableStickerSystem,
                      SingleStrand, StickerSystem)

SECTION = re.compile(r"\[([A-Za-z_]+)\]\Z")
KEY = re.compile(r"([a-z_]+)\s*:(.*)\Z")

KEYS = {
    "grammar": ("nonterminals", "terminals", "start", "rules"),
    "sticker": ("alphabet", "rho", "axioms", "dominoes"),
    "observer": ("output", "cases"),
}


class _Section:
    def __init__(self, name, line):
        self.name = name
        self.line = line
        self.entries = {}      # key -> (line, [(line, text), ...])

    def values(self, key, required=True):
        if key not in self.entries:
            if required:
                raise FormatError(f"[{self.name}] section is missing '{key}:'", self.line)
            return self.line, []
        return self.entries[key]

    def words(self, key):
        """Whitespace-separated items of ``key`` with their line numbers."""
        line, values = self.values(key)
        return line, [(n, w) for n, text in values for w in text.split()]


def _split_sections(text):
    sections = {}
    current = None
    key = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = SECTION.match(line)
        if m:
            name = m.group(1)
            if name not in KEYS:
                raise FormatError(f"unknown section [{name}]", number)
            if name in sections:
                raise FormatError(f"duplicated section [{name}]", number)
            current = sections[name] = _Section(name, number)
            key = None
            continue
        if current is None:
            raise FormatError("content outside of any section", number)
        m = KEY.match(line)
        if m and m.group(1) in KEYS[current.name]:
            key = m.group(1)
            if key in current.entries:
                raise FormatError(f"duplicated key '{key}:'", number)
            rest = m.group(2).strip()
            current.entries[key] = (number, [(number, rest)] if rest else [])
            continue
        if m and "=>" not in line and "->" not in line:
            raise FormatError(f"unknown key '{m.group(1)}:' in [{current.name}]", number)
        if key is None:
            raise FormatError(f"expected a key in [{current.name}]", number)
        current.entries[key][1].append((number, line))
    return sections


def _symbols(section, key):
    line, items = section.words(key)
    names = []
    for number, name in items:
        if not SYMBOL_NAME.match(name):
            raise FormatError(f"invalid symbol name {name!r}", number)
        if name in names:
            raise FormatError(f"symbol {name!r} declared twice", number)
        names.append(name)
    return names


def _string(text, alphabet, number):
    """Symbols of a whitespace/longest-match spelled string."""
    out = []
    for chunk in text.split():
        try:
            out.extend(regex.segment(chunk, alphabet))
        except PatternError as exc:
            raise FormatError(f"undeclared symbol in {chunk!r}: {exc}", number) from None
    return tuple(out)


def _parse_grammar(section):
    nonterminals = _symbols(section, "nonterminals")
    terminals = _symbols(section, "terminals")
    start_line, start = section.words("start")
    if len(start) != 1:
        raise FormatError("'start:' takes exactly one symbol", start_line)
    alphabet = frozenset(nonterminals) | frozenset(terminals)
    for name in set(nonterminals) & set(terminals):
        raise FormatError(f"{name!r} is both a terminal and a nonterminal", section.line)
    if start[0][1] not in nonterminals:
        raise FormatError(f"start symbol {start[0][1]!r} is not a declared nonterminal", start[0][0])
    rules = []
    for number, text in section.values("rules")[1]:
        if "->" not in text:
            raise FormatError("rule must have the form 'X -> alpha'", number)
        lhs, rhs = (part.strip() for part in text.split("->", 1))
        if lhs not in nonterminals:
            raise FormatError(f"rule left side {lhs!r} is not a declared nonterminal", number)
        rhs = () if rhs == "~" else _string(rhs, alphabet, number)
        rule = Rule(lhs, rhs)
        if rule in rules:
            raise FormatError(f"duplicate rule {rule}", number)
        rules.append(rule)
    try:
        return Grammar(nonterminals, terminals, start[0][1], rules)
    except ObservingError as exc:
        raise FormatError(str(exc), section.line) from None


def _strand(text, alphabet, number):
    return () if text == GAP else _string(text, alphabet, number)


def _parse_sticker(section):
    alphabet = frozenset(_symbols(section, "alphabet"))
    pairs = []
    for number, item in section.words("rho")[1]:
        parts = item.split("~")
        if len(parts) != 2:
            raise FormatError(f"complementarity pair must look like 'a~t', got {item!r}", number)
        for x in parts:
            if x not in alphabet:
                raise FormatError(f"complementarity pair uses unknown symbol {x!r}", number)
        pairs.append(tuple(parts))
    rho = Complementarity(pairs, alphabet)
    axioms = []
    for number, item in section.words("axioms")[1]:
        if item.count("/") != 1:
            raise FormatError(f"axiom must look like 'upper/lower', got {item!r}", number)
        upper, lower = item.split("/")
        m = Molecule(_strand(upper, alphabet, number), _strand(lower, alphabet, number))
        if not m.well_started(rho):
            raise FormatError(f"axiom {item} is not well-started", number)
        axioms.append(m)
    if not axioms:
        raise FormatError("[sticker] section needs at least one axiom", section.line)
    dominoes = []
    for number, item in section.words("dominoes")[1]:
        dominoes.append(_domino(item, alphabet, number))
    return StickerSystem(rho, axioms, dominoes)


def _domino(item, alphabet, number):
    if item.count("/") != 1:
        raise FormatError(f"domino must look like 'x/-' or '-/x', got {item!r}", number)
    upper, lower = item.split("/")
    if upper != GAP and lower == GAP:
        return SingleStrand(UPPER, _string(upper, alphabet, number))
    if upper == GAP and lower != GAP:
        return SingleStrand(LOWER, _string(lower, alphabet, number))
    raise FormatError(f"domino {item!r} must be a single strand", number)


def parse_domino(item, alphabet):
    """Parse one ``x/-`` or ``-/x`` token (used by replay scripts)."""
    return _domino(item, frozenset(alphabet), 0)


def _output_symbol(text, sigma, number):
    if text == "~":
        return LAMBDA
    if text == "!":
        return BOTTOM
    if text not in sigma:
        raise FormatError(f"output symbol {text!r} is not declared in 'output:'", number)
    return text


def _parse_observer(section, input_alphabet):
    sigma = _symbols(section, "output")
    for number, letter in section.words("output")[1]:
        if len(letter) != 1 or not letter.isalnum():
            raise FormatError(f"output letters must be single alphanumeric characters, got {letter!r}",
                              number)
    cases = []
    default = None
    for number, text in section.values("cases")[1]:
        if default is not None:
            raise FormatError("case after the '_' catch-all", number)
        if "=>" not in text:
            raise FormatError("case must have the form 'PATTERN => SYMBOL'", number)
        pattern, out = (part.strip() for part in text.rsplit("=>", 1))
        out = _output_symbol(out, sigma, number)
        if pattern == "_":
            default = out
            continue
        try:
            regex.parse(pattern, input_alphabet)
        except PatternError as exc:
            raise FormatError(str(exc), number) from None
        cases.append(PatternCase(pattern, out))
    if default is None:
        raise FormatError("observer incomplete: missing final '_ => SYMBOL' catch-all",
                          section.values("cases")[0])
    return ObserverSpec(tuple(cases), default, frozenset(sigma))


def parse_system(text: str):
    """Parse and fully validate a system file."""
    sections = _split_sections(text)
    basic = [name for name in ("grammar", "sticker") if name in sections]
    if len(basic) != 1:
        line = sections[basic[1]].line if len(basic) > 1 else 1
        raise FormatError("need exactly one [grammar] or [sticker] section", line)
    if "observer" not in sections:
        raise FormatError("missing [observer] section", 1)
    if basic[0] == "grammar":
        g = _parse_grammar(sections["grammar"])
        spec = _parse_observer(sections["observer"], g.alphabet)
        return GOSystem(g, compile_observer(spec, g.alphabet), spec)
    gamma = _parse_sticker(sections["sticker"])
    vd = gamma.rho.double_alphabet()
    spec = _parse_observer(sections["observer"], vd)
    return ObservableStickerSystem(gamma, compile_observer(spec, vd), spec)


def format_system(system) -> str:
    """Canonical text for a parsed system; ``parse_system`` reads it back unchanged."""
    lines = []
    if isinstance(system, GOSystem):
        g = system.grammar
        lines += ["[grammar]",
                  f"nonterminals: {' '.join(sorted(g.nonterminals))}",
                  f"terminals: {' '.join(sorted(g.terminals))}",
                  f"start: {g.start}",
                  "rules:"]
        lines += [f"  {rule}" for rule in g.rules]
    else:
        gamma = system.system
        pairs = sorted(p for p in gamma.rho.pairs if p[0] <= p[1])
        lines += ["[sticker]",
                  f"alphabet: {' '.join(sorted(gamma.alphabet))}",
                  f"rho: {' '.join(f'{a}~{b}' for a, b in pairs)}",
                  "axioms:"]
        lines += [f"  {_joined(m.upper)}/{_joined(m.lower)}" for m in gamma.axioms]
        lines += ["dominoes:"]
        lines += [f"  {_joined(d.content)}/-" if d.side == UPPER else f"  -/{_joined(d.content)}"
                  for d in gamma.dominoes]
    spec = system.spec
    if spec is None:
        raise ValueError("system carries no observer spec to print")
    lines += ["", "[observer]", f"output: {' '.join(sorted(spec.output_alphabet))}", "cases:"]
    lines += [f"  {case.pattern} => {render(case.output)}" for case in spec.cases]
    lines += [f"  _ => {render(spec.default)}", ""]
    return "\n".join(lines)


def _joined(strand):
    # Items are whitespace-separated, so strands are spelled without spaces.
    return "".join(strand) or GAP
