"""Context-free grammars and the free one-step derivation relation.

Sentential forms are tuples of symbol names. Any occurrence of any
nonterminal may be rewritten (free derivation, not leftmost).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import AlphabetError, GrammarError, ReplayError

SYMBOL_NAME = re.compile(r"[A-Za-z0-9][A-Za-z0-9_']*\Z")

Form = tuple


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: tuple

    def __str__(self):
        return f"{self.lhs} -> {' '.join(self.rhs) if self.rhs else '~'}"


class RuleApplication(NamedTuple):
    """Witness for one derivation step: rule ``rule`` rewritten at ``position``."""

    rule: int
    position: int

    def __str__(self):
        return f"{self.rule}@{self.position}"


@dataclass(frozen=True)
class Grammar:
    """A context-free grammar (N, T, S, P) with an ordered rule list."""

    nonterminals: frozenset
    terminals: frozenset
    start: str
    rules: tuple

    def __init__(self, nonterminals, terminals, start, rules):
        nonterminals = frozenset(nonterminals)
        terminals = frozenset(terminals)
        rules = tuple(r if isinstance(r, Rule) else Rule(r[0], tuple(r[1])) for r in rules)
        object.__setattr__(self, "nonterminals", nonterminals)
        object.__setattr__(self, "terminals", terminals)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "rules", rules)
        self._validate()
        by_lhs = {}
        for index, rule in enumerate(rules):
            by_lhs.setdefault(rule.lhs, []).append(index)
        object.__setattr__(self, "_by_lhs", {k: tuple(v) for k, v in by_lhs.items()})

    def _validate(self):
        for name in self.nonterminals | self.terminals:
            if not isinstance(name, str) or not SYMBOL_NAME.match(name):
                raise GrammarError(f"invalid symbol name {name!r}")
        common = self.nonterminals & self.terminals
        if common:
            raise GrammarError(f"symbols both terminal and nonterminal: {sorted(common)}")
        if self.start not in self.nonterminals:
            raise GrammarError(f"start symbol {self.start!r} is not a nonterminal")
        seen = set()
        for rule in self.rules:
            if rule.lhs not in self.nonterminals:
                raise GrammarError(f"rule {rule}: left side is not a nonterminal")
            for sym in rule.rhs:
                if sym not in self.alphabet:
                    raise GrammarError(f"rule {rule}: undeclared symbol {sym!r}")
            if rule in seen:
                raise GrammarError(f"duplicate rule {rule}")
            seen.add(rule)

    @property
    def alphabet(self):
        return self.nonterminals | self.terminals

    def check_form(self, form: Iterable[str]) -> Form:
        form = tuple(form)
        alphabet = self.alphabet
        for sym in form:
            if sym not in alphabet:
                raise AlphabetError(f"symbol {sym!r} is not in the grammar's alphabet")
        return form

    def rules_for(self, lhs: str) -> tuple:
        return self._by_lhs.get(lhs, ())

    # Convenience wrappers so a Grammar can be used as a basic system.
    def successors(self, form):
        return successors(self, form)

    def is_terminal_form(self, form):
        return is_terminal_form(self, form)

    def nonterminal_count(self, form):
        return nonterminal_count(self, form)


def successors(g: Grammar, w: Sequence[str]) -> list:
    """All forms reachable from ``w`` in one step, with their witnesses.

    One entry per (rule, occurrence) pair, ordered by rule index and then
    by position.
    """
    return successors_unchecked(g, g.check_form(w))


def successors_unchecked(g: Grammar, w: Form) -> list:
    occurrences = {}
    for pos, sym in enumerate(w):
        if sym in g.nonterminals:
            occurrences.setdefault(sym, []).append(pos)
    out = []
    for index, rule in enumerate(g.rules):
        for pos in occurrences.get(rule.lhs, ()):
            out.append((w[:pos] + rule.rhs + w[pos + 1:], RuleApplication(index, pos)))
    return out


def is_terminal_form(g: Grammar, w: Sequence[str]) -> bool:
    return nonterminal_count(g, w) == 0


def nonterminal_count(g: Grammar, w: Sequence[str]) -> int:
    w = g.check_form(w)
    return sum(1 for sym in w if sym in g.nonterminals)


def apply(g: Grammar, w: Sequence[str], app: RuleApplication, step=None) -> Form:
    """Replay a single rule application on ``w``."""
    w = tuple(w)
    if not 0 <= app.rule < len(g.rules):
        raise ReplayError(f"no rule with index {app.rule}", step)
    rule = g.rules[app.rule]
    if not 0 <= app.position < len(w):
        raise ReplayError(f"position {app.position} outside form of length {len(w)}", step)
    if w[app.position] != rule.lhs:
        raise ReplayError(
            f"rule {rule} needs {rule.lhs!r} at position {app.position}, "
            f"found {w[app.position]!r}",
            step,
        )
    return w[:app.position] + rule.rhs + w[app.position + 1:]


def replay(g: Grammar, apps: Iterable[RuleApplication]) -> list:
    """Forms w0..wn obtained by replaying ``apps`` from the start symbol."""
    forms = [(g.start,)]
    for step, app in enumerate(apps, start=1):
        forms.append(apply(g, forms[-1], app, step))
    return forms
