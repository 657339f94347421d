"""Grammar/observer systems: a grammar watched by a monadic transducer.

Every sentential form of a terminating derivation, the start symbol
included, is observed; the output word is the catenation of the
observations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import grammar as _grammar
from .errors import AlphabetError
from .grammar import Grammar, RuleApplication
from .observer import BOTTOM, MonadicTransducer, ObserverSpec, observe_sequence
from .search import (FILTERED, FREE, Bounds, Found, NotFound, ObservedLanguage, explore,
                     language, path_to)


@dataclass(frozen=True)
class GOSystem:
    grammar: Grammar
    observer: MonadicTransducer
    spec: ObserverSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if set(self.observer.alphabet) != set(self.grammar.alphabet):
            raise AlphabetError("observer input alphabet must equal N ∪ T of the grammar")

    # basic-system protocol
    def initial(self):
        return [((self.grammar.start,), None)]

    # Forms reaching these methods come from the search and are already valid.
    def successors(self, form):
        return _grammar.successors_unchecked(self.grammar, form)

    def is_final(self, form):
        return not any(sym in self.grammar.nonterminals for sym in form)

    def view(self, form):
        return form

    def size(self, form):
        return len(form)

    def nonterminals(self, form):
        return sum(1 for sym in form if sym in self.grammar.nonterminals)


# Spec-level name for the bounds record.
EnumerationBounds = Bounds


@dataclass(frozen=True)
class TraceRow:
    step: int
    form: tuple
    applied: RuleApplication | None
    emitted: str


def enumerate_language(sys: GOSystem, b: Bounds, mode=FREE, jobs=1) -> ObservedLanguage:
    """Bounded slice of the observed language (free or ⊥-filtered)."""
    b.check(1)
    return language(explore(sys, sys.observer, b, mode, jobs=jobs))


def member(sys: GOSystem, word: str, b: Bounds, jobs=1):
    """Search for a terminating derivation whose observation is ``word``."""
    b.check(1)
    for letter in word:
        if letter not in sys.observer.output_alphabet:
            raise AlphabetError(f"{letter!r} is not in the output alphabet")
    outcome = explore(sys, sys.observer, b, FILTERED, target=word, jobs=jobs)
    if outcome.found is None:
        return NotFound()
    return Found(tuple(path_to(outcome, outcome.found)[1:]))


def trace(sys: GOSystem, apps: Iterable[RuleApplication]) -> list:
    """Annotated replay: one row per sentential form with its observation."""
    apps = list(apps)
    forms = _grammar.replay(sys.grammar, apps)
    return [TraceRow(i, form, apps[i - 1] if i else None, sys.observer(form))
            for i, form in enumerate(forms)]


def trace_output(rows) -> str:
    return "".join(row.emitted for row in rows)


def derivation_text(sys: GOSystem, apps) -> str:
    forms = _grammar.replay(sys.grammar, apps)
    return "=>".join(form_text(f) for f in forms)


def form_text(form) -> str:
    """Compact spelling of a form; space-separated when names are long."""
    if not form:
        return "~"
    return " ".join(form) if any(len(s) > 1 for s in form) else "".join(form)


__all__ = [
    "GOSystem", "EnumerationBounds", "TraceRow", "Found", "NotFound",
    "enumerate_language", "member", "trace", "trace_output", "derivation_text", "form_text",
    "FREE", "FILTERED", "BOTTOM", "observe_sequence",
]
