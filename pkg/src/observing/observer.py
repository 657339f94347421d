"""Monadic transducers: complete, deterministic, state-labeled automata.

An observer maps a whole input word to a single output symbol. Output
symbols are plain strings: a letter of the output alphabet, ``BOTTOM`` for
the rejecting marker, or ``LAMBDA`` (the empty string) for no output. That
makes the observation of a sequence a plain string concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import regex
from .errors import AlphabetError, PatternError

BOTTOM = "!"
LAMBDA = ""

RESERVED = frozenset("~!_")


def render(symbol: str) -> str:
    """Text spelling of an output symbol: ``~`` for LAMBDA, ``!`` for BOTTOM."""
    return "~" if symbol == LAMBDA else symbol


def check_output_letter(letter: str):
    if len(letter) != 1 or letter in RESERVED or not letter.isalnum():
        raise AlphabetError(f"invalid output letter {letter!r}")


@dataclass(frozen=True)
class PatternCase:
    pattern: str
    output: str


@dataclass(frozen=True)
class ObserverSpec:
    """Ordered pattern cases plus the mandatory catch-all ``default``.

    ``output_alphabet`` is the letter set; inferred from the cases if empty.
    """

    cases: tuple
    default: str
    output_alphabet: frozenset = field(default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "cases", tuple(
            c if isinstance(c, PatternCase) else PatternCase(*c) for c in self.cases))
        sigma = frozenset(self.output_alphabet) or frozenset(
            o for o in [c.output for c in self.cases] + [self.default]
            if o not in (BOTTOM, LAMBDA))
        for letter in sigma:
            check_output_letter(letter)
        for out in [c.output for c in self.cases] + [self.default]:
            if out not in sigma and out not in (BOTTOM, LAMBDA):
                raise AlphabetError(f"output {out!r} is not in the output alphabet")
        object.__setattr__(self, "output_alphabet", sigma)


class MonadicTransducer:
    """Deterministic complete automaton whose states carry output labels.

    ``delta[state][i]`` is the successor on ``alphabet[i]``; ``labels[state]``
    is the output symbol emitted when a word ends in ``state``.
    """

    def __init__(self, alphabet, output_alphabet, delta, labels, initial=0):
        self.alphabet = tuple(alphabet)
        self.output_alphabet = frozenset(output_alphabet)
        self.delta = tuple(tuple(row) for row in delta)
        self.labels = tuple(labels)
        self.initial = initial
        self._index = {s: i for i, s in enumerate(self.alphabet)}
        if len(self._index) != len(self.alphabet):
            raise AlphabetError("duplicate input symbols")
        n = len(self.delta)
        if len(self.labels) != n or not 0 <= initial < n:
            raise ValueError("labels and initial state must match the state set")
        for row in self.delta:
            if len(row) != len(self.alphabet) or any(not 0 <= t < n for t in row):
                raise ValueError("transition function must be total over states and symbols")
        for label in self.labels:
            if label not in self.output_alphabet and label not in (BOTTOM, LAMBDA):
                raise AlphabetError(f"state label {label!r} outside the output alphabet")

    @property
    def states(self):
        return range(len(self.delta))

    def step(self, state: int, symbol: str) -> int:
        try:
            return self.delta[state][self._index[symbol]]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} is not in the observer's input alphabet") from None

    def __call__(self, word: Iterable[str]) -> str:
        state = self.initial
        delta, index = self.delta, self._index
        for symbol in word:
            try:
                state = delta[state][index[symbol]]
            except KeyError:
                raise AlphabetError(
                    f"symbol {symbol!r} is not in the observer's input alphabet") from None
        return self.labels[state]

    def minimize(self) -> MonadicTransducer:
        """Moore partition refinement over reachable states."""
        reachable = [self.initial]
        seen = {self.initial}
        for state in reachable:
            for t in self.delta[state]:
                if t not in seen:
                    seen.add(t)
                    reachable.append(t)
        block = {s: self.labels[s] for s in reachable}
        while True:
            signature = {s: (block[s],) + tuple(block[t] for t in self.delta[s]) for s in reachable}
            ids = {}
            refined = {s: ids.setdefault(signature[s], len(ids)) for s in reachable}
            if len(ids) == len(set(block.values())):
                block = refined
                break
            block = refined
        # Renumber in order of first reach so the initial state stays 0.
        order = {}
        for s in reachable:
            order.setdefault(block[s], len(order))
        size = len(order)
        delta = [None] * size
        labels = [None] * size
        for s in reachable:
            b = order[block[s]]
            if delta[b] is None:
                delta[b] = [order[block[t]] for t in self.delta[s]]
                labels[b] = self.labels[s]
        return MonadicTransducer(self.alphabet, self.output_alphabet, delta, labels, 0)

    def _key(self):
        return (self.alphabet, self.output_alphabet, self.delta, self.labels, self.initial)

    def __eq__(self, other):
        return isinstance(other, MonadicTransducer) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"MonadicTransducer(states={len(self.delta)}, alphabet={len(self.alphabet)})"


def _case_dfas(spec: ObserverSpec, alphabet) -> list:
    dfas = []
    for case in spec.cases:
        try:
            node = regex.parse(case.pattern, alphabet)
        except PatternError as exc:
            raise PatternError(f"in pattern {case.pattern!r}: {exc}") from None
        dfas.append(regex.compile_dfa(node, alphabet))
    return dfas


def _product(dfas, alphabet):
    """Reachable part of the product automaton; yields (states, delta)."""
    start = (0,) * len(dfas)
    ids = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        current = order[i]
        row = []
        for k in range(len(alphabet)):
            target = tuple(d.delta[s][k] for d, s in zip(dfas, current))
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
            row.append(ids[target])
        delta.append(row)
        i += 1
    return order, delta


def compile_observer(spec: ObserverSpec, input_alphabet: Iterable[str],
                     minimize: bool = False) -> MonadicTransducer:
    """Build the first-match transducer for ``spec`` over ``input_alphabet``."""
    alphabet = tuple(sorted(set(input_alphabet)))
    dfas = _case_dfas(spec, alphabet)
    order, delta = _product(dfas, alphabet)
    labels = []
    for states in order:
        for case, dfa, s in zip(spec.cases, dfas, states):
            if s in dfa.accepting:
                labels.append(case.output)
                break
        else:
            labels.append(spec.default)
    t = MonadicTransducer(alphabet, spec.output_alphabet, delta, labels)
    return t.minimize() if minimize else t


def observe(t: MonadicTransducer, w: Sequence[str]) -> str:
    return t(w)


def observe_sequence(t: MonadicTransducer, ws: Iterable[Sequence[str]]) -> str:
    """Catenation of the observations of ``ws``; LAMBDA contributes nothing."""
    return "".join(t(w) for w in ws)


def lint_disjointness(spec: ObserverSpec, input_alphabet: Iterable[str]) -> list:
    """One warning per pair of cases whose pattern languages intersect."""
    alphabet = tuple(sorted(set(input_alphabet)))
    dfas = _case_dfas(spec, alphabet)
    order, _ = _product(dfas, alphabet)
    warnings = []
    for i, j in combinations(range(len(dfas)), 2):
        if any(s[i] in dfas[i].accepting and s[j] in dfas[j].accepting for s in order):
            a, b = spec.cases[i], spec.cases[j]
            warnings.append(
                f"cases {i + 1} ({a.pattern} => {render(a.output)}) and "
                f"{j + 1} ({b.pattern} => {render(b.output)}) overlap; "
                f"case {i + 1} wins")
    return warnings
