"""Simple regular sticker systems and their observed languages.

A molecule is a pair of left-aligned strands. It is well-started when
every position covered by both strands holds a complementary pair; the
longer strand then forms an overhang on the right. It is complete when
both strands have the same length.

Sticking appends a single strand to the right end of the upper or lower
strand and is defined only if the result is again well-started.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import AlphabetError, ReplayError, StickerError
from .grammar import SYMBOL_NAME
from .observer import MonadicTransducer, ObserverSpec
from .search import (FILTERED, FREE, Bounds, Found, NotFound, ObservedLanguage, explore,
                     language, length_lex, path_to)

UPPER = "upper"
LOWER = "lower"
GAP = "-"


class Complementarity:
    """Symmetric relation over ``alphabet``; the closure is taken on construction."""

    def __init__(self, pairs: Iterable[tuple], alphabet: Iterable[str]):
        self.alphabet = frozenset(alphabet)
        for name in self.alphabet:
            if not isinstance(name, str) or not SYMBOL_NAME.match(name):
                raise StickerError(f"invalid symbol name {name!r}")
        closed = set()
        for a, b in pairs:
            for x in (a, b):
                if x not in self.alphabet:
                    raise AlphabetError(f"complementarity pair uses unknown symbol {x!r}")
            closed.add((a, b))
            closed.add((b, a))
        self.pairs = frozenset(closed)

    def __contains__(self, pair):
        return pair in self.pairs

    def __eq__(self, other):
        return (isinstance(other, Complementarity) and self.pairs == other.pairs
                and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash((self.pairs, self.alphabet))

    def __repr__(self):
        shown = sorted(p for p in self.pairs if p[0] <= p[1])
        return f"Complementarity({shown})"

    def check(self, strand):
        for x in strand:
            if x not in self.alphabet:
                raise AlphabetError(f"symbol {x!r} is not in the sticker alphabet")

    def double_alphabet(self) -> frozenset:
        """V_d: complete double symbols plus upper-only and lower-only symbols."""
        out = {token(a, b) for a, b in self.pairs}
        out |= {token(a, None) for a in self.alphabet}
        out |= {token(None, b) for b in self.alphabet}
        return frozenset(out)


def token(upper, lower) -> str:
    return f"[{upper or GAP}/{lower or GAP}]"


def strand_text(strand) -> str:
    if not strand:
        return GAP
    return " ".join(strand) if any(len(s) > 1 for s in strand) else "".join(strand)


@dataclass(frozen=True, order=True)
class Molecule:
    upper: tuple
    lower: tuple

    def __init__(self, upper, lower):
        object.__setattr__(self, "upper", tuple(upper))
        object.__setattr__(self, "lower", tuple(lower))

    @property
    def complete(self) -> bool:
        return len(self.upper) == len(self.lower)

    def well_started(self, rho: Complementarity) -> bool:
        return all((u, l) in rho for u, l in zip(self.upper, self.lower))

    def __len__(self):
        return max(len(self.upper), len(self.lower))

    def __str__(self):
        return f"{strand_text(self.upper)}/{strand_text(self.lower)}"


@dataclass(frozen=True, order=True)
class SingleStrand:
    side: str
    content: tuple

    def __init__(self, side, content):
        if side not in (UPPER, LOWER):
            raise StickerError(f"strand side must be {UPPER!r} or {LOWER!r}")
        content = tuple(content)
        if not content:
            raise StickerError("single strand must be nonempty")
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "content", content)

    def __str__(self):
        text = strand_text(self.content)
        return f"{text}/-" if self.side == UPPER else f"-/{text}"


def stick(rho: Complementarity, m: Molecule, s: SingleStrand):
    """Paste ``s`` onto the right of ``m``; None when the result is not well-started."""
    rho.check(m.upper)
    rho.check(m.lower)
    rho.check(s.content)
    if not m.well_started(rho):
        raise StickerError(f"molecule {m} is not well-started")
    if s.side == UPPER:
        grown, other = m.upper + s.content, m.lower
        start = len(m.upper)
        pairs = ((grown[i], other[i]) for i in range(start, min(len(grown), len(other))))
        result = Molecule(grown, other)
    else:
        grown, other = m.lower + s.content, m.upper
        start = len(m.lower)
        pairs = ((other[i], grown[i]) for i in range(start, min(len(grown), len(other))))
        result = Molecule(other, grown)
    if all(p in rho for p in pairs):
        return result
    return None


def tokenize(m: Molecule) -> tuple:
    """Read a molecule left to right as a word over the double-symbol alphabet."""
    n = len(m)
    return tuple(
        token(m.upper[i] if i < len(m.upper) else None,
              m.lower[i] if i < len(m.lower) else None)
        for i in range(n))


def detokenize(word: Iterable[str]) -> Molecule:
    upper, lower = [], []
    for tok in word:
        u, l = tok[1:-1].split("/")
        if u != GAP:
            upper.append(u)
        if l != GAP:
            lower.append(l)
    return Molecule(upper, lower)


@dataclass(frozen=True)
class StickerSystem:
    rho: Complementarity
    axioms: tuple
    dominoes: tuple

    def __init__(self, rho, axioms, dominoes):
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "axioms", tuple(axioms))
        object.__setattr__(self, "dominoes", tuple(dominoes))
        if not self.axioms:
            raise StickerError("a sticker system needs at least one axiom")
        for axiom in self.axioms:
            rho.check(axiom.upper)
            rho.check(axiom.lower)
            if not axiom.well_started(rho):
                raise StickerError(f"axiom {axiom} is not well-started")
        for domino in self.dominoes:
            rho.check(domino.content)

    @property
    def alphabet(self):
        return self.rho.alphabet

    def successors(self, m: Molecule) -> list:
        out = []
        for domino in self.dominoes:
            result = stick(self.rho, m, domino)
            if result is not None:
                out.append((result, domino))
        return out


@dataclass(frozen=True)
class ObservableStickerSystem:
    system: StickerSystem
    observer: MonadicTransducer
    spec: ObserverSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if set(self.observer.alphabet) != set(self.system.rho.double_alphabet()):
            raise AlphabetError("observer input alphabet must be the double-symbol alphabet V_d")

    # basic-system protocol
    def initial(self):
        return [(axiom, i) for i, axiom in enumerate(self.system.axioms)]

    def successors(self, m):
        return self.system.successors(m)

    def is_final(self, m):
        return m.complete

    def view(self, m):
        return tokenize(m)

    def size(self, m):
        return len(m)

    def nonterminals(self, m):
        return 0


# Same record as the grammar bounds, except that zero sticking steps is allowed.
ComputationBounds = Bounds


def _bounds(b) -> Bounds:
    b = Bounds(b) if isinstance(b, int) else b
    b.check(0)
    return b


def enumerate_observed(phi: ObservableStickerSystem, b, mode=FREE, jobs=1) -> ObservedLanguage:
    """Observed words of complete computations with at most ``max_steps`` sticks."""
    return language(explore(phi, phi.observer, _bounds(b), mode, jobs=jobs))


def classical_language(gamma: StickerSystem, b) -> tuple:
    """Upper strands of complete molecules reachable within the bound."""
    b = _bounds(b)
    seen = set(gamma.axioms)
    queue = deque((axiom, 0) for axiom in gamma.axioms)
    words = set()
    while queue:
        m, depth = queue.popleft()
        if m.complete:
            words.add(m.upper)
        if depth == b.max_steps:
            continue
        for child, _ in gamma.successors(m):
            if child not in seen:
                seen.add(child)
                queue.append((child, depth + 1))
    return tuple(sorted((strand_text(w) if w else "" for w in words), key=length_lex))


@dataclass(frozen=True)
class StickerTraceRow:
    step: int
    added: SingleStrand | None
    molecule: Molecule
    emitted: str


def replay(gamma: StickerSystem, dominoes: Iterable[SingleStrand], axiom: int = 0) -> list:
    if not 0 <= axiom < len(gamma.axioms):
        raise ReplayError(f"no axiom with index {axiom}")
    molecules = [gamma.axioms[axiom]]
    for step, domino in enumerate(dominoes, start=1):
        if domino not in gamma.dominoes:
            raise ReplayError(f"{domino} is not a domino of the system", step)
        result = stick(gamma.rho, molecules[-1], domino)
        if result is None:
            raise ReplayError(f"sticking {domino} onto {molecules[-1]} is undefined", step)
        molecules.append(result)
    return molecules


def trace(phi: ObservableStickerSystem, dominoes: Iterable[SingleStrand], axiom: int = 0) -> list:
    dominoes = list(dominoes)
    molecules = replay(phi.system, dominoes, axiom)
    return [StickerTraceRow(i, dominoes[i - 1] if i else None, m, phi.observer(tokenize(m)))
            for i, m in enumerate(molecules)]


def member(phi: ObservableStickerSystem, word: str, b, jobs=1):
    """Search for a complete computation observing ``word``.

    The witness of a ``Found`` result is ``(axiom index, dominoes)``.
    """
    for letter in word:
        if letter not in phi.observer.output_alphabet:
            raise AlphabetError(f"{letter!r} is not in the output alphabet")
    outcome = explore(phi, phi.observer, _bounds(b), FILTERED, target=word, jobs=jobs)
    if outcome.found is None:
        return NotFound()
    labels = path_to(outcome, outcome.found)
    return Found((labels[0], tuple(labels[1:])))
