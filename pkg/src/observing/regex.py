"""Regular expressions over interned symbols, compiled to complete DFAs.

Tokens are whole symbols, not characters. A pattern such as ``A B*`` or
``t+C*`` is split into symbols by longest match against the alphabet;
bracketed tokens like ``[a/t]`` are always single symbols.

Syntax: concatenation, ``|``, ``*``, ``+``, ``?``, parentheses, ``.``
(any symbol) and ``~`` (the empty word).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import PatternError

NAME_CHARS = re.compile(r"[A-Za-z0-9_']+")


# AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class AnySym:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Cat:
    parts: tuple


@dataclass(frozen=True)
class Alt:
    options: tuple


@dataclass(frozen=True)
class Star:
    inner: object


@dataclass(frozen=True)
class Plus:
    inner: object


@dataclass(frozen=True)
class Opt:
    inner: object


# Lexing and parsing ----------------------------------------------------

def segment(chunk: str, alphabet, offset: int = 0) -> list:
    """Split a run of name characters into alphabet symbols, longest match first."""
    longest = max((len(s) for s in alphabet), default=0)
    out = []
    i = 0
    while i < len(chunk):
        for size in range(min(longest, len(chunk) - i), 0, -1):
            if chunk[i:i + size] in alphabet:
                out.append(chunk[i:i + size])
                i += size
                break
        else:
            raise PatternError(f"unknown symbol at {chunk[i:]!r}", offset + i)
    return out


def tokenize(text: str, alphabet) -> list:
    """Lex a pattern into (kind, value, column) triples."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()|*+?.~":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == "[":
            end = text.find("]", i)
            if end < 0:
                raise PatternError("unterminated '['", i)
            name = text[i:end + 1]
            if name not in alphabet:
                raise PatternError(f"unknown symbol {name!r}", i)
            tokens.append(("sym", name, i))
            i = end + 1
        else:
            m = NAME_CHARS.match(text, i)
            if not m:
                raise PatternError(f"unexpected character {ch!r}", i)
            for name in segment(m.group(), alphabet, i):
                tokens.append(("sym", name, i))
            i = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, length):
        self.tokens = tokens
        self.pos = 0
        self.length = length

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def column(self):
        return self.tokens[self.pos][2] if self.pos < len(self.tokens) else self.length

    def parse(self):
        node = self.alternation()
        if self.pos != len(self.tokens):
            raise PatternError(f"unexpected {self.tokens[self.pos][1]!r}", self.column())
        return node

    def alternation(self):
        options = [self.concatenation()]
        while self.peek() == "|":
            self.pos += 1
            options.append(self.concatenation())
        return options[0] if len(options) == 1 else Alt(tuple(options))

    def concatenation(self):
        parts = []
        while self.peek() not in (None, "|", ")"):
            parts.append(self.postfix())
        if not parts:
            return Epsilon()
        return parts[0] if len(parts) == 1 else Cat(tuple(parts))

    def postfix(self):
        node = self.atom()
        while self.peek() in ("*", "+", "?"):
            op = self.tokens[self.pos][0]
            self.pos += 1
            node = {"*": Star, "+": Plus, "?": Opt}[op](node)
        return node

    def atom(self):
        kind = self.peek()
        if kind == "sym":
            node = Sym(self.tokens[self.pos][1])
            self.pos += 1
            return node
        if kind == ".":
            self.pos += 1
            return AnySym()
        if kind == "~":
            self.pos += 1
            return Epsilon()
        if kind == "(":
            self.pos += 1
            node = self.alternation()
            if self.peek() != ")":
                raise PatternError("missing ')'", self.column())
            self.pos += 1
            return node
        if kind is None:
            raise PatternError("unexpected end of pattern", self.column())
        raise PatternError(f"unexpected {self.tokens[self.pos][1]!r}", self.column())


def parse(text: str, alphabet) -> object:
    """Parse ``text`` into an AST over ``alphabet``."""
    alphabet = frozenset(alphabet)
    return _Parser(tokenize(text, alphabet), len(text)).parse()


def to_text(node) -> str:
    """Render an AST back to pattern syntax (symbols space-separated)."""
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, AnySym):
        return "."
    if isinstance(node, Epsilon):
        return "~"
    if isinstance(node, Cat):
        return " ".join(_group(p, Alt) for p in node.parts)
    if isinstance(node, Alt):
        return " | ".join(_group(o, Alt) for o in node.options)
    op = {Star: "*", Plus: "+", Opt: "?"}[type(node)]
    return _group(node.inner, (Alt, Cat)) + op


def _group(node, kinds):
    text = to_text(node)
    return f"({text})" if isinstance(node, kinds) else text


# Thompson NFA ------------------------------------------------------------

class _NFA:
    def __init__(self):
        self.eps = []
        self.edges = []   # state -> list of (symbol or None for any, target)

    def new(self):
        self.eps.append([])
        self.edges.append([])
        return len(self.eps) - 1

    def build(self, node):
        """Return (entry, exit) states for ``node``."""
        if isinstance(node, (Sym, AnySym)):
            a, b = self.new(), self.new()
            self.edges[a].append((node.name if isinstance(node, Sym) else None, b))
            return a, b
        if isinstance(node, Epsilon):
            a = self.new()
            return a, a
        if isinstance(node, Cat):
            entry, end = self.build(node.parts[0])
            for part in node.parts[1:]:
                a, b = self.build(part)
                self.eps[end].append(a)
                end = b
            return entry, end
        if isinstance(node, Alt):
            a, b = self.new(), self.new()
            for option in node.options:
                x, y = self.build(option)
                self.eps[a].append(x)
                self.eps[y].append(b)
            return a, b
        x, y = self.build(node.inner)
        a, b = self.new(), self.new()
        self.eps[a].append(x)
        self.eps[y].append(b)
        if isinstance(node, (Star, Opt)):
            self.eps[a].append(b)
        if isinstance(node, (Star, Plus)):
            self.eps[y].append(x)
        return a, b

    def closure(self, states):
        stack = list(states)
        seen = set(states)
        while stack:
            for nxt in self.eps[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return frozenset(seen)


@dataclass(frozen=True)
class DFA:
    """A complete DFA over ``alphabet``; state 0 is initial."""

    alphabet: tuple
    delta: tuple       # delta[state][symbol index] -> state
    accepting: frozenset

    def run(self, word: Iterable[str], state: int = 0) -> int:
        index = {s: i for i, s in enumerate(self.alphabet)}
        for sym in word:
            state = self.delta[state][index[sym]]
        return state

    def accepts(self, word) -> bool:
        return self.run(word) in self.accepting


def compile_dfa(node, alphabet) -> DFA:
    """Subset construction over the full alphabet; the empty subset is the dead state."""
    alphabet = tuple(sorted(alphabet))
    nfa = _NFA()
    entry, exit_ = nfa.build(node)
    start = nfa.closure([entry])
    ids = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        current = order[i]
        row = []
        for sym in alphabet:
            moved = [t for s in current for label, t in nfa.edges[s] if label is None or label == sym]
            target = nfa.closure(moved)
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
            row.append(ids[target])
        delta.append(tuple(row))
        i += 1
    accepting = frozenset(ids[s] for s in order if exit_ in s)
    return DFA(alphabet, tuple(delta), accepting)


def symbols_of(node) -> set:
    if isinstance(node, Sym):
        return {node.name}
    if isinstance(node, Cat):
        return set().union(*(symbols_of(p) for p in node.parts))
    if isinstance(node, Alt):
        return set().union(*(symbols_of(o) for o in node.options))
    if isinstance(node, (Star, Plus, Opt)):
        return symbols_of(node.inner)
    return set()
