"""Observed languages of grammars and sticker systems under monadic-transducer observers."""

from .errors import (AlphabetError, BoundsError, FormatError, GrammarError, ObservingError,
                     PatternError, ReplayError, StickerError)
from .grammar import Grammar, Rule, RuleApplication, is_terminal_form, nonterminal_count, successors
from .observer import (BOTTOM, LAMBDA, MonadicTransducer, ObserverSpec, PatternCase,
                       compile_observer, lint_disjointness, observe, observe_sequence)
from .search import FILTERED, FREE, Bounds, Found, NotFound, ObservedLanguage
from .go import EnumerationBounds, GOSystem, enumerate_language, member, trace
from .sticker import (Complementarity, ComputationBounds, Molecule, ObservableStickerSystem,
                      SingleStrand, StickerSystem, classical_language, enumerate_observed, stick,
                      tokenize)

__all__ = [
    "AlphabetError", "BoundsError", "FormatError", "GrammarError", "ObservingError",
    "PatternError", "ReplayError", "StickerError",
    "Grammar", "Rule", "RuleApplication", "is_terminal_form", "nonterminal_count", "successors",
    "BOTTOM", "LAMBDA", "MonadicTransducer", "ObserverSpec", "PatternCase",
    "compile_observer", "lint_disjointness", "observe", "observe_sequence",
    "FILTERED", "FREE", "Bounds", "Found", "NotFound", "ObservedLanguage",
    "EnumerationBounds", "GOSystem", "enumerate_language", "member", "trace",
    "Complementarity", "ComputationBounds", "Molecule", "ObservableStickerSystem",
    "SingleStrand", "StickerSystem", "classical_language", "enumerate_observed", "stick",
    "tokenize",
]
