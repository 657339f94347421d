"""
One grammar, two observers
==========================

A small context-free grammar whose own language is just {t, tt, ...}
yields a^n b^n c^n under one observer and a^i (i >= 2) under another.
"""

from pathlib import Path

from observing import FILTERED, FREE, Bounds, enumerate_language
from observing.formats import parse_system

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"

anbncn = parse_system((SYSTEMS / "anbncn.obs").read_text())
powers = parse_system((SYSTEMS / "powers.obs").read_text())

for rule in anbncn.grammar.rules:
    print(rule)

# Free mode keeps outputs that contain the rejecting marker "!".
free = enumerate_language(anbncn, Bounds(6), FREE)
print("free, 6 steps:", free.words)

# Filtered mode drops every derivation that ever emits "!".
result = enumerate_language(anbncn, Bounds(12), FILTERED)
print("filtered, 12 steps:", result.words, "exhausted:", result.exhausted)
print(result.stats)

# Same grammar, other observer.
print("powers, 6 steps:", enumerate_language(powers, Bounds(6), FILTERED).words)

# A form-length bound cuts branches, so the result is no longer exhaustive.
cut = enumerate_language(anbncn, Bounds(12, max_form_len=3), FILTERED)
print("form length <= 3:", cut.words, "exhausted:", cut.exhausted)
