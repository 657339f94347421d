"""
Observing a sticker system
==========================

Sticking single strands onto a start molecule, with an observer that
reads every intermediate molecule.
"""

from pathlib import Path

from observing import FILTERED, Molecule, SingleStrand, classical_language, enumerate_observed, stick
from observing.sticker import LOWER, UPPER, trace
from observing.go import trace_output
from observing.observer import render
from observing.formats import parse_system

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"
phi = parse_system((SYSTEMS / "bmdn_sticker.obs").read_text())
rho = phi.system.rho

m = Molecule("a", "t")
m = stick(rho, m, SingleStrand(UPPER, "a"))
print(m, m.complete, m.well_started(rho))
print(stick(rho, m, SingleStrand(LOWER, "g")))  # mismatch: undefined

dominoes = [SingleStrand(UPPER, "a"), SingleStrand(UPPER, "a"), SingleStrand(LOWER, "t"),
            SingleStrand(UPPER, "c"), SingleStrand(LOWER, "t"), SingleStrand(LOWER, "g")]
rows = trace(phi, dominoes)
for row in rows:
    print(row.step, row.added or "", row.molecule, render(row.emitted))
print("output:", trace_output(rows))

# The classical language collects upper strands of complete molecules.
print(classical_language(phi.system, 4))

words = enumerate_observed(phi, 8, FILTERED).words
print(len(words), "observed words up to 8 steps")
print(words)
