"""
Membership witnesses and derivation traces
==========================================
"""

from pathlib import Path

from observing import Bounds, member
from observing.go import derivation_text, trace, trace_output
from observing.observer import render
from observing.formats import parse_system

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"
system = parse_system((SYSTEMS / "anbncn.obs").read_text())

found = member(system, "aabbcc", Bounds(10))
print(bool(found), [str(app) for app in found.witness])
print(derivation_text(system, found.witness))

for row in trace(system, found.witness):
    print(row.step, row.form, row.applied, render(row.emitted))
print("output:", trace_output(trace(system, found.witness)))

# Not found within the bound is a falsy result, not an exception.
print(bool(member(system, "aabbc", Bounds(12))))
