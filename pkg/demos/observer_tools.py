"""
Compiling, minimizing and linting observers
===========================================
"""

from observing import ObserverSpec, compile_observer, lint_disjointness, observe_sequence

alphabet = "SABCtp"
spec = ObserverSpec([("S", ""), ("A B*", "a"), ("C+ B*", "b"), ("t+ C*", "c")], "!")

t = compile_observer(spec, alphabet)
small = t.minimize()
print(t, small)

for word in ["S", "AB", "CCB", "ttC", "tA", ""]:
    print(repr(word), "->", repr(t(word)), repr(small(word)))

# Observation of a whole derivation is plain catenation; "" contributes nothing.
print(observe_sequence(t, ["S", "A", "C", "t"]))

# Cases that overlap are legal (first match wins) but worth a warning.
shadowed = ObserverSpec([("A B*", "a"), ("A+", "b")], "!")
for warning in lint_disjointness(shadowed, alphabet):
    print(warning)
print(lint_disjointness(spec, alphabet))
