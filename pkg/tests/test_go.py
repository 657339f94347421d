import pytest

from observing import (AlphabetError, Bounds, BoundsError, FILTERED, FREE, GOSystem, Grammar,
                       ObserverSpec, ReplayError, RuleApplication, compile_observer,
                       enumerate_language, member, trace)
from observing.go import derivation_text, trace_output
from observing.grammar import replay
from observing.observer import BOTTOM, observe_sequence

from oracles import go_paths, random_go_systems, sigma_star


def R(rule, pos):
    return RuleApplication(rule, pos)


def test_example_language_slice(sys_a2):
    # Generating a^n b^n c^n takes exactly 3n steps, so 12 steps give n <= 4.
    result = enumerate_language(sys_a2, Bounds(12), FILTERED)
    assert result.words == ("abc", "aabbcc", "aaabbbccc", "aaaabbbbcccc")
    assert result.exhausted


def test_observer_swap(sys_a1):
    # A k-step terminating derivation is observed as a^(k+1).
    result = enumerate_language(sys_a1, Bounds(6), FILTERED)
    assert result.words == tuple("a" * i for i in range(2, 8))


def test_too_few_steps(sys_a2):
    assert enumerate_language(sys_a2, Bounds(2), FILTERED).words == ()


def test_bounds_validation(sys_a2):
    with pytest.raises(BoundsError):
        enumerate_language(sys_a2, Bounds(0))
    with pytest.raises(BoundsError):
        enumerate_language(sys_a2, Bounds(3, max_form_len=0))


def test_alphabet_mismatch(G):
    other = compile_observer(ObserverSpec([], "x"), {"S", "A"})
    with pytest.raises(AlphabetError):
        GOSystem(G, other)


def test_member_witness(sys_a2, G):
    result = member(sys_a2, "aabbcc", Bounds(12))
    assert result
    forms = replay(G, result.witness)
    assert ["".join(f) for f in forms] == ["S", "A", "AB", "CB", "CC", "tC", "tt"]
    assert observe_sequence(sys_a2.observer, forms) == "aabbcc"


def test_member_not_found(sys_a2, sys_a1):
    assert not member(sys_a2, "aabbc", Bounds(20))
    assert not member(sys_a1, "a", Bounds(10))


def test_member_rejects_foreign_letter(sys_a2):
    with pytest.raises(AlphabetError):
        member(sys_a2, "abz", Bounds(5))


def test_member_shortest_witness(sys_a2):
    result = member(sys_a2, "abc", Bounds(6))
    assert derivation_text(sys_a2, result.witness) == "S=>A=>C=>t"


def test_trace(sys_a2):
    rows = trace(sys_a2, [R(2, 0), R(4, 0), R(6, 0)])
    assert [r.emitted for r in rows] == ["", "a", "b", "c"]
    assert trace_output(rows) == "abc"
    assert rows[0].applied is None and rows[0].form == ("S",)


def test_trace_empty(sys_a2):
    rows = trace(sys_a2, [])
    assert len(rows) == 1 and rows[0].step == 0 and rows[0].emitted == ""


def test_trace_bottom(sys_a2):
    rows = trace(sys_a2, [R(0, 0)])
    assert [r.emitted for r in rows] == ["", BOTTOM]


def test_trace_invalid(sys_a2):
    with pytest.raises(ReplayError, match="step 1"):
        trace(sys_a2, [R(3, 0)])


def test_free_contains_bottom_words(sys_a2):
    free = enumerate_language(sys_a2, Bounds(6), FREE)
    assert any(BOTTOM in w for w in free.words)
    assert set(enumerate_language(sys_a2, Bounds(6), FILTERED).words) == sigma_star(free.words)


def test_monotone_in_steps(sys_a1, sys_a2):
    for system in (sys_a1, sys_a2):
        previous = set()
        for steps in range(1, 9):
            words = set(enumerate_language(system, Bounds(steps), FREE).words)
            assert previous <= words
            previous = words


def test_nonterminal_diagnostic_grows(sys_a2):
    seen = [enumerate_language(sys_a2, Bounds(n), FREE).stats["max_nonterminals_seen"]
            for n in (2, 4, 8)]
    assert seen[0] < seen[1] < seen[2]


def test_output_bound_clears_exhausted(sys_a1):
    capped = enumerate_language(sys_a1, Bounds(6, max_output_len=4), FILTERED)
    assert capped.words == ("aa", "aaa", "aaaa")
    assert not capped.exhausted


def test_form_bound_with_erasing_rules():
    g = Grammar("SX", "a", "S", [("S", "XXa"), ("X", "")])
    spec = ObserverSpec([], "x")
    system = GOSystem(g, compile_observer(spec, g.alphabet))
    full = enumerate_language(system, Bounds(4), FREE)
    cut = enumerate_language(system, Bounds(4, max_form_len=2), FREE)
    assert full.words == ("xxxx",) and full.exhausted
    assert cut.words == () and not cut.exhausted


@pytest.mark.parametrize("system", random_go_systems(8, seed=11), ids=lambda s: str(s.grammar.rules))
def test_random_systems_match_naive(system):
    for mode in (FREE, FILTERED):
        got = set(enumerate_language(system, Bounds(5, max_form_len=4), mode).words)
        naive = go_paths(system.grammar, system.observer, 5, 4)
        assert got == (naive if mode == FREE else sigma_star(naive))


@pytest.mark.parametrize("system", random_go_systems(6, seed=5), ids=lambda s: str(s.grammar.rules))
def test_random_member_witnesses_replay(system):
    words = enumerate_language(system, Bounds(5, max_form_len=5), FILTERED).words
    for word in words[:5]:
        result = member(system, word, Bounds(5, max_form_len=5))
        assert result
        forms = replay(system.grammar, result.witness)
        assert all(s in system.grammar.terminals for s in forms[-1])
        assert observe_sequence(system.observer, forms) == word
