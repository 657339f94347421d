import random

import pytest
from hypothesis import given, strategies as st

from observing import (AlphabetError, BoundsError, Complementarity, FILTERED, FREE, Molecule,
                       ReplayError, SingleStrand, StickerError, StickerSystem, classical_language,
                       enumerate_observed, stick, tokenize)
from observing.sticker import LOWER, UPPER, detokenize, member, trace

from oracles import naive_stick

RHO = Complementarity([("a", "t"), ("c", "g")], "acgt")


def M(upper, lower):
    return Molecule(tuple(upper), tuple(lower))


def test_rho_is_symmetric():
    assert ("t", "a") in RHO and ("g", "c") in RHO and ("a", "g") not in RHO
    with pytest.raises(AlphabetError):
        Complementarity([("a", "x")], "acgt")


def test_double_alphabet():
    vd = RHO.double_alphabet()
    assert len(vd) == 4 + 4 + 4
    assert {"[a/t]", "[t/a]", "[c/-]", "[-/g]"} <= vd


def test_stick_table_step_one():
    assert stick(RHO, M("a", "t"), SingleStrand(UPPER, "a")) == M("aa", "t")


def test_stick_undefined():
    assert stick(RHO, M("aaac", "tt"), SingleStrand(LOWER, "g")) is None


def test_stick_completes():
    result = stick(RHO, M("aaac", "ttt"), SingleStrand(LOWER, "g"))
    assert result == M("aaac", "tttg") and result.complete


def test_stick_input_validation():
    with pytest.raises(AlphabetError):
        stick(RHO, M("a", "t"), SingleStrand(UPPER, "x"))
    with pytest.raises(StickerError):
        stick(RHO, M("a", "g"), SingleStrand(UPPER, "a"))
    with pytest.raises(StickerError):
        SingleStrand(UPPER, "")


def test_tokenize():
    assert tokenize(M("aaac", "ttt")) == ("[a/t]", "[a/t]", "[a/t]", "[c/-]")
    assert tokenize(M("a", "t")) == ("[a/t]",)
    assert tokenize(M("a", "tta")) == ("[a/t]", "[-/t]", "[-/a]")


def test_single_strand_molecule_is_well_started():
    assert M("", "tt").well_started(RHO)
    assert M("", "").complete


def test_axioms_must_be_well_started():
    with pytest.raises(StickerError):
        StickerSystem(RHO, [M("a", "a")], [])


def test_language_with_zero_steps(phi):
    assert enumerate_observed(phi, 0).words == ("b",)


def test_table_word_is_generated(phi):
    assert "bbbbdd" in enumerate_observed(phi, 6, FILTERED).words


def test_negative_bound(phi):
    with pytest.raises(BoundsError):
        enumerate_observed(phi, -1)


def test_classical_language(phi):
    gamma = phi.system
    assert classical_language(gamma, 0) == ("a",)
    # Values from the brute-force walk over every sticking sequence.
    assert classical_language(gamma, 2) == ("a", "aa", "ac")
    assert {"aaa", "aac"} <= set(classical_language(gamma, 4))
    for bound in range(7):
        assert all(set(w) <= {"a", "c"} for w in classical_language(gamma, bound))


def test_trace_table(phi):
    dominoes = [SingleStrand(UPPER, "a"), SingleStrand(UPPER, "a"), SingleStrand(LOWER, "t"),
                SingleStrand(UPPER, "c"), SingleStrand(LOWER, "t"), SingleStrand(LOWER, "g")]
    rows = trace(phi, dominoes)
    assert [r.emitted for r in rows] == ["b", "b", "b", "b", "d", "d", ""]
    assert [str(r.molecule) for r in rows] == [
        "a/t", "aa/t", "aaa/t", "aaa/tt", "aaac/tt", "aaac/ttt", "aaac/tttg"]


def test_trace_rejects_invalid_step(phi):
    with pytest.raises(ReplayError, match="step 2"):
        trace(phi, [SingleStrand(UPPER, "c"), SingleStrand(LOWER, "t")])


def test_member(phi):
    result = member(phi, "bbbbdd", 8)
    axiom, dominoes = result.witness
    rows = trace(phi, dominoes, axiom)
    assert "".join(r.emitted for r in rows) == "bbbbdd"
    assert rows[-1].molecule.complete
    assert not member(phi, "bdd", 8)


def test_even_powers_of_b_are_not_observed(phi):
    # Complete marker-free molecules a^k/t^k are observed as b^(2k-1).
    words = enumerate_observed(phi, 8, FREE).words
    assert "bb" not in words and "bbbb" not in words and "bbb" in words


strands = st.text("acgt", max_size=5)


@st.composite
def well_started(draw):
    core = draw(st.text("acgt", max_size=5))
    comp = {"a": "t", "t": "a", "c": "g", "g": "c"}
    lower = "".join(comp[x] for x in core)
    overhang = draw(st.text("acgt", max_size=4))
    if draw(st.booleans()):
        return M(core + overhang, lower)
    return M(core, lower + overhang)


@given(well_started(), st.sampled_from([UPPER, LOWER]), st.text("acgt", min_size=1, max_size=3))
def test_stick_preserves_invariant(m, side, content):
    result = stick(RHO, m, SingleStrand(side, content))
    naive = naive_stick({("a", "t"), ("c", "g")}, m.upper, m.lower, side, tuple(content))
    if naive is None:
        assert result is None
    else:
        assert result == Molecule(*naive) and result.well_started(RHO)


@given(well_started())
def test_tokenize_round_trip(m):
    assert detokenize(tokenize(m)) == m
    assert len(tokenize(m)) == len(m)


def test_randomized_filter_equivalence():
    from observing import ObservableStickerSystem, ObserverSpec, compile_observer
    from oracles import random_spec, sigma_star
    rng = random.Random(7)
    gamma = StickerSystem(RHO, [M("a", "t"), M("c", "")],
                          [SingleStrand(UPPER, "a"), SingleStrand(LOWER, "t"),
                           SingleStrand(LOWER, "g"), SingleStrand(UPPER, "ca")])
    vd = RHO.double_alphabet()
    for _ in range(5):
        spec = random_spec(rng, vd)
        phi = ObservableStickerSystem(gamma, compile_observer(spec, vd), spec)
        free = enumerate_observed(phi, 5, FREE).words
        assert set(enumerate_observed(phi, 5, FILTERED).words) == sigma_star(free)
