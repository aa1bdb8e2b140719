import pytest

from catx.charcalc import (
    Decomposition,
    FormalCharacter,
    ModuleCharacter,
    TwistedCharacter,
    Weight,
    canonical_twist,
    costandard_character,
    decompose_character,
    induced_character,
    order_axiom_records,
    simple_character,
    simple_coset_reps,
    simple_label_lt,
    successive_weight_diagnostic,
    verify_filtration,
    weight_lt,
    weight_universe,
)
from catx.errors import InputError
from catx.rootsystem import build_root_system
from catx.weyl import WeylElement, element_from_word


def theta_for(rs, itheta):
    return FormalCharacter("theta", frozenset(itheta))


def words(char: ModuleCharacter) -> set[tuple[int, ...]]:
    return {w.v.word for w in char.weights()}


def test_twisted_character_canonicalization():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    s1 = WeylElement.simple_reflection(rs, 1)
    tc = TwistedCharacter.of(th, s1)
    assert tc.coset_rep.is_identity
    assert tc.is_untwisted
    with pytest.raises(InputError):
        TwistedCharacter(th, s1)
    # partial stabilizer: s2 survives canonicalization when 2 not in itheta
    th1 = theta_for(rs, [1])
    s2 = WeylElement.simple_reflection(rs, 2)
    assert TwistedCharacter.of(th1, s2).coset_rep == s2


def test_canonical_twist_composes_on_the_left():
    rs = build_root_system("B2")
    th = theta_for(rs, [1])
    s2 = WeylElement.simple_reflection(rs, 2)
    s1 = WeylElement.simple_reflection(rs, 1)
    tc = TwistedCharacter.of(th, s2)
    assert canonical_twist(tc, s1) == TwistedCharacter.of(th, s1 * s2)


def test_input_validation():
    rs = build_root_system("A2")
    bad = FormalCharacter("theta", frozenset([5]))
    with pytest.raises(InputError):
        induced_character(rs, bad, [])
    th = theta_for(rs, [1])
    with pytest.raises(InputError):
        induced_character(rs, th, [2])
    with pytest.raises(InputError):
        costandard_character(rs, th, [1], jprime_convention="bogus")
    with pytest.raises(InputError):
        ModuleCharacter([(None, 0)])


def test_a2_characters_explicit():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    m = induced_character(rs, th, [1])
    e = simple_character(rs, th, [1])
    n = costandard_character(rs, th, [1])
    assert words(m) == {(1,), (1, 2), (1, 2, 1)}
    assert words(e) == {(1,), (1, 2)}
    assert words(n) == {(), (1,), (1, 2)}
    for char in (m, e, n):
        assert all(w.tchar.is_untwisted for w in char.weights())
        assert all(mult == 1 for _, mult in char.items())
    # simple at the empty set is the single untwisted weight
    e0 = simple_character(rs, th, [])
    assert words(e0) == {()}


def test_character_sizes():
    rs = build_root_system("B2")
    th = theta_for(rs, [1, 2])
    # induced: one weight per coset rep of W_J
    assert induced_character(rs, th, []).total() == 8
    assert induced_character(rs, th, [1]).total() == 4
    assert induced_character(rs, th, [1, 2]).total() == 1
    # costandard at the full set matches induced at the empty set
    assert costandard_character(rs, th, [1, 2]) == induced_character(rs, th, [])
    # costandard at the empty set matches the simple there
    assert costandard_character(rs, th, []) == simple_character(rs, th, [])


def test_sanity_identities_across_types():
    for name in ("A2", "B2", "G2", "A3"):
        rs = build_root_system(name)
        for itheta in ([1], [2], list(rs.simple_indices)):
            th = theta_for(rs, itheta)
            assert costandard_character(rs, th, itheta) == induced_character(rs, th, [])
            assert costandard_character(rs, th, []) == simple_character(rs, th, [])
            # simple weights embed in the costandard ones
            for j in ([], [itheta[0]], itheta):
                e = simple_character(rs, th, j)
                n = costandard_character(rs, th, j)
                for w, mult in e.items():
                    assert n.get(w) >= mult


def test_simple_coset_reps_b2():
    rs = build_root_system("B2")
    th = theta_for(rs, [1, 2])
    # J = itheta: every minimal rep of W_J is the identity, kept
    assert len(simple_coset_reps(rs, th, [1, 2])) == 1
    # J = {} with full itheta: only the identity survives
    assert len(simple_coset_reps(rs, th, [])) == 1
    # descents outside itheta are allowed, so every rep survives here
    th1 = theta_for(rs, [1])
    assert len(simple_coset_reps(rs, th1, [1])) == 4


def test_weight_lt_basic_relations():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    e = WeylElement.identity(rs)
    s1 = element_from_word(rs, [1])
    w0 = element_from_word(rs, [1, 2, 1])
    top = Weight(TwistedCharacter.of(th, e), e)
    mid = Weight(TwistedCharacter.of(th, e), s1)
    low = Weight(TwistedCharacter.of(th, e), w0)
    assert weight_lt(mid, top)
    assert weight_lt(low, top)
    assert weight_lt(low, mid)
    assert not weight_lt(top, mid)
    assert not weight_lt(top, top)
    # different labels never compare
    other = FormalCharacter("eta", frozenset([1, 2]))
    assert not weight_lt(Weight(TwistedCharacter.of(other, e), s1), top)


def test_decompose_costandard_and_induced():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    dec = decompose_character(rs, costandard_character(rs, th, [1]))
    assert dec.ok
    assert dec.factors == {(th, frozenset()): 1, (th, frozenset({1})): 1}
    dec_m = decompose_character(rs, induced_character(rs, th, [1]))
    assert dec_m.ok
    assert dec_m.factors == {
        (th, frozenset({1})): 1,
        (th, frozenset({1, 2})): 1,
    }
    # the regular character decomposes into every simple once
    dec_r = decompose_character(rs, induced_character(rs, th, []))
    assert dec_r.ok
    assert dec_r.factors == {
        (th, frozenset()): 1,
        (th, frozenset({1})): 1,
        (th, frozenset({2})): 1,
        (th, frozenset({1, 2})): 1,
    }


def test_decompose_tie_break_agreement():
    rs = build_root_system("B2")
    th = theta_for(rs, [1, 2])
    char = ModuleCharacter.sum(
        [induced_character(rs, th, []), costandard_character(rs, th, [1])]
    )
    results = [decompose_character(rs, char, tie_break=t) for t in (0, 1, 2)]
    assert all(r.ok for r in results)
    assert results[0].factors == results[1].factors == results[2].factors
    with pytest.raises(InputError):
        decompose_character(rs, char, tie_break=3)


def test_decompose_reports_missing_weights():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    s1 = element_from_word(rs, [1])
    partial = ModuleCharacter({Weight(TwistedCharacter.of(th, WeylElement.identity(rs)), s1): 1})
    dec = decompose_character(rs, partial)
    assert not dec.ok
    assert dec.diagnostic is not None
    assert dec.remainder.total() == 1
    # a character with no longest-element-shaped weight stops immediately
    twisted = ModuleCharacter(
        {Weight(TwistedCharacter.of(theta_for(rs, [1]), element_from_word(rs, [2])), s1): 1}
    )
    dec2 = decompose_character(rs, twisted)
    assert not dec2.ok and "no maximal weight" in dec2.diagnostic


def test_decompose_empty_character():
    rs = build_root_system("A2")
    dec = decompose_character(rs, ModuleCharacter())
    assert dec.ok and dec.factors == {}


def test_simple_label_lt():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    assert simple_label_lt((th, [1, 2]), (th, [1]))
    assert not simple_label_lt((th, [1]), (th, [1, 2]))
    assert not simple_label_lt((th, [1]), (th, [1]))
    other = FormalCharacter("eta", frozenset([1, 2]))
    assert not simple_label_lt((th, [1, 2]), (other, [1]))


def test_verify_filtration_passes_rank2():
    for name in ("A2", "B2", "G2"):
        rs = build_root_system(name)
        for itheta in ([], [1], [2], [1, 2]):
            th = theta_for(rs, itheta)
            records = verify_filtration(rs, th)
            assert len(records) == 4 * (2 ** len(itheta))
            assert all(r["passed"] for r in records), (name, itheta)
            assert {r["check"] for r in records} == {
                "filtration-multiset",
                "filtration-counting",
                "costandard-decomposition",
                "projective-pattern",
            }


def test_verify_filtration_passes_rank3():
    for name in ("A3", "B3", "C3"):
        rs = build_root_system(name)
        th = theta_for(rs, [1, 2, 3])
        records = verify_filtration(rs, th)
        assert all(r["passed"] for r in records), name


def test_rejected_jprime_convention_fails():
    rs = build_root_system("A2")
    th = theta_for(rs, [1])
    records = verify_filtration(rs, th, jprime_convention="i-minus-j")
    assert any(not r["passed"] for r in records)
    # the conventions coincide when itheta is everything
    full = theta_for(rs, [1, 2])
    records_full = verify_filtration(rs, full, jprime_convention="i-minus-j")
    assert all(r["passed"] for r in records_full)


def test_order_axiom_records():
    rs = build_root_system("B2")
    th = theta_for(rs, [1, 2])
    records = order_axiom_records(rs, th)
    assert [r["check"] for r in records] == ["order-irreflexive", "order-transitive"]
    assert all(r["passed"] for r in records)
    assert records[1]["params"]["mode"] == "exhaustive"
    rs3 = build_root_system("A3")
    th3 = theta_for(rs3, [1, 2, 3])
    records3 = order_axiom_records(rs3, th3, seed=7, sample_triples=500)
    assert all(r["passed"] for r in records3)
    assert records3[1]["params"]["mode"].startswith("sampled(500)")
    assert records3[1]["params"]["triples_checked"] >= 500


def test_weight_universe():
    rs = build_root_system("A2")
    th = theta_for(rs, [1, 2])
    uni = weight_universe(rs, th)
    # full itheta: every group element appears as a second component
    assert len(uni) == 6
    assert len(set(uni)) == 6


def test_successive_weight_diagnostic_shape():
    rs = build_root_system("B2")
    th = theta_for(rs, [1, 2])
    out = successive_weight_diagnostic(rs, th, [1, 2])
    assert set(out) == {
        "type",
        "itheta",
        "j",
        "triples",
        "hits_right_product",
        "hits_left_product",
    }
    assert 0 <= out["hits_right_product"] <= out["triples"]
    assert 0 <= out["hits_left_product"] <= out["triples"]


def test_decomposition_ok_property():
    d = Decomposition()
    assert d.ok
    d.diagnostic = "stopped"
    assert not d.ok
