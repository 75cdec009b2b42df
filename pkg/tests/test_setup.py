from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from conftest import explicit_setup, items, word
from pattern_setups import (
    TOP,
    CapExceeded,
    Description,
    ItemsetSpace,
    OmegaSpace,
    PatternSetup,
    SymbolicSet,
    UnknownElement,
    augment_with_top,
    is_extent_system,
    load_fixture,
)

G = frozenset


def sets(*groups):
    return {frozenset(g) for g in groups}


@st.composite
def explicit_cases(draw, max_elements=7, max_objects=4):
    n = draw(st.integers(1, max_elements))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    elements, leq = O.random_order(rng, n)
    k = draw(st.integers(1, max_objects))
    delta = {f"g{i + 1}": rng.choice(elements) for i in range(k)}
    return elements, leq, delta


# extent and cover on the sequence example


def test_ext_of_bb(seq):
    assert seq.ext(word("bb")) == G({"g2", "g4"})
    assert seq.support(word("bb")) == 2


def test_ext_of_empty_itemset(item):
    assert item.ext(items()) == item.all_objects


def test_ext_of_top_is_empty(seq_top):
    assert seq_top.ext(TOP) == G()


def test_cov_of_pair(seq):
    assert {d.value for d in seq.cov({"g2", "g4"})} == {"b", "bb", "c"}


def test_cov_of_non_coverable_pair(seq):
    assert seq.cov({"g3", "g4"}) == G()
    assert seq.cov_star({"g3", "g4"}) == ()


def test_cov_of_empty_set_is_symbolic(seq):
    c = seq.cov(set())
    assert isinstance(c, SymbolicSet) and str(c) == "ALL"
    assert word("aaaaaa") in c
    assert len(seq.cov(set(), restrict=True)) == 14


def test_cov_over_omega_is_symbolic_chain(omega):
    c = omega.cov({"g1", "g2"})
    assert isinstance(c, SymbolicSet)
    assert OmegaSpace.c(12345) in c and OmegaSpace.A not in c


def test_cov_star_of_pair(seq):
    assert [d.value for d in seq.cov_star({"g2", "g4"})] == ["bb", "c"]


def test_cov_star_over_omega_is_empty(omega):
    assert omega.cov_star({"g1", "g2"}) == ()
    assert not omega.has_all_multi_infima({"g1", "g2"})


def test_cov_star_itemsets(item):
    assert item.cov_star({"g1", "g4"}) == (items("b", "c"),)


def test_cov_star_rays(num):
    got = [str(d) for d in num.cov_star({"g2", "g3"})]
    assert got == ["value>=3", "value<=5"]


def test_cov_star_of_empty_set(seq, seq_top, item):
    assert seq.cov_star(set()) == ()
    assert seq_top.cov_star(set()) == (TOP,)
    assert item.cov_star(set()) == (items("a", "b", "c"),)


def test_unknown_objects_rejected(seq):
    with pytest.raises(UnknownElement):
        seq.cov({"g9"})


def test_setup_validation():
    space = ItemsetSpace("ab")
    with pytest.raises(ValueError):
        PatternSetup([], space, {})
    with pytest.raises(UnknownElement):
        PatternSetup(["g1"], space, {})
    with pytest.raises(UnknownElement):
        PatternSetup(["g1"], space, {"g1": items("a"), "g2": items("b")})


def test_subset_cap():
    objs = [f"g{i:02d}" for i in range(21)]
    setup = PatternSetup(objs, ItemsetSpace("a"), {g: items("a") for g in objs})
    with pytest.raises(CapExceeded):
        setup.is_multistructure()
    assert setup.replace(max_objects=0).max_objects == 0


# support-closed descriptions


def test_support_closed_words(seq):
    assert seq.is_support_closed(word("bb"))
    assert seq.is_support_closed(word("c"))
    assert seq.is_support_closed(word("b"))
    assert not seq.is_support_closed(word("cb"))


def test_itemset_b_not_support_closed(item):
    assert not item.is_support_closed(items("b"))
    assert item.is_support_closed(items("b", "c"))


def test_omega_chain_element_not_support_closed(omega):
    assert not omega.is_support_closed(OmegaSpace.c(5))


def test_support_closed_set_itemsets(item):
    assert set(item.support_closed_set()) == {items(), items("a"), items("b", "c"), items("a", "b", "c")}


def test_support_closed_set_omega(omega):
    closed = omega.support_closed_set()
    assert closed == (OmegaSpace.A, OmegaSpace.B)
    assert {omega.ext(d) for d in closed} == sets({"g1"}, {"g2"})
    assert {omega.ext(d) for d in closed} < omega.definable_extents().as_set()


def test_support_closed_single_object():
    setup = PatternSetup(["g1"], ItemsetSpace("ab"), {"g1": items("a")})
    assert setup.support_closed_set() == (items("a"), items("a", "b"))
    words = load_fixture("SEQ").replace(delta={g: word("ab") for g in load_fixture("SEQ").objects})
    assert words.support_closed_set() == (word("ab"),)


def test_support_closed_matches_fragment_brute_force(seq):
    frag = seq.relevant_fragment()
    brute = set()
    for d in frag.elements:
        E = seq.ext(d)
        if not any(seq.ext(e) == E and d != e and seq.space.subsumes(d, e) for e in frag.elements):
            brute.add(d)
    assert set(seq.support_closed_set()) == brute
    assert all(seq.is_support_closed(d) == (d in brute) for d in frag.elements)


# definable extents and approximations


SEQ_EXTENTS = sets((), {"g1"}, {"g2"}, {"g4"}, {"g2", "g4"}, {"g1", "g2", "g3"}, {"g1", "g2", "g4"})


def test_sequence_extents(seq):
    fam = seq.definable_extents()
    assert fam.as_set() == SEQ_EXTENTS
    assert len(fam) == 7
    assert list(fam)[0] == G() and list(fam)[-1] == G({"g1", "g2", "g4"})


def test_itemset_extents(item):
    assert item.definable_extents().as_set() == sets({"g1"}, {"g1", "g4"}, {"g1", "g2", "g3"}, item.objects)


def test_exp_extent_count():
    assert len(load_fixture("EXP", 4).definable_extents()) == 8


def test_omega_extents(omega):
    assert omega.definable_extents().as_set() == sets({"g1"}, {"g2"}, {"g1", "g2"})


def test_extent_provenance(seq):
    fam = seq.definable_extents()
    for E in fam:
        d = fam.provenance[E]
        if d is not None:
            assert seq.ext(d) == E
    assert fam.provenance[G()] is None


def test_upper_approximations(seq):
    assert set(seq.upper_approximations({"g1", "g2"})) == sets({"g1", "g2", "g3"}, {"g1", "g2", "g4"})
    assert seq.upper_approximations({"g2", "g4"}) == (G({"g2", "g4"}),)
    assert seq.upper_approximations({"g3", "g4"}) == ()


def test_smallest_definable_superset(seq, item):
    assert seq.smallest_definable_superset({"g1", "g2"}) == G({"g1", "g2"})
    assert seq.smallest_definable_superset({"g3", "g4"}) == seq.all_objects
    assert item.smallest_definable_superset({"g2"}) == G({"g1", "g2", "g3"})


# implications


def test_pattern_implication(seq):
    assert seq.pattern_implication(word("bb"), word("c"))
    assert not seq.pattern_implication(word("c"), word("bb"))
    for d in seq.relevant_fragment().elements:
        assert seq.pattern_implication(d, d)


def test_equivalence_classes_itemsets(item):
    report = item.implications()
    classes = {E: set(ds) for E, ds in report.equivalence_classes}
    assert classes[G({"g1", "g4"})] == {items("b"), items("c"), items("b", "c")}


def test_implication_report_pairs(seq):
    report = seq.implications([(word("bb"), word("c")), (word("a"), word("bb"))], [({"g2"}, {"g2", "g4"})])
    assert [ok for _, _, ok in report.pattern_verdicts] == [True, False]
    assert report.object_verdicts[0][2] is False


def test_object_implication_agrees_with_cover(seq):
    for A in seq.subsets():
        if not A:
            continue
        for B in seq.subsets():
            if not B:
                continue
            assert seq.object_implication(A, B) == (seq.cov(A) <= seq.cov(B))


# minimal representation and extent systems


def test_minimal_representation_sequence(seq):
    rep = seq.minimal_representation()
    assert rep.delta["g1"].value == "{g1}"
    assert rep.definable_extents().as_set() == SEQ_EXTENTS


def test_minimal_representation_itemsets(item):
    rep = item.minimal_representation()
    assert rep.delta["g2"].value == "{g1,g2,g3}"
    assert rep.definable_extents().as_set() == item.definable_extents().as_set()


def test_minimal_representation_idempotent_on_extents(seq, item, num):
    for s in (seq, item, num):
        rep = s.minimal_representation()
        assert rep.minimal_representation().definable_extents().as_set() == rep.definable_extents().as_set()


def test_extent_system_counterexample():
    family = [{"g1", "g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}, {"g1", "g2", "g3", "g4"}]
    assert not is_extent_system(["g1", "g2", "g3", "g4"], family)


def test_extent_system_of_sequence(seq):
    assert is_extent_system(seq.objects, seq.definable_extents())


def test_extent_system_empty_filter_convention():
    # g1 lies in no member, so its filter intersection is all objects
    assert not is_extent_system(["g1"], [set()])
    assert is_extent_system(["g1"], [set(), {"g1"}])


def test_extent_system_unknown_objects():
    with pytest.raises(UnknownElement):
        is_extent_system(["g1"], [{"g2"}])


def brute_is_extent_system(objects, family):
    """Direct search: the family equals ext[D] for D = (family, ⊇) and some δ."""
    from itertools import product

    family = [frozenset(S) for S in family]
    fam = set(family)
    for choice in product(family, repeat=len(objects)):
        delta = dict(zip(objects, choice))
        if any(g not in delta[g] for g in objects):
            continue
        got = {frozenset(g for g in objects if delta[g] <= S) for S in family}
        if got == fam:
            return True
    return False


def test_extent_system_characterisation_exhaustive():
    objects = ["g1", "g2", "g3"]
    universe = O.powerset(objects)
    rng = random.Random(11)
    for _ in range(150):
        family = {S for S in universe if rng.random() < 0.4}
        if not family:
            continue
        assert is_extent_system(objects, family) == brute_is_extent_system(objects, family), family


# multistructure test


def test_sequence_not_multistructure_without_top(seq):
    report = seq.is_multistructure()
    assert not report.holds and report.witness == G()
    assert report.witnesses == (G(),)


def test_sequence_multistructure_with_top(seq_top):
    assert seq_top.is_multistructure().holds


def test_omega_not_multistructure(omega):
    report = omega.is_multistructure()
    assert not report.holds and report.witness == G({"g1", "g2"})
    top = omega.replace(space=augment_with_top(omega.space)).is_multistructure()
    assert not top.holds and top.witnesses == (G({"g1", "g2"}),)


def test_rays_multistructure(num):
    assert num.is_multistructure().holds


# agreement with the brute-force oracle


@settings(max_examples=60, deadline=None)
@given(explicit_cases())
def test_explicit_setups_match_oracle(case):
    elements, leq, delta = case
    lib = explicit_setup(elements, leq, delta)
    ora = O.ExplicitOracle(elements, leq, delta)

    def vals(ds):
        return {d.value for d in ds}

    for d in elements:
        assert lib.ext(Description("explicit", d)) == ora.ext(d)
    for A in ora.subsets():
        if A:
            assert vals(lib.cov(A)) == ora.cov(A)
        assert vals(lib.cov_star(A)) == ora.cov_star(A)
        assert set(lib.upper_approximations(A)) == ora.upper_approx(A)
    assert lib.definable_extents().as_set() == ora.extents()
    assert vals(lib.support_closed_set()) == ora.support_closed()
    assert lib.is_multistructure().holds == ora.is_multistructure()


@settings(max_examples=60, deadline=None)
@given(explicit_cases())
def test_order_reversal_and_cover_characterisation(case):
    elements, leq, delta = case
    lib = explicit_setup(elements, leq, delta)
    ora = O.ExplicitOracle(elements, leq, delta)
    for c, d in leq:
        assert lib.ext(Description("explicit", d)) <= lib.ext(Description("explicit", c))
    subsets = ora.subsets()
    extents = lib.definable_extents().as_set()
    for A in subsets:
        for B in subsets:
            if A and A <= B:
                assert lib.cov(B) <= lib.cov(A)
        # ext[cov(A)] = ↑A ∩ P_ext
        assert {ora.ext(d) for d in ora.cov(A)} == {E for E in extents if A <= E}


@settings(max_examples=60, deadline=None)
@given(explicit_cases())
def test_multistructure_theorems(case):
    elements, leq, delta = case
    lib = explicit_setup(elements, leq, delta)
    assert lib.is_multistructure().holds
    for A in lib.subsets():
        ext_star = {lib.ext(d) for d in lib.cov_star(A)}
        minimal = {E for E in ext_star if not any(F < E for F in ext_star)}
        assert set(lib.upper_approximations(A)) == minimal
    assert lib.definable_extents().as_set() == {lib.ext(d) for d in lib.support_closed_set()}


@settings(max_examples=60, deadline=None)
@given(explicit_cases())
def test_representation_and_extent_system(case):
    elements, leq, delta = case
    lib = explicit_setup(elements, leq, delta)
    extents = lib.definable_extents()
    assert is_extent_system(lib.objects, extents)
    assert lib.minimal_representation().definable_extents().as_set() == extents.as_set()


def test_interval_grid_from_rationals():
    from pattern_setups import IntervalSpace

    space = IntervalSpace(["1/2", 2])
    setup = PatternSetup(["g1", "g2"], space, {"g1": space.interval("1/2"), "g2": space.interval(2)})
    assert setup.meet({"g1", "g2"}).value == (Fraction(1, 2), Fraction(2))
    assert setup.definable_extents().as_set() == sets((), {"g1"}, {"g2"}, {"g1", "g2"})
