"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]`` or ``[FAIL]`` line.  Run with
``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import oracles as O  # noqa: E402
from pattern_setups import (  # noqa: E402
    Description,
    ExplicitSpace,
    OmegaSpace,
    PatternSetup,
    antichain_completion_of_setup,
    antichain_leq,
    augment_with_top,
    build_poset,
    classify,
    completion_iff_theorem,
    concept_lattice,
    direct_completion,
    intersection_closure,
    is_extent_system,
    is_pattern_structure,
    load_fixture,
)
from pattern_setups.structure import closure  # noqa: E402

G = frozenset


def sets(*groups):
    return {frozenset(g) for g in groups}


def words(ds):
    return {d.value for d in ds}


@contextmanager
def criterion(capsys, tag, text):
    start = time.perf_counter()
    info = {}
    try:
        yield info
    except BaseException as exc:
        line = f"[FAIL] {tag} {text}: {type(exc).__name__}: {exc}"
        _emit(capsys, line)
        raise
    elapsed = time.perf_counter() - start
    extra = f" ({info['note']})" if "note" in info else ""
    _emit(capsys, f"[PASS] {tag} {text}{extra} [{elapsed:.2f} s]")


def _emit(capsys, line):
    if capsys is None:
        print(line)
        return
    with capsys.disabled():
        print("\n" + line)


def test_c1_sequence_cover(capsys):
    with criterion(capsys, "C1", "SEQ ext(bb), cov({g2,g4}), cov*({g2,g4}) exact, < 1 s") as info:
        start = time.perf_counter()
        seq = load_fixture("SEQ")
        e = seq.ext(Description("word", "bb"))
        c = words(seq.cov({"g2", "g4"}))
        s = [d.value for d in seq.cov_star({"g2", "g4"})]
        elapsed = time.perf_counter() - start
        assert e == G({"g2", "g4"})
        assert c == {"b", "bb", "c"}
        assert s == ["bb", "c"]
        assert elapsed < 1.0
        info["note"] = f"{elapsed * 1000:.1f} ms"


def test_c2_sequence_extents(capsys):
    with criterion(capsys, "C2", "SEQ definable extents and upper approximations exact"):
        seq = load_fixture("SEQ")
        assert seq.definable_extents().as_set() == sets(
            (), {"g1"}, {"g2"}, {"g4"}, {"g2", "g4"}, {"g1", "g2", "g3"}, {"g1", "g2", "g4"}
        )
        assert set(seq.upper_approximations({"g1", "g2"})) == sets({"g1", "g2", "g3"}, {"g1", "g2", "g4"})
        assert seq.upper_approximations({"g3", "g4"}) == ()


def test_c3_itemset_concepts(capsys):
    with criterion(capsys, "C3", "ITEM concept lattice has the 4 expected concepts"):
        item = load_fixture("ITEM")
        got = sorted((tuple(sorted(c.extent)), tuple(sorted(c.intent.value))) for c in concept_lattice(item).concepts)
        assert got == sorted(
            [
                (("g1",), ("a", "b", "c")),
                (("g1", "g2", "g3"), ("a",)),
                (("g1", "g4"), ("b", "c")),
                (("g1", "g2", "g3", "g4"), ()),
            ]
        )


def test_c4_iff_theorem_on_sequences(capsys):
    with criterion(capsys, "C4", "SEQ(+TOP) iff report, 9 concepts; without TOP both false at A = {}"):
        seq = load_fixture("SEQ")
        top = seq.replace(space=augment_with_top(seq.space))
        report = completion_iff_theorem(top)
        assert report.is_multistructure and report.completion_is_structure and report.extents_match
        lattice = concept_lattice(antichain_completion_of_setup(top))
        assert len(lattice) == 9
        assert words(lattice.find({"g1", "g2"}).intent.value) == {"a", "b", "c"}
        assert lattice.find(top.objects).intent.value == G()
        plain = completion_iff_theorem(seq)
        assert not plain.is_multistructure and not plain.completion_is_structure
        assert plain.multistructure_witnesses[0] == G() and plain.structure_witnesses[0] == G()


def test_c5_exponential_completion(capsys):
    with criterion(capsys, "C5", "EXP(n), n = 3, 4, 5: 2n base and 2^n completed extents; n = 5 < 5 s") as info:
        timings = {}
        for n in (3, 4, 5):
            start = time.perf_counter()
            exp = load_fixture("EXP", n)
            base = len(exp.definable_extents())
            done = len(antichain_completion_of_setup(exp).definable_extents())
            timings[n] = time.perf_counter() - start
            assert (base, done) == (2 * n, 2**n), (n, base, done)
        assert timings[5] < 5.0
        info["note"] = f"n=5 in {timings[5]:.2f} s"


def test_c6_omega(capsys):
    with criterion(capsys, "C6", "OMEGA cov*({g1,g2}) = {}, D* = {a,b}, ext[D*] proper, not a multistructure"):
        omega = load_fixture("OMEGA")
        assert omega.cov_star({"g1", "g2"}) == ()
        closed = omega.support_closed_set()
        assert set(closed) == {OmegaSpace.A, OmegaSpace.B}
        star_extents = {omega.ext(d) for d in closed}
        assert star_extents == sets({"g1"}, {"g2"})
        assert star_extents < omega.definable_extents().as_set()
        assert not omega.is_multistructure().holds


def _random_case(rng):
    n = rng.randint(1, 8)
    elements, leq = O.random_order(rng, n)
    k = rng.randint(1, 4)
    delta = {f"g{i + 1}": rng.choice(elements) for i in range(k)}
    return elements, leq, delta


def _check_properties(elements, leq, delta):
    p = build_poset(elements, leq)
    space = ExplicitSpace(p)
    setup = PatternSetup(sorted(delta), space, {g: Description("explicit", d) for g, d in delta.items()})
    ora = O.ExplicitOracle(elements, leq, delta)
    E = {x: Description("explicit", x) for x in elements}
    subsets_D = O.powerset(elements)
    subsets_G = ora.subsets()
    extents = setup.definable_extents().as_set()
    assert extents == ora.extents()

    # order reversal of ext and cov
    for c, d in leq:
        assert setup.ext(E[d]) <= setup.ext(E[c])
    covs = {A: {x.value for x in setup.cov(A, restrict=not A)} for A in subsets_G}
    for A in subsets_G:
        if A:
            assert covs[A] == ora.cov(A)
        for B in subsets_G:
            if A and A <= B:
                assert covs[B] <= covs[A]
        # ext[cov(A)] = ↑A ∩ P_ext, with cov(∅) = D
        cov_A = covs[A] if A else set(elements)
        assert {setup.ext(E[x]) for x in cov_A} == {X for X in extents if A <= X}

    # poset laws
    for S in subsets_D:
        d, u = set(p.down_closure(S)), set(p.up_closure(S))
        assert set(p.minimal_elements(u)) == set(p.minimal_elements(S)) == O.minimal(leq, S)
        assert S <= d and set(p.down_closure(d)) == d
        assert S <= u and set(p.up_closure(u)) == u
        if O.is_antichain(leq, S):
            assert set(p.maximal_elements(p.down_closure(S))) == set(S)

    # ext∘int is a closure operator on pattern structures
    structure = is_pattern_structure(setup).holds
    if structure:
        cl = {A: closure(setup, A) for A in subsets_G}
        for A in subsets_G:
            assert A <= cl[A] and cl[cl[A]] == cl[A]
            for B in subsets_G:
                if A <= B:
                    assert cl[A] <= cl[B]

    # multistructure theorems
    if setup.is_multistructure().holds:
        for A in subsets_G:
            star = {setup.ext(x) for x in setup.cov_star(A)}
            assert set(setup.upper_approximations(A)) == {X for X in star if not any(Y < X for Y in star)}
        assert extents == {setup.ext(x) for x in setup.support_closed_set()}

    # representation and extent systems
    assert setup.minimal_representation().definable_extents().as_set() == extents
    assert is_extent_system(setup.objects, extents)

    # completions
    generated = O.all_intersections(ora.G, extents)
    assert intersection_closure(setup.objects, extents) == generated
    assert antichain_completion_of_setup(setup).definable_extents().as_set() == generated
    assert direct_completion(setup).definable_extents().as_set() == generated
    return structure


def test_c7_property_suite(capsys):
    with criterion(capsys, "C7", "property suite on >= 200 random posets (<= 8 elements, <= 4 objects), < 60 s") as info:
        rng = random.Random(7_2024)
        start = time.perf_counter()
        count = structures = 0
        for _ in range(240):
            structures += _check_properties(*_random_case(rng))
            count += 1
        elapsed = time.perf_counter() - start
        assert count >= 200 and elapsed < 60.0
        info["note"] = f"{count} cases ({structures} pattern structures), 0 violations"


def test_c8_negative_cases(capsys):
    with criterion(capsys, "C8", "extent-system counterexamples, preorder witness, NUM rays cov*"):
        for n in range(4, 8):
            objs = [f"g{i}" for i in range(1, n + 1)]
            family = [{"g1", f"g{i}"} for i in range(2, n)] + [set(objs[:-1]), set(objs)]
            assert not is_extent_system(objs, family), n
        assert not is_extent_system(
            ["g1", "g2", "g3", "g4"], [{"g1", "g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}, {"g1", "g2", "g3", "g4"}]
        )
        chain = build_poset(["a", "b"], [("a", "b")])
        assert antichain_leq(chain, {"a", "b"}, {"b"}) and antichain_leq(chain, {"b"}, {"a", "b"})
        num = load_fixture("NUM")
        assert [str(d) for d in num.cov_star({"g2", "g3"})] == ["value>=3", "value<=5"]


def test_c9_theorem_sweep(capsys):
    with criterion(capsys, "C9", "every poset |D| <= 5, every delta: {g1,g2} -> D, structure iff top and pair meet") as info:
        posets = 0
        checked = 0
        for n in range(1, 6):
            for elements, leq in O.naturally_labelled_orders(n):
                posets += 1
                space = ExplicitSpace(build_poset(elements, leq))
                has_top = O.has_top(elements, leq)
                verdicts = []
                for x in elements:
                    for y in elements:
                        delta = {"g1": Description("explicit", x), "g2": Description("explicit", y)}
                        ok = is_pattern_structure(PatternSetup(["g1", "g2"], space, delta)).holds
                        meet = O.maximum(leq, O.lower_bounds(elements, leq, {x, y}))
                        assert ok == (has_top and meet is not None), (elements, leq, x, y)
                        verdicts.append(ok)
                        checked += 1
                r = classify(space.poset)
                assert all(verdicts) == (r.has_top and r.is_meet_semilattice)
        info["note"] = f"{posets} posets, {checked} setups, 0 violations"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
