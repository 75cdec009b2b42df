from __future__ import annotations

import random

import pytest

from pattern_setups import (
    Description,
    ExplicitSpace,
    PatternSetup,
    augment_with_top,
    build_poset,
    load_fixture,
)


def word(w: str) -> Description:
    return Description("word", w)


def items(*xs: str) -> Description:
    return Description("itemset", frozenset(xs))


def explicit_setup(elements, leq, delta) -> PatternSetup:
    """Library setup over an explicit poset given as oracle-style pairs."""
    space = ExplicitSpace(build_poset(elements, leq))
    return PatternSetup(sorted(delta), space, {g: Description("explicit", d) for g, d in delta.items()})


def powerset_poset(atoms="abc"):
    from oracles import powerset

    subsets = powerset(atoms)
    ids = {S: "{" + ",".join(sorted(S)) + "}" for S in subsets}
    pairs = [(ids[A], ids[B]) for A in subsets for B in subsets if A <= B]
    return build_poset(ids.values(), pairs), ids


@pytest.fixture
def seq():
    return load_fixture("SEQ")


@pytest.fixture
def seq_top(seq):
    return seq.replace(space=augment_with_top(seq.space))


@pytest.fixture
def item():
    return load_fixture("ITEM")


@pytest.fixture
def num():
    return load_fixture("NUM")


@pytest.fixture
def interval():
    return load_fixture("INTERVAL")


@pytest.fixture
def omega():
    return load_fixture("OMEGA")


@pytest.fixture
def abba():
    return load_fixture("ABBA")


@pytest.fixture
def rng():
    return random.Random(20240607)
