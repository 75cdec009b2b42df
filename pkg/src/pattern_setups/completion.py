"""Completions of posets and of pattern setups.

* the antichain completion of a finite poset, ordered by A ≦ B iff ↓A ⊆ ↓B;
* the antichain completion of a setup, whose descriptions are antichains;
* the direct completion, whose descriptions are down-closed sets;
* the Dedekind-MacNeille completion of a finite poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .descspace import (
    Description,
    DescriptionSpace,
    SpaceCaps,
    augment_with_top,
    sort_key,
)
from .errors import InfiniteIdeal, ParseError, UndefinedForSpace
from .poset import (
    FinitePoset,
    MultiBound,
    classify,
    iter_bits,
    poset_from_order,
    verify_order_embedding,
)
from .setup import PatternSetup
from .structure import is_pattern_structure

__all__ = [
    "DEFAULT_MAX_ANTICHAINS",
    "AntichainPoset",
    "antichain_completion_of_poset",
    "antichain_leq",
    "check_boldi_vigna",
    "antichain_to_multilattice_check",
    "AntichainSpace",
    "DownsetSpace",
    "antichain_completion_of_setup",
    "direct_completion",
    "intersection_closure",
    "IffReport",
    "completion_iff_theorem",
    "CompletionReport",
    "completion_report",
    "DMCompletion",
    "dedekind_macneille",
    "subset_label",
]

DEFAULT_MAX_ANTICHAINS = 10**6


def subset_label(p: FinitePoset, S: Iterable) -> str:
    return "{" + ",".join(str(x) for x in p.members(p.mask(S))) + "}"


def _mask_key(mask: int) -> tuple:
    return (bin(mask).count("1"), tuple(iter_bits(mask)))


def _inclusion_matrix(masks: list, n: int) -> np.ndarray:
    """``out[i, j]`` iff ``masks[i]`` is a subset of ``masks[j]``."""
    rows = np.array([[m >> k & 1 for k in range(n)] for m in masks], dtype=np.int64).reshape(len(masks), n)
    return (rows @ (1 - rows).T) == 0


# antichain completion of a poset


@dataclass(frozen=True)
class AntichainPoset:
    """All antichains of ``base`` ordered by inclusion of down-closures.

    ``poset`` has frozensets of base elements as its element ids.
    """

    base: FinitePoset
    poset: FinitePoset

    @property
    def antichains(self) -> tuple:
        return self.poset.elements

    def __len__(self) -> int:
        return len(self.poset)

    def embedding(self) -> dict:
        return {a: frozenset([a]) for a in self.base.elements}

    def meet(self, A: Iterable, B: Iterable) -> frozenset:
        """max(↓A ∩ ↓B)."""
        b = self.base
        return frozenset(b.members(b.max_mask(b.down_mask(b.mask(A)) & b.down_mask(b.mask(B)))))

    def join(self, A: Iterable, B: Iterable) -> frozenset:
        """max(A ∪ B)."""
        b = self.base
        return frozenset(b.members(b.max_mask(b.mask(A) | b.mask(B))))

    def label(self, A: Iterable) -> str:
        return subset_label(self.base, A)


def antichain_leq(p: FinitePoset, A: Iterable, B: Iterable) -> bool:
    """↓A ⊆ ↓B.  Only a preorder on arbitrary subsets."""
    a, b = p.down_mask(p.mask(A)), p.down_mask(p.mask(B))
    return not a & ~b


def _antichain_masks(p: FinitePoset, cap: int) -> list:
    return sorted(p.iter_antichain_masks(cap), key=_mask_key)


def antichain_completion_of_poset(p: FinitePoset, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS) -> AntichainPoset:
    masks = _antichain_masks(p, max_antichains)
    downs = [p.down_mask(m) for m in masks]
    leq = _inclusion_matrix(downs, len(p))
    elements = [frozenset(p.members(m)) for m in masks]
    poset = FinitePoset(elements, leq, validate=len(masks) <= 400)
    result = AntichainPoset(p, poset)
    if not verify_order_embedding(p, poset, result.embedding()):
        raise RuntimeError("a -> {a} is not an order embedding")
    return result


@dataclass(frozen=True)
class BoldiVignaReport:
    holds: bool
    witness: tuple | None  # (A, B) whose ideal intersection is not principal-by-antichain


def check_boldi_vigna(p: FinitePoset, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS) -> BoldiVignaReport:
    """For all antichains A, B: is ↓A ∩ ↓B = ↓C for some antichain C?"""
    masks = _antichain_masks(p, max_antichains)
    downs = [p.down_mask(m) for m in masks]
    by_down = set(downs)
    for i, a in enumerate(downs):
        for j in range(i, len(downs)):
            if a & downs[j] not in by_down:
                return BoldiVignaReport(False, (frozenset(p.members(masks[i])), frozenset(p.members(masks[j]))))
    return BoldiVignaReport(True, None)


@dataclass(frozen=True)
class ImplicationCheck:
    antecedent: bool
    consequent: bool

    @property
    def holds(self) -> bool:
        return not self.antecedent or self.consequent


def antichain_to_multilattice_check(
    p: FinitePoset, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS
) -> ImplicationCheck:
    """If the antichain completion is a lattice then ``p`` is a meet-multisemilattice."""
    completion = antichain_completion_of_poset(p, max_antichains=max_antichains)
    antecedent = classify(completion.poset, multilattice=False).is_lattice
    consequent = classify(p).is_meet_multisemilattice
    return ImplicationCheck(antecedent, consequent)


# completions of setups


def _antichains_of(space: DescriptionSpace, elements: Iterable[Description], cap: int) -> list:
    p = poset_from_order(elements, space._leq, key=sort_key)
    return [frozenset(p.members(m)) for m in p.iter_antichain_masks(cap)]


class AntichainSpace(DescriptionSpace):
    """Antichains of a base space ordered by S ≦ T iff ↓S ⊆ ↓T."""

    kinds = frozenset({"antichain"})
    name = "antichains"

    def __init__(self, base: DescriptionSpace, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS):
        self.base = base
        self.max_antichains = max_antichains
        self.caps = SpaceCaps(self.top() is not None, base.caps.supports_minf_oracle,
                              base.caps.principal_ideals_finite, "per-setup")

    def make(self, members: Iterable[Description]) -> Description:
        return self.check(Description("antichain", frozenset(members)))

    def _valid(self, d):
        v = d.value
        if not isinstance(v, frozenset) or not all(self.base.owns(x) for x in v):
            return False
        return all(not self.base._leq(x, y) for x in v for y in v if x != y)

    def _leq(self, c, d):
        return all(any(self.base._leq(s, t) for t in d.value) for s in c.value)

    def _ideal(self, d):
        below: set = set()
        for s in d.value:
            below |= self.base._ideal(s)
        return frozenset(Description("antichain", a) for a in _antichains_of(self.base, below, self.max_antichains))

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        if descs and all(len(d.value) == 1 for d in descs):
            try:
                self._ideal(descs[0])
            except InfiniteIdeal:
                mb = self.base.multi_infima(next(iter(d.value)) for d in descs)
                if mb.complete:
                    return MultiBound((Description("antichain", frozenset(mb.elements)),), True)
                return MultiBound((), False)
        return super().multi_infima(descs)

    def top(self):
        base_top = self.base.top()
        if base_top is not None:
            return Description("antichain", frozenset([base_top]))
        try:
            if self.base.covered_by_max():
                return Description("antichain", frozenset(self.base.max_elements()))
        except UndefinedForSpace:
            pass
        return None

    def max_elements(self):
        top = self.top()
        return () if top is None else (top,)

    def covered_by_max(self):
        return self.top() is not None

    @staticmethod
    def _base_deltas(deltas) -> list:
        return sorted({x for d in deltas for x in d.value}, key=sort_key)

    def representatives(self, deltas):
        base_reps = self.base.representatives(self._base_deltas(deltas))
        out = {Description("antichain", a) for a in _antichains_of(self.base, base_reps, self.max_antichains)}
        top = self.top()
        if top is not None:
            out.add(top)
        return tuple(sorted(out, key=sort_key))

    def has_empty_extent(self, deltas):
        return self.base.has_empty_extent(self._base_deltas(deltas))

    def parse(self, literal):
        if not isinstance(literal, list):
            raise ParseError(f"antichain literal must be a list, got {literal!r}")
        d = Description("antichain", frozenset(self.base.parse(x) for x in literal))
        if not self._valid(d):
            raise ParseError(f"{literal!r} is not an antichain")
        return d

    def to_literal(self, d):
        return [self.base.to_literal(x) for x in sorted(d.value, key=sort_key)]

    def declaration(self):
        return {"kind": "antichains", "base": self.base.declaration()}

    def __repr__(self):
        return f"AntichainSpace({self.base!r})"


class DownsetSpace(DescriptionSpace):
    """Down-closed sets of base descriptions ordered by inclusion.

    When the base space is infinite its top (the whole space) is the
    symbolic description ``ALL``.
    """

    kinds = frozenset({"downset"})
    name = "downsets"

    def __init__(self, base: DescriptionSpace, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS):
        self.base = base
        self.max_antichains = max_antichains
        self.caps = SpaceCaps(True, True, base.caps.principal_ideals_finite, "per-setup")

    def make(self, members: Iterable[Description]) -> Description:
        return self.check(Description("downset", frozenset(members)))

    def _valid(self, d):
        v = d.value
        if v is None:
            return self.base.universe() is None
        return isinstance(v, frozenset) and all(self.base.owns(x) for x in v)

    def _leq(self, c, d):
        if d.value is None:
            return True
        if c.value is None:
            return False
        return c.value <= d.value

    def _ideal(self, d):
        if d.value is None:
            raise InfiniteIdeal("the whole infinite base space has an infinite ideal")
        p = poset_from_order(d.value, self.base._leq, key=sort_key)
        return frozenset(
            Description("downset", frozenset(p.members(p.down_mask(m))))
            for m in p.iter_antichain_masks(self.max_antichains)
        )

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        finite = [d.value for d in descs if d.value is not None]
        if not finite:
            return MultiBound((self.top(),), True)
        return MultiBound((Description("downset", frozenset.intersection(*finite)),), True)

    def top(self):
        universe = self.base.universe()
        return Description("downset", None if universe is None else frozenset(universe))

    def max_elements(self):
        return (self.top(),)

    def covered_by_max(self):
        return True

    def _base_deltas(self, deltas) -> list:
        out = set()
        for d in deltas:
            if d.value is None:
                continue
            out.update(x for x in d.value if not any(x != y and self.base._leq(x, y) for y in d.value))
        return sorted(out, key=sort_key)

    def representatives(self, deltas):
        fragment: set = set()
        for d in deltas:
            if d.value is not None:
                fragment |= d.value
        p = poset_from_order(fragment, self.base._leq, key=sort_key)
        out = {
            Description("downset", frozenset(p.members(p.down_mask(m))))
            for m in p.iter_antichain_masks(self.max_antichains)
        }
        out.add(self.top())
        return tuple(sorted(out, key=sort_key))

    def has_empty_extent(self, deltas):
        return self.base.has_empty_extent(self._base_deltas(deltas))

    def parse(self, literal):
        if literal == "ALL":
            return self.check(Description("downset", None))
        if not isinstance(literal, list):
            raise ParseError(f"downset literal must be a list or ALL, got {literal!r}")
        members: set = set()
        for x in literal:
            members |= self.base.principal_ideal(self.base.parse(x))
        return Description("downset", frozenset(members))

    def to_literal(self, d):
        if d.value is None:
            return "ALL"
        return [self.base.to_literal(x) for x in sorted(d.value, key=sort_key)]

    def declaration(self):
        return {"kind": "downsets", "base": self.base.declaration()}

    def __repr__(self):
        return f"DownsetSpace({self.base!r})"


def antichain_completion_of_setup(
    setup: PatternSetup,
    *,
    augment_top: bool = False,
    max_antichains: int = DEFAULT_MAX_ANTICHAINS,
) -> PatternSetup:
    """The setup with antichain descriptions and δ(g) replaced by {δ(g)}.

    With ``augment_top`` the base space first receives a synthetic top.
    """
    base = augment_with_top(setup.space) if augment_top else setup.space
    space = AntichainSpace(base, max_antichains=max_antichains)
    delta = {g: space.make([setup.delta[g]]) for g in setup.objects}
    return PatternSetup(setup.objects, space, delta, max_objects=setup.max_objects)


def direct_completion(setup: PatternSetup, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS) -> PatternSetup:
    """The setup with δ(g) replaced by its principal ideal ↓δ(g)."""
    space = DownsetSpace(setup.space, max_antichains=max_antichains)
    delta = {g: space.make(setup.space.principal_ideal(setup.delta[g])) for g in setup.objects}
    return PatternSetup(setup.objects, space, delta, max_objects=setup.max_objects)


def intersection_closure(objects: Iterable[str], family: Iterable[Iterable[str]]) -> set:
    """{⋂S | S ⊆ family}, where the empty intersection is all objects."""
    closed = {frozenset(objects)} | {frozenset(S) for S in family}
    frontier = set(closed)
    while frontier:
        new = {A & B for A in frontier for B in closed} - closed
        closed |= new
        frontier = new
    return closed


@dataclass(frozen=True)
class IffReport:
    is_multistructure: bool
    multistructure_witnesses: tuple
    completion_is_structure: bool
    structure_witnesses: tuple
    base_extents: tuple
    completed_extents: tuple
    generated_extents: tuple

    @property
    def equivalence_holds(self) -> bool:
        return self.is_multistructure == self.completion_is_structure

    @property
    def extents_match(self) -> bool:
        return set(self.completed_extents) == set(self.generated_extents)


def completion_iff_theorem(setup: PatternSetup, *, max_antichains: int = DEFAULT_MAX_ANTICHAINS) -> IffReport:
    """Compare the multistructure test on ``setup`` with the structure test on its antichain completion."""
    multi = setup.is_multistructure()
    completed = antichain_completion_of_setup(setup, max_antichains=max_antichains)
    struct = is_pattern_structure(completed)
    base = setup.definable_extents().extents
    generated = setup.sort_sets(intersection_closure(setup.objects, base))
    return IffReport(
        is_multistructure=multi.holds,
        multistructure_witnesses=multi.witnesses,
        completion_is_structure=struct.holds,
        structure_witnesses=struct.witnesses,
        base_extents=base,
        completed_extents=completed.definable_extents().extents,
        generated_extents=generated,
    )


@dataclass(frozen=True)
class CompletionReport:
    base_extent_count: int
    completed_extent_count: int
    new_extents: tuple
    is_structure_after: bool


def completion_report(
    setup: PatternSetup, kind: str = "antichain", *, max_antichains: int = DEFAULT_MAX_ANTICHAINS
) -> CompletionReport:
    if kind == "antichain":
        completed = antichain_completion_of_setup(setup, max_antichains=max_antichains)
    elif kind == "direct":
        completed = direct_completion(setup, max_antichains=max_antichains)
    else:
        raise ValueError(f"unknown completion kind {kind!r}")
    base = setup.definable_extents().as_set()
    after = completed.definable_extents()
    return CompletionReport(
        base_extent_count=len(base),
        completed_extent_count=len(after),
        new_extents=tuple(E for E in after if E not in base),
        is_structure_after=is_pattern_structure(completed).holds,
    )


# Dedekind-MacNeille


@dataclass(frozen=True)
class DMCompletion:
    base: FinitePoset
    poset: FinitePoset  # elements are frozensets (cuts) of base elements
    embedding: Mapping

    @property
    def is_embedding(self) -> bool:
        return verify_order_embedding(self.base, self.poset, self.embedding)

    @property
    def isomorphic_to_base(self) -> bool:
        """The embedding x ↦ ↓x hits every cut."""
        return len(set(self.embedding.values())) == len(self.poset)

    @property
    def isomorphic_modulo_bottom(self) -> bool:
        """Every cut is principal except possibly the empty one."""
        image = set(self.embedding.values()) | {frozenset()}
        return all(c in image for c in self.poset.elements)

    def label(self, cut: Iterable) -> str:
        return subset_label(self.base, cut)


def dedekind_macneille(p: FinitePoset, *, max_cuts: int = DEFAULT_MAX_ANTICHAINS) -> DMCompletion:
    """Cuts {Aℓ | A ⊆ P}: intersections of principal ideals, plus P itself."""
    n = len(p)
    principal = {p.principal_down_mask(i) for i in range(n)}
    cuts = {p.full_mask} | principal
    frontier = set(cuts)
    while frontier:
        new = {a & b for a in frontier for b in principal} - cuts
        cuts |= new
        if len(cuts) > max_cuts:
            from .errors import CapExceeded

            raise CapExceeded(f"more than {max_cuts} cuts")
        frontier = new
    masks = sorted(cuts, key=_mask_key)
    leq = _inclusion_matrix(masks, n)
    poset = FinitePoset([frozenset(p.members(m)) for m in masks], leq, validate=len(masks) <= 400)
    embedding = {x: frozenset(p.down_closure([x])) for x in p.elements}
    return DMCompletion(p, poset, embedding)
