"""Pattern setups (G, D, δ) and the extent/cover machinery built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .descspace import Description, DescriptionSpace, ExplicitSpace, SymbolicSet, sort_key
from .errors import CapExceeded, InfiniteIdeal, UnknownElement
from .poset import FinitePoset, build_poset

__all__ = [
    "PatternSetup",
    "ExtentFamily",
    "MultistructureReport",
    "ImplicationReport",
    "is_extent_system",
    "format_object_set",
]

ObjectSet = frozenset


def format_object_set(objects: Sequence[str], A: Iterable[str]) -> str:
    order = {g: i for i, g in enumerate(objects)}
    return "{" + ",".join(sorted(A, key=order.__getitem__)) + "}"


@dataclass(frozen=True)
class ExtentFamily:
    """A family of object sets with a witnessing description per member.

    The witness is ``None`` when the member is known to be definable only
    through a space capability (the empty extent of an infinite space).
    """

    extents: tuple
    provenance: Mapping = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.extents)

    def __len__(self) -> int:
        return len(self.extents)

    def __contains__(self, A) -> bool:
        return frozenset(A) in self.provenance

    def as_set(self) -> set:
        return set(self.extents)


@dataclass(frozen=True)
class MultistructureReport:
    holds: bool
    witnesses: tuple
    verdicts: Mapping = field(compare=False)

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


@dataclass(frozen=True)
class ImplicationReport:
    pattern_verdicts: tuple  # (c, d, holds)
    equivalence_classes: tuple  # (extent, descriptions)
    object_verdicts: tuple  # (A, B, holds)


class PatternSetup:
    """Objects, a description space and a description per object.

    Object subsets are passed as any iterable of object ids and returned as
    frozensets.  Families of object sets are sorted by size, then by the
    positions of their members in ``objects``.
    """

    def __init__(
        self,
        objects: Sequence[str],
        space: DescriptionSpace,
        delta: Mapping[str, Description],
        *,
        max_objects: int = 20,
    ):
        objects = tuple(objects)
        if not objects:
            raise ValueError("a pattern setup needs at least one object")
        if len(set(objects)) != len(objects):
            raise ValueError("object ids must be unique")
        extra = set(delta) - set(objects)
        if extra:
            raise UnknownElement(f"descriptions given for undeclared objects {sorted(extra)}")
        missing = [g for g in objects if g not in delta]
        if missing:
            raise UnknownElement(f"no description for objects {missing}")
        for g in objects:
            space.check(delta[g])
        self.objects = objects
        self.space = space
        self.delta = MappingProxyType({g: delta[g] for g in objects})
        self.max_objects = max_objects
        self._pos = {g: i for i, g in enumerate(objects)}

    def __repr__(self) -> str:
        return f"PatternSetup({len(self.objects)} objects, {self.space!r})"

    def replace(self, *, space: DescriptionSpace | None = None, delta=None, max_objects=None) -> "PatternSetup":
        return PatternSetup(
            self.objects,
            self.space if space is None else space,
            self.delta if delta is None else delta,
            max_objects=self.max_objects if max_objects is None else max_objects,
        )

    # object sets

    @property
    def all_objects(self) -> frozenset:
        return frozenset(self.objects)

    def object_set(self, A: Iterable[str]) -> frozenset:
        A = frozenset(A)
        unknown = [g for g in A if g not in self._pos]
        if unknown:
            raise UnknownElement(f"unknown objects {sorted(unknown)}")
        return A

    def set_key(self, A: Iterable[str]) -> tuple:
        return (len(A), tuple(sorted(self._pos[g] for g in A)))

    def sort_sets(self, family: Iterable[Iterable[str]]) -> tuple:
        return tuple(sorted({frozenset(A) for A in family}, key=self.set_key))

    def format_set(self, A: Iterable[str]) -> str:
        return format_object_set(self.objects, A)

    def subsets(self) -> Iterator[frozenset]:
        """All subsets of the objects, ordered by size then position."""
        n = len(self.objects)
        if n > self.max_objects:
            raise CapExceeded(f"2^{n} object subsets exceed the cap of {self.max_objects} objects")
        for k in range(n + 1):
            for combo in combinations(self.objects, k):
                yield frozenset(combo)

    # descriptions

    @property
    def deltas(self) -> tuple:
        return tuple(self.delta[g] for g in self.objects)

    @cached_property
    def fragment(self) -> FinitePoset | None:
        """The relevant fragment ↓δ[G], or ``None`` when it is infinite."""
        from .descspace import restrict_to_relevant

        try:
            return restrict_to_relevant(self.space, self.deltas)
        except InfiniteIdeal:
            return None

    def relevant_fragment(self) -> FinitePoset:
        if self.fragment is None:
            raise InfiniteIdeal("the relevant fragment of this setup is infinite")
        return self.fragment

    @cached_property
    def _delta_bits(self) -> tuple:
        frag = self.fragment
        return tuple(frag.index(d) for d in self.deltas)

    def ext(self, d: Description) -> frozenset:
        """Objects whose description refines ``d``."""
        self.space.check(d)
        frag = self.fragment
        if frag is not None and d in frag:
            up = frag.principal_up_mask(frag.index(d))
            return frozenset(g for g, i in zip(self.objects, self._delta_bits) if up >> i & 1)
        return frozenset(g for g in self.objects if self.space._leq(d, self.delta[g]))

    def support(self, d: Description) -> int:
        return len(self.ext(d))

    def _fragment_lower(self, A: frozenset) -> int:
        frag = self.fragment
        mask = 0
        for g in A:
            mask |= 1 << self._delta_bits[self._pos[g]]
        return frag.lower_bounds_mask(mask)

    def cov(self, A: Iterable[str], *, restrict: bool = False) -> frozenset | SymbolicSet:
        """Common descriptions of ``A``.

        ``cov(∅)`` is the whole space and comes back as the symbolic set
        ``ALL`` unless ``restrict`` asks for its intersection with the
        relevant fragment.
        """
        A = self.object_set(A)
        if not A:
            if restrict:
                return frozenset(self.relevant_fragment().elements)
            return SymbolicSet("ALL", self.space.owns)
        frag = self.fragment
        if frag is not None:
            return frozenset(frag.members(self._fragment_lower(A)))
        return self.space.lower_bounds(self.delta[g] for g in A)

    def cov_star(self, A: Iterable[str]) -> tuple:
        """Maximal common descriptions of ``A`` as a sorted antichain."""
        A = self.object_set(A)
        if not A:
            top = self.space.top()
            if top is not None:
                return (top,)
            return tuple(sorted(self.space.max_elements(), key=sort_key))
        frag = self.fragment
        if frag is not None:
            return frag.members(frag.max_mask(self._fragment_lower(A)))
        return self.space.multi_infima(self.delta[g] for g in A).elements

    def has_all_multi_infima(self, A: Iterable[str]) -> bool:
        """Whether cov(A) = ↓cov*(A)."""
        A = self.object_set(A)
        if not A:
            return self.space.top() is not None or self.space.covered_by_max()
        frag = self.fragment
        if frag is not None:
            lower = self._fragment_lower(A)
            return frag.down_mask(frag.max_mask(lower)) == lower
        return self.space.multi_infima(self.delta[g] for g in A).complete

    def meet(self, A: Iterable[str]) -> Description | None:
        """Greatest common description of ``A`` if it exists."""
        star = self.cov_star(A)
        if len(star) == 1 and self.has_all_multi_infima(A):
            return star[0]
        return None

    # support-closed patterns

    def is_support_closed(self, d: Description) -> bool:
        return d in self.cov_star(self.ext(d))

    def support_closed_set(self) -> tuple:
        out: set = set()
        for A in self.subsets():
            out.update(self.cov_star(A))
        return tuple(sorted(out, key=sort_key))

    # definable sets

    @cached_property
    def _extents(self) -> ExtentFamily:
        provenance: dict = {}
        for d in self.space.representatives(self.deltas):
            provenance.setdefault(self.ext(d), d)
        if frozenset() not in provenance and self.space.has_empty_extent(self.deltas):
            provenance[frozenset()] = None
        return ExtentFamily(self.sort_sets(provenance), MappingProxyType(provenance))

    def definable_extents(self) -> ExtentFamily:
        return self._extents

    def upper_approximations(self, A: Iterable[str]) -> tuple:
        """Minimal definable supersets of ``A``."""
        A = self.object_set(A)
        above = [E for E in self._extents if A <= E]
        return self.sort_sets(E for E in above if not any(F < E for F in above))

    def smallest_definable_superset(self, A: Iterable[str]) -> frozenset:
        """⋂(↑A ∩ P_ext), with the empty intersection taken as all objects."""
        A = self.object_set(A)
        out = self.all_objects
        for E in self._extents:
            if A <= E:
                out &= E
        return out

    # implications

    def pattern_implication(self, c: Description, d: Description) -> bool:
        return self.ext(c) <= self.ext(d)

    def object_implication(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """cov(A) ⊆ cov(B), decided through the definable supersets of A."""
        return self.object_set(B) <= self.smallest_definable_superset(A)

    def implications(self, pairs=None, object_pairs=()) -> ImplicationReport:
        frag = self.relevant_fragment()
        if pairs is None:
            pairs = [(c, d) for c in frag.elements for d in frag.elements if c != d]
            verdicts = tuple((c, d, True) for c, d in pairs if self.pattern_implication(c, d))
        else:
            verdicts = tuple((c, d, self.pattern_implication(c, d)) for c, d in pairs)
        groups: dict = {}
        for d in frag.elements:
            groups.setdefault(self.ext(d), []).append(d)
        classes = tuple((E, tuple(groups[E])) for E in self.sort_sets(groups))
        objs = tuple(
            (self.object_set(A), self.object_set(B), self.object_implication(A, B)) for A, B in object_pairs
        )
        return ImplicationReport(verdicts, classes, objs)

    # representation and multistructure test

    def minimal_representation(self) -> "PatternSetup":
        """The setup (G, (P_ext, ⊇), g ↦ ⋂(↑g ∩ P_ext)) over an explicit space."""
        family = self._extents.extents
        ids = {E: self.format_set(E) for E in family}
        pairs = [(ids[A], ids[B]) for A in family for B in family if A >= B]
        space = ExplicitSpace(build_poset(ids.values(), pairs))
        delta = {g: Description("explicit", ids[self.smallest_definable_superset([g])]) for g in self.objects}
        rep = PatternSetup(self.objects, space, delta, max_objects=self.max_objects)
        if rep.definable_extents().as_set() != set(family):
            raise RuntimeError("minimal representation does not reproduce the extents")
        return rep

    def is_multistructure(self) -> MultistructureReport:
        verdicts = {A: self.has_all_multi_infima(A) for A in self.subsets()}
        witnesses = tuple(A for A, ok in verdicts.items() if not ok)
        return MultistructureReport(not witnesses, witnesses, MappingProxyType(verdicts))


def is_extent_system(objects: Iterable[str], family: Iterable[Iterable[str]]) -> bool:
    """Whether ``family`` is the extent family of some pattern setup.

    That holds iff for every object g the intersection of the members
    containing g is again a member (an empty intersection is all objects).
    """
    universe = frozenset(objects)
    members = {frozenset(S) for S in family}
    for S in members:
        if not S <= universe:
            raise UnknownElement(f"family member {sorted(S)} has undeclared objects")
    for g in universe:
        inter = universe
        for S in members:
            if g in S:
                inter = inter & S
        if inter not in members:
            return False
    return True
