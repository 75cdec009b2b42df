"""Pattern structures: the intent operator, closure and concept lattices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .descspace import Description
from .errors import NotAStructure
from .poset import FinitePoset, poset_from_order
from .setup import PatternSetup

__all__ = [
    "StructureReport",
    "Concept",
    "ConceptLattice",
    "is_pattern_structure",
    "intent",
    "closure",
    "concept_lattice",
]


@dataclass(frozen=True)
class StructureReport:
    holds: bool
    witnesses: tuple

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


def is_pattern_structure(setup: PatternSetup) -> StructureReport:
    """Check that every object subset has a greatest common description.

    All failing subsets are listed in ``witnesses``, in canonical order.
    """
    cached = setup.__dict__.get("_structure_report")
    if cached is None:
        failing = tuple(A for A in setup.subsets() if setup.meet(A) is None)
        cached = StructureReport(not failing, failing)
        setup.__dict__["_structure_report"] = cached
    return cached


def _require_structure(setup: PatternSetup) -> None:
    report = is_pattern_structure(setup)
    if not report.holds:
        w = report.witness
        raise NotAStructure(
            f"not a pattern structure: {setup.format_set(w)} has no greatest common description", witness=w
        )


def intent(setup: PatternSetup, A: Iterable[str]) -> Description:
    """The greatest common description int(A)."""
    _require_structure(setup)
    return setup.meet(setup.object_set(A))


def closure(setup: PatternSetup, A: Iterable[str]) -> frozenset:
    """ext(int(A)), the smallest definable superset of A."""
    return setup.ext(intent(setup, A))


@dataclass(frozen=True)
class Concept:
    extent: frozenset
    intent: Description


@dataclass(frozen=True)
class ConceptLattice:
    objects: tuple
    concepts: tuple
    order: FinitePoset  # over concept indices, i <= j iff extent_i ⊆ extent_j

    def __len__(self) -> int:
        return len(self.concepts)

    @property
    def hasse(self) -> tuple:
        return self.order.hasse_edges

    def extents(self) -> tuple:
        return tuple(c.extent for c in self.concepts)

    def find(self, extent: Iterable[str]) -> Concept | None:
        extent = frozenset(extent)
        for c in self.concepts:
            if c.extent == extent:
                return c
        return None


def concept_lattice(setup: PatternSetup) -> ConceptLattice:
    """All concepts of a pattern structure, ordered by extent inclusion."""
    _require_structure(setup)
    family = set(setup.definable_extents())
    frontier = set(family)
    while frontier:
        new = {A & B for A in frontier for B in family} - family
        family |= new
        frontier = new
    extents = setup.sort_sets(family)
    concepts = []
    for E in extents:
        d = setup.meet(E)
        if setup.ext(d) != E:
            raise RuntimeError(f"extent {setup.format_set(E)} is not closed")
        concepts.append(Concept(E, d))
    order = poset_from_order(range(len(extents)), lambda i, j: extents[i] <= extents[j])
    return ConceptLattice(setup.objects, tuple(concepts), order)
