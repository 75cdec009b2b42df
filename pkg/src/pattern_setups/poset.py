"""Finite partially ordered sets.

A :class:`FinitePoset` keeps the reflexive-transitive order as a dense
boolean matrix.  Subsets are handled internally as integer bitmasks over
the canonical element order, which keeps the exhaustive subset loops used
by the classification and completion code cheap.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import CapExceeded, CycleDetected, UnknownElement

__all__ = [
    "FinitePoset",
    "MultiBound",
    "ClassificationReport",
    "build_poset",
    "poset_from_order",
    "classify",
    "verify_order_embedding",
    "is_distributive_lattice",
    "iter_bits",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class MultiBound:
    """Multi-infima (or multi-suprema) of a subset.

    ``complete`` is true when the subset has all of them, i.e. its set of
    lower bounds is the down-closure of ``elements``.
    """

    elements: tuple
    complete: bool


class FinitePoset:
    """Immutable finite poset over hashable element ids.

    The order of ``elements`` is the canonical order used for every
    returned subset.
    """

    def __init__(self, elements: Sequence[Hashable], leq, *, validate: bool = True):
        self._elements = tuple(elements)
        self._index: dict = {}
        for i, e in enumerate(self._elements):
            if e in self._index:
                raise ValueError(f"duplicate element id {e!r}")
            self._index[e] = i
        n = len(self._elements)
        m = np.array(leq, dtype=bool).reshape(n, n) if n else np.zeros((0, 0), dtype=bool)
        if validate:
            _check_order_matrix(m, self._elements)
        m.setflags(write=False)
        self._leq = m
        self._down = [_column_mask(m, i) for i in range(n)]
        self._up = [_row_mask(m, i) for i in range(n)]
        self._full = (1 << n) - 1
        self._down_index = {d: i for i, d in enumerate(self._down)}
        self._up_index = {u: i for i, u in enumerate(self._up)}

    # basic protocol

    @property
    def elements(self) -> tuple:
        return self._elements

    @property
    def leq(self) -> np.ndarray:
        """Read-only boolean matrix, ``leq[i, j]`` iff element i <= element j."""
        return self._leq

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self._elements == other._elements and np.array_equal(self._leq, other._leq)

    def __hash__(self) -> int:
        return hash((self._elements, self._leq.tobytes()))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {len(self.hasse_edges)} covers)"

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"unknown element {x!r}") from None

    def le(self, x, y) -> bool:
        return bool(self._leq[self.index(x), self.index(y)])

    def lt(self, x, y) -> bool:
        return x != y and self.le(x, y)

    def comparable(self, x, y) -> bool:
        return self.le(x, y) or self.le(y, x)

    # bitmask layer

    @property
    def full_mask(self) -> int:
        return self._full

    def mask(self, subset: Iterable) -> int:
        m = 0
        for x in subset:
            m |= 1 << self.index(x)
        return m

    def members(self, mask: int) -> tuple:
        return tuple(self._elements[i] for i in iter_bits(mask))

    def down_mask(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= self._down[i]
        return out

    def up_mask(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= self._up[i]
        return out

    def lower_bounds_mask(self, mask: int) -> int:
        out = self._full
        for i in iter_bits(mask):
            out &= self._down[i]
        return out

    def upper_bounds_mask(self, mask: int) -> int:
        out = self._full
        for i in iter_bits(mask):
            out &= self._up[i]
        return out

    def max_mask(self, mask: int) -> int:
        return sum(1 << i for i in iter_bits(mask) if self._up[i] & mask == 1 << i)

    def min_mask(self, mask: int) -> int:
        return sum(1 << i for i in iter_bits(mask) if self._down[i] & mask == 1 << i)

    def principal_down_mask(self, i: int) -> int:
        return self._down[i]

    def principal_up_mask(self, i: int) -> int:
        return self._up[i]

    def maximum_index(self, mask: int) -> int | None:
        """Index of the maximum of the subset ``mask``, if it has one."""
        i = self._down_index.get(mask)
        if i is not None:
            return i
        for i in iter_bits(mask):
            if not mask & ~self._down[i]:
                return i
        return None

    def minimum_index(self, mask: int) -> int | None:
        i = self._up_index.get(mask)
        if i is not None:
            return i
        for i in iter_bits(mask):
            if not mask & ~self._up[i]:
                return i
        return None

    def is_antichain_mask(self, mask: int) -> bool:
        return all(self._down[i] & mask == 1 << i for i in iter_bits(mask))

    # subset operations (results sorted in canonical order)

    def down_closure(self, subset: Iterable) -> tuple:
        return self.members(self.down_mask(self.mask(subset)))

    def up_closure(self, subset: Iterable) -> tuple:
        return self.members(self.up_mask(self.mask(subset)))

    def lower_bounds(self, subset: Iterable) -> tuple:
        return self.members(self.lower_bounds_mask(self.mask(subset)))

    def upper_bounds(self, subset: Iterable) -> tuple:
        return self.members(self.upper_bounds_mask(self.mask(subset)))

    def minimal_elements(self, subset: Iterable) -> tuple:
        return self.members(self.min_mask(self.mask(subset)))

    def maximal_elements(self, subset: Iterable) -> tuple:
        return self.members(self.max_mask(self.mask(subset)))

    def meet(self, subset: Iterable):
        """Greatest lower bound, or ``None``.  ``meet([])`` is the top."""
        i = self.maximum_index(self.lower_bounds_mask(self.mask(subset)))
        return None if i is None else self._elements[i]

    def join(self, subset: Iterable):
        i = self.minimum_index(self.upper_bounds_mask(self.mask(subset)))
        return None if i is None else self._elements[i]

    def multi_infima(self, subset: Iterable) -> MultiBound:
        lower = self.lower_bounds_mask(self.mask(subset))
        top = self.max_mask(lower)
        return MultiBound(self.members(top), self.down_mask(top) == lower)

    def multi_suprema(self, subset: Iterable) -> MultiBound:
        upper = self.upper_bounds_mask(self.mask(subset))
        bottom = self.min_mask(upper)
        return MultiBound(self.members(bottom), self.up_mask(bottom) == upper)

    def is_antichain(self, subset: Iterable) -> bool:
        return self.is_antichain_mask(self.mask(subset))

    def is_down_set(self, subset: Iterable) -> bool:
        m = self.mask(subset)
        return self.down_mask(m) == m

    def top(self):
        return self.meet(())

    def bottom(self):
        return self.join(())

    @cached_property
    def hasse_edges(self) -> tuple:
        """Covering pairs ``(x, y)`` with x < y and nothing strictly between."""
        n = len(self)
        strict_up = [self._up[i] & ~(1 << i) for i in range(n)]
        strict_down = [self._down[i] & ~(1 << i) for i in range(n)]
        edges = []
        for i in range(n):
            for j in iter_bits(strict_up[i]):
                if not strict_up[i] & strict_down[j]:
                    edges.append((self._elements[i], self._elements[j]))
        return tuple(edges)

    def subposet(self, subset: Iterable) -> "FinitePoset":
        idx = list(iter_bits(self.mask(subset)))
        sub = self._leq[np.ix_(idx, idx)]
        return FinitePoset([self._elements[i] for i in idx], sub, validate=False)

    def iter_antichain_masks(self, cap: int | None = None) -> Iterator[int]:
        """Depth-first enumeration of all antichains, the empty one first.

        Raises :class:`CapExceeded` once more than ``cap`` antichains have
        been produced.
        """
        n = len(self)
        comparable = [self._down[i] | self._up[i] for i in range(n)]
        count = 0

        def walk(mask: int, allowed: int):
            nonlocal count
            count += 1
            if cap is not None and count > cap:
                raise CapExceeded(f"more than {cap} antichains")
            yield mask
            for i in iter_bits(allowed):
                above = ~((1 << (i + 1)) - 1)
                yield from walk(mask | 1 << i, allowed & ~comparable[i] & above)

        yield from walk(0, self._full)


def _column_mask(m: np.ndarray, i: int) -> int:
    out = 0
    for j in np.flatnonzero(m[:, i]):
        out |= 1 << int(j)
    return out


def _row_mask(m: np.ndarray, i: int) -> int:
    out = 0
    for j in np.flatnonzero(m[i, :]):
        out |= 1 << int(j)
    return out


def _check_order_matrix(m: np.ndarray, elements: Sequence) -> None:
    n = len(elements)
    if m.shape != (n, n):
        raise ValueError(f"order matrix has shape {m.shape}, expected {(n, n)}")
    if n == 0:
        return
    if not m.diagonal().all():
        raise ValueError("order is not reflexive")
    both = m & m.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = np.argwhere(both)[0]
        raise CycleDetected(f"{elements[i]!r} and {elements[j]!r} are mutually below each other")
    as_int = m.astype(np.int64)
    if ((as_int @ as_int > 0) & ~m).any():
        raise ValueError("order is not transitive")


def _transitive_closure(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    for k in range(m.shape[0]):
        m |= np.outer(m[:, k], m[k, :])
    return m


def build_poset(
    elements: Iterable[Hashable],
    relation: Iterable[tuple],
    *,
    key: Callable | None = None,
) -> FinitePoset:
    """Build a poset from ids and generating pairs ``(x, y)`` meaning x <= y.

    Elements are sorted (with ``key`` if given) to fix the canonical order.
    The order is the reflexive-transitive closure of ``relation``.
    """
    raw = list(elements)
    if len(set(raw)) != len(raw):
        raise ValueError("element ids must be unique")
    ordered = sorted(raw, key=key)
    index = {e: i for i, e in enumerate(ordered)}
    n = len(ordered)
    m = np.eye(n, dtype=bool)
    for pair in relation:
        x, y = pair
        for e in (x, y):
            if e not in index:
                raise UnknownElement(f"relation references undeclared element {e!r}")
        m[index[x], index[y]] = True
    return FinitePoset(ordered, _transitive_closure(m))


def poset_from_order(
    elements: Iterable[Hashable],
    leq: Callable[[object, object], bool],
    *,
    key: Callable | None = None,
) -> FinitePoset:
    """Build a poset by evaluating ``leq`` on every pair of elements."""
    ordered = sorted(set(elements), key=key)
    n = len(ordered)
    m = np.zeros((n, n), dtype=bool)
    for i, x in enumerate(ordered):
        for j, y in enumerate(ordered):
            m[i, j] = i == j or bool(leq(x, y))
    return FinitePoset(ordered, m)


@dataclass(frozen=True)
class ClassificationReport:
    is_chain: bool
    is_antichain_poset: bool
    has_top: bool
    has_bottom: bool
    is_meet_semilattice: bool
    is_join_semilattice: bool
    is_lattice: bool
    is_complete_lattice: bool
    is_benado_multilattice: bool
    is_meet_multisemilattice: bool
    is_join_multisemilattice: bool
    is_multilattice: bool
    is_complete_multilattice: bool
    multilattice_mode: str
    size: int

    def to_dict(self) -> dict:
        return asdict(self)


def _has_all(p: FinitePoset, lower: int, dual: bool) -> bool:
    if dual:
        return p.up_mask(p.min_mask(lower)) == lower
    return p.down_mask(p.max_mask(lower)) == lower


def classify(
    p: FinitePoset,
    *,
    max_exhaustive: int = 16,
    max_triples: int = 40,
    multilattice: bool = True,
) -> ClassificationReport:
    """Structural classification of a finite poset.

    Multi-infima/suprema are checked literally: over every nonempty subset
    when ``len(p) <= max_exhaustive`` (mode ``"exhaustive"``), otherwise over
    subsets of size at most 3 (``"sampled"``), or only pairs for posets
    larger than ``max_triples`` (``"pairs"``).  With ``multilattice=False``
    only pairs are inspected (mode ``"skipped"`` for the subset checks).
    """
    n = len(p)
    m = p.leq
    full = p.full_mask
    down = [p.principal_down_mask(i) for i in range(n)]
    up = [p.principal_up_mask(i) for i in range(n)]

    is_chain = bool((m | m.T).all())
    is_antichain_poset = bool((m == np.eye(n, dtype=bool)).all())
    has_top = p.maximum_index(full) is not None
    has_bottom = p.minimum_index(full) is not None

    meet_semi = join_semi = benado = True
    for i, j in combinations(range(n), 2):
        lower = down[i] & down[j]
        upper = up[i] & up[j]
        if meet_semi and p.maximum_index(lower) is None:
            meet_semi = False
        if join_semi and p.minimum_index(upper) is None:
            join_semi = False
        if benado and not (_has_all(p, lower, False) and _has_all(p, upper, True)):
            benado = False
    is_lattice = meet_semi and join_semi

    meet_multi = join_multi = True
    if not multilattice:
        mode = "skipped"
        meet_multi = join_multi = benado
    elif n <= max_exhaustive:
        mode = "exhaustive"
        lower = [full] * (1 << n)
        upper = [full] * (1 << n)
        for s in range(1, 1 << n):
            low = s & -s
            i = low.bit_length() - 1
            lower[s] = lower[s ^ low] & down[i]
            upper[s] = upper[s ^ low] & up[i]
            if meet_multi and not _has_all(p, lower[s], False):
                meet_multi = False
            if join_multi and not _has_all(p, upper[s], True):
                join_multi = False
            if not (meet_multi or join_multi):
                break
    else:
        mode = "sampled" if n <= max_triples else "pairs"
        sizes = (1, 2, 3) if mode == "sampled" else (1, 2)
        for k in sizes:
            for combo in combinations(range(n), k):
                s = sum(1 << i for i in combo)
                if meet_multi and not _has_all(p, p.lower_bounds_mask(s), False):
                    meet_multi = False
                if join_multi and not _has_all(p, p.upper_bounds_mask(s), True):
                    join_multi = False
    multilattice = meet_multi and join_multi
    complete_multi = multilattice and _has_all(p, full, False) and _has_all(p, full, True)

    return ClassificationReport(
        is_chain=is_chain,
        is_antichain_poset=is_antichain_poset,
        has_top=has_top,
        has_bottom=has_bottom,
        is_meet_semilattice=meet_semi,
        is_join_semilattice=join_semi,
        is_lattice=is_lattice,
        is_complete_lattice=is_lattice and has_top and has_bottom,
        is_benado_multilattice=benado,
        is_meet_multisemilattice=meet_multi,
        is_join_multisemilattice=join_multi,
        is_multilattice=multilattice,
        is_complete_multilattice=complete_multi,
        multilattice_mode=mode,
        size=n,
    )


def verify_order_embedding(src: FinitePoset, dst: FinitePoset, mapping: Mapping) -> bool:
    """True iff ``x <= y`` in ``src`` exactly when ``mapping[x] <= mapping[y]`` in ``dst``."""
    try:
        image = [dst.index(mapping[x]) for x in src.elements]
    except KeyError as exc:
        raise UnknownElement(f"mapping is not total or leaves dst: {exc}") from None
    idx = np.array(image, dtype=np.int64)
    return bool(np.array_equal(src.leq, dst.leq[np.ix_(idx, idx)])) if len(idx) else True


def is_distributive_lattice(p: FinitePoset) -> bool | None:
    """Check x ^ (y v z) = (x ^ y) v (x ^ z) for all triples.

    Returns ``None`` when ``p`` is not a lattice.
    """
    n = len(p)
    meet = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a = p.maximum_index(p.principal_down_mask(i) & p.principal_down_mask(j))
            b = p.minimum_index(p.principal_up_mask(i) & p.principal_up_mask(j))
            if a is None or b is None:
                return None
            meet[i][j] = meet[j][i] = a
            join[i][j] = join[j][i] = b
    for x in range(n):
        for y in range(n):
            for z in range(y + 1, n):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return False
    return True
