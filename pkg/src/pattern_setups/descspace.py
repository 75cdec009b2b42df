"""Description spaces (D, ⊑) used as the pattern language of a setup.

Each space knows how to compare two descriptions, enumerate principal
ideals, and report capabilities that the setup code relies on for the
cases that cannot be computed by finite search (for instance whether the
empty set of objects is definable).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    InfiniteIdeal,
    ParseError,
    SpaceMismatch,
    UndefinedForSpace,
    UnsupportedCapability,
)
from .poset import FinitePoset, MultiBound, poset_from_order

__all__ = [
    "Description",
    "TOP",
    "SymbolicSet",
    "SpaceCaps",
    "DescriptionSpace",
    "ItemsetSpace",
    "IntervalSpace",
    "RaySpace",
    "WordSpace",
    "ExplicitSpace",
    "OmegaSpace",
    "TopAugmented",
    "augment_with_top",
    "restrict_to_relevant",
    "subsumes",
    "principal_ideal",
    "minf_of_pair_oracle",
    "sort_key",
    "format_number",
    "parse_number",
]


@dataclass(frozen=True)
class Description:
    """A space-tagged description value.

    ``value`` depends on ``kind``: a frozenset of attribute ids for
    itemsets, ``(lo, hi)`` for intervals (``None`` is the empty interval),
    ``(op, v)`` for rays, a string for words and explicit elements, ``"a"``,
    ``"b"`` or an int ``i`` for the omega space, and ``None`` for the
    synthetic top.
    """

    kind: str
    value: Hashable

    def __str__(self) -> str:
        return label(self)

    def __repr__(self) -> str:
        return f"<{self.kind} {label(self)}>"


TOP = Description("top", None)

_KIND_RANK = {
    "itemset": 0,
    "interval": 1,
    "ray": 2,
    "word": 3,
    "explicit": 4,
    "omega": 5,
    "antichain": 6,
    "downset": 7,
    "top": 99,
}
_RAY_RANK = {">=": 0, "<=": 1, "=": 2}


def format_number(x: Fraction) -> str:
    return str(x)


def parse_number(raw) -> Fraction:
    if isinstance(raw, bool):
        raise ParseError(f"expected a number, got {raw!r}")
    if isinstance(raw, (int, Fraction)):
        return Fraction(raw)
    if isinstance(raw, float):
        return Fraction(str(raw))
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"expected a number, got {raw!r}")


def _number_literal(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


def label(d: Description) -> str:
    """Canonical printable form of a description."""
    k, v = d.kind, d.value
    if k == "top":
        return "TOP"
    if k == "itemset":
        return "{" + ",".join(sorted(v)) + "}"
    if k == "interval":
        return "[]" if v is None else f"[{format_number(v[0])},{format_number(v[1])}]"
    if k == "ray":
        op, x = v
        return f"value{op}{format_number(x)}"
    if k in ("word", "explicit"):
        return v
    if k == "omega":
        return v if isinstance(v, str) else f"c({v})"
    if k in ("antichain", "downset"):
        if v is None:
            return "ALL"
        return "{" + ",".join(label(x) for x in sorted(v, key=sort_key)) + "}"
    return repr(v)


def sort_key(d: Description) -> tuple:
    """Total order on descriptions used for every canonical listing."""
    k, v = d.kind, d.value
    r = _KIND_RANK.get(k, 50)
    if k == "itemset":
        return (r, len(v), tuple(sorted(v)))
    if k == "interval":
        return (r, 1) if v is None else (r, 0, v[0], v[1])
    if k == "ray":
        return (r, _RAY_RANK[v[0]], v[1])
    if k == "word":
        return (r, v)
    if k == "explicit":
        return (r, v)
    if k == "omega":
        return (r, 0, v, "") if isinstance(v, int) else (r, 1, 0, v)
    if k in ("antichain", "downset"):
        if v is None:
            return (r, 1)
        return (r, 0, len(v), tuple(sort_key(x) for x in sorted(v, key=sort_key)))
    return (r,)


class SymbolicSet:
    """An infinite set of descriptions given by a membership predicate."""

    finite = False

    def __init__(self, name: str, predicate: Callable[[Description], bool]):
        self.name = name
        self._predicate = predicate

    def __contains__(self, d) -> bool:
        return bool(self._predicate(d))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"SymbolicSet({self.name!r})"


@dataclass(frozen=True)
class SpaceCaps:
    has_top: bool
    supports_minf_oracle: bool
    principal_ideals_finite: bool
    has_empty_extent_description: str  # "yes", "no" or "per-setup"


class DescriptionSpace:
    """Base class for description spaces.

    Subclasses implement ``_valid``, ``_leq`` and the parsing hooks; the
    remaining methods have generic implementations in terms of principal
    ideals that subclasses may override for speed.
    """

    kinds: frozenset = frozenset()
    name = "abstract"
    caps = SpaceCaps(False, False, True, "per-setup")

    # membership and order

    def _valid(self, d: Description) -> bool:
        return True

    def owns(self, d) -> bool:
        return isinstance(d, Description) and d.kind in self.kinds and self._valid(d)

    def check(self, d) -> Description:
        if not self.owns(d):
            raise SpaceMismatch(f"{d!r} is not a description of the {self.name} space")
        return d

    def _leq(self, c: Description, d: Description) -> bool:
        raise NotImplementedError

    def subsumes(self, c: Description, d: Description) -> bool:
        """True iff ``c ⊑ d`` (c is less specific than d)."""
        return self._leq(self.check(c), self.check(d))

    # ideals and bounds

    def _ideal(self, d: Description) -> frozenset:
        universe = self.universe()
        if universe is None:
            raise InfiniteIdeal(f"principal ideal of {d} is not enumerable")
        return frozenset(x for x in universe if self._leq(x, d)) | {d}

    def principal_ideal(self, d: Description) -> frozenset:
        return self._ideal(self.check(d))

    def _lower_bounds(self, descs: list) -> frozenset | SymbolicSet:
        first, rest = descs[0], descs[1:]
        return frozenset(x for x in self._ideal(first) if all(self._leq(x, y) for y in rest))

    def lower_bounds(self, descs: Iterable[Description]) -> frozenset | SymbolicSet:
        """Common lower bounds; the whole space (symbolically) for no input."""
        descs = [self.check(d) for d in descs]
        if not descs:
            return SymbolicSet("ALL", self.owns)
        return self._lower_bounds(descs)

    def multi_infima(self, descs: Iterable[Description]) -> MultiBound:
        """Maximal common lower bounds and whether they cover all of them."""
        descs = [self.check(d) for d in descs]
        if not descs:
            return MultiBound(self.max_elements(), self.covered_by_max())
        lower = self._lower_bounds(descs)
        if isinstance(lower, SymbolicSet):
            raise InfiniteIdeal(f"lower bounds of {descs} are infinite: {lower}")
        tops = [x for x in lower if not any(x != y and self._leq(x, y) for y in lower)]
        complete = all(any(self._leq(x, t) for t in tops) for x in lower)
        return MultiBound(tuple(sorted(tops, key=sort_key)), complete)

    def minf_of_pair_oracle(self, c: Description, d: Description) -> MultiBound:
        if not self.caps.supports_minf_oracle:
            raise UnsupportedCapability(f"{self.name} space has no multi-infima oracle")
        return self.multi_infima([c, d])

    # global shape

    def top(self) -> Description | None:
        return None

    def max_elements(self) -> tuple:
        universe = self.universe()
        if universe is None:
            raise UndefinedForSpace(f"maximal elements of the {self.name} space are not known")
        return tuple(x for x in universe if not any(x != y and self._leq(x, y) for y in universe))

    def covered_by_max(self) -> bool:
        """Whether every description lies below a maximal one."""
        universe = self.universe()
        if universe is None:
            raise UndefinedForSpace(f"cannot decide whether the {self.name} space is covered by its maxima")
        tops = self.max_elements()
        return all(any(self._leq(x, t) for t in tops) for x in universe)

    def universe(self) -> tuple | None:
        """All descriptions in canonical order, or ``None`` if infinite."""
        return None

    def representatives(self, deltas: Sequence[Description]) -> tuple:
        """Finite description set realizing every extent of the relevant fragment."""
        out: set = set()
        for d in deltas:
            out |= self.principal_ideal(d)
        return tuple(sorted(out, key=sort_key))

    def has_empty_extent(self, deltas: Sequence[Description]) -> bool:
        """Whether some description holds for none of ``deltas``."""
        top = self.top()
        if top is not None:
            return not any(self._leq(top, d) for d in deltas)
        universe = self.universe()
        if universe is None:
            raise UndefinedForSpace(f"empty-extent question undecidable for the {self.name} space")
        return any(not any(self._leq(x, d) for d in deltas) for x in universe)

    # serialization

    def parse(self, literal) -> Description:
        raise NotImplementedError

    def to_literal(self, d: Description):
        return label(d)

    def declaration(self) -> dict:
        return {"kind": self.name}

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class ItemsetSpace(DescriptionSpace):
    """Subsets of a finite attribute set ordered by inclusion."""

    kinds = frozenset({"itemset"})
    name = "itemset"
    caps = SpaceCaps(True, True, True, "per-setup")

    def __init__(self, attributes: Iterable[str]):
        attrs = list(attributes)
        if len(set(attrs)) != len(attrs):
            raise ParseError("duplicate attribute ids")
        self.attributes = tuple(sorted(attrs))
        self._attr_set = frozenset(attrs)

    def itemset(self, items: Iterable[str]) -> Description:
        return self.check(Description("itemset", frozenset(items)))

    def _valid(self, d):
        return isinstance(d.value, frozenset) and d.value <= self._attr_set

    def _leq(self, c, d):
        return c.value <= d.value

    def _ideal(self, d):
        items = sorted(d.value)
        return frozenset(
            Description("itemset", frozenset(sub))
            for k in range(len(items) + 1)
            for sub in combinations(items, k)
        )

    def _lower_bounds(self, descs):
        common = frozenset.intersection(*(d.value for d in descs))
        return self._ideal(Description("itemset", common))

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        if not descs:
            return MultiBound((self.top(),), True)
        common = frozenset.intersection(*(d.value for d in descs))
        return MultiBound((Description("itemset", common),), True)

    def top(self):
        return Description("itemset", self._attr_set)

    def max_elements(self):
        return (self.top(),)

    def covered_by_max(self):
        return True

    def universe(self):
        if len(self.attributes) > 20:
            return None
        return tuple(sorted(self._ideal(self.top()), key=sort_key))

    def parse(self, literal):
        if not isinstance(literal, list) or not all(isinstance(a, str) for a in literal):
            raise ParseError(f"itemset literal must be a list of attribute ids, got {literal!r}")
        d = Description("itemset", frozenset(literal))
        if not self._valid(d):
            raise ParseError(f"unknown attributes in {literal!r}")
        return d

    def to_literal(self, d):
        return sorted(d.value)

    def declaration(self):
        return {"kind": "itemset", "attributes": list(self.attributes)}

    def __repr__(self):
        return f"ItemsetSpace({list(self.attributes)})"


def _grid(values: Iterable) -> tuple:
    return tuple(sorted({parse_number(v) for v in values}))


class IntervalSpace(DescriptionSpace):
    """Closed intervals ordered by reverse inclusion, over a value grid.

    The empty interval (printed ``[]``) is the top element.
    """

    kinds = frozenset({"interval"})
    name = "intervals"
    caps = SpaceCaps(True, True, True, "per-setup")
    EMPTY = Description("interval", None)

    def __init__(self, grid: Iterable):
        self.grid = _grid(grid)

    def interval(self, lo, hi=None) -> Description:
        lo = parse_number(lo)
        hi = lo if hi is None else parse_number(hi)
        return self.check(Description("interval", (lo, hi)))

    def _valid(self, d):
        v = d.value
        return v is None or (
            isinstance(v, tuple) and len(v) == 2 and all(isinstance(x, Fraction) for x in v) and v[0] <= v[1]
        )

    def _leq(self, c, d):
        if d.value is None:
            return True
        if c.value is None:
            return False
        return c.value[0] <= d.value[0] and d.value[1] <= c.value[1]

    def _ideal(self, d):
        if d.value is None:
            return frozenset(self.universe())
        lo, hi = d.value
        out = {
            Description("interval", (a, b))
            for a in self.grid
            if a <= lo
            for b in self.grid
            if b >= hi
        }
        out.add(d)
        return frozenset(out)

    def _hull(self, descs) -> Description:
        finite = [d.value for d in descs if d.value is not None]
        if not finite:
            return self.EMPTY
        return Description("interval", (min(v[0] for v in finite), max(v[1] for v in finite)))

    def _lower_bounds(self, descs):
        return self._ideal(self._hull(descs))

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        return MultiBound((self._hull(descs),), True)

    def top(self):
        return self.EMPTY

    def max_elements(self):
        return (self.EMPTY,)

    def covered_by_max(self):
        return True

    def universe(self):
        out = [Description("interval", (a, b)) for a in self.grid for b in self.grid if a <= b]
        out.append(self.EMPTY)
        return tuple(sorted(out, key=sort_key))

    def parse(self, literal):
        if literal == [] or literal == "[]":
            return self.EMPTY
        if isinstance(literal, list) and len(literal) == 2:
            lo, hi = parse_number(literal[0]), parse_number(literal[1])
        elif isinstance(literal, list) and len(literal) == 1:
            lo = hi = parse_number(literal[0])
        else:
            lo = hi = parse_number(literal)
        if lo > hi:
            raise ParseError(f"interval {literal!r} has lo > hi")
        return Description("interval", (lo, hi))

    def to_literal(self, d):
        if d.value is None:
            return []
        return [_number_literal(d.value[0]), _number_literal(d.value[1])]

    def __repr__(self):
        return f"IntervalSpace({[format_number(x) for x in self.grid]})"


_RAY_RE = re.compile(r"^\s*(?:value\s*)?(<=|>=|=|≤|≥)?\s*(\S+)\s*$")


class RaySpace(DescriptionSpace):
    """Singletons {v} and rays value<=v, value>=v ordered by reverse region inclusion."""

    kinds = frozenset({"ray"})
    name = "rays"
    caps = SpaceCaps(False, True, True, "per-setup")

    def __init__(self, grid: Iterable):
        self.grid = _grid(grid)

    def ray(self, op: str, v) -> Description:
        return self.check(Description("ray", (op, parse_number(v))))

    def _valid(self, d):
        v = d.value
        return isinstance(v, tuple) and len(v) == 2 and v[0] in _RAY_RANK and isinstance(v[1], Fraction)

    def _leq(self, c, d):
        (cop, a), (dop, b) = c.value, d.value
        if cop == "=":
            return dop == "=" and a == b
        if cop == ">=":
            return dop in ("=", ">=") and b >= a
        return dop in ("=", "<=") and b <= a

    def max_elements(self):
        return tuple(Description("ray", ("=", v)) for v in self.grid)

    def covered_by_max(self):
        return True

    def universe(self):
        out = [Description("ray", (op, v)) for v in self.grid for op in _RAY_RANK]
        return tuple(sorted(out, key=sort_key))

    def parse(self, literal):
        if isinstance(literal, str):
            m = _RAY_RE.match(literal)
            if not m:
                raise ParseError(f"bad ray literal {literal!r}")
            op = {"≤": "<=", "≥": ">=", None: "="}.get(m.group(1), m.group(1))
            return Description("ray", (op, parse_number(m.group(2))))
        return Description("ray", ("=", parse_number(literal)))

    def to_literal(self, d):
        op, v = d.value
        return _number_literal(v) if op == "=" else label(d)

    def __repr__(self):
        return f"RaySpace({[format_number(x) for x in self.grid]})"


class WordSpace(DescriptionSpace):
    """Nonempty words over an alphabet ordered by the contiguous-substring relation."""

    kinds = frozenset({"word"})
    name = "words"
    caps = SpaceCaps(False, True, True, "yes")

    def __init__(self, alphabet: str):
        if not alphabet or len(set(alphabet)) != len(alphabet):
            raise ParseError(f"alphabet must be nonempty with distinct letters, got {alphabet!r}")
        self.alphabet = "".join(sorted(alphabet))
        self._letters = frozenset(alphabet)

    def word(self, w: str) -> Description:
        return self.check(Description("word", w))

    def _valid(self, d):
        return isinstance(d.value, str) and d.value != "" and set(d.value) <= self._letters

    def _leq(self, c, d):
        return c.value in d.value

    def _ideal(self, d):
        w = d.value
        return frozenset(
            Description("word", w[i:j]) for i in range(len(w)) for j in range(i + 1, len(w) + 1)
        )

    def _lower_bounds(self, descs):
        shortest = min(descs, key=lambda d: len(d.value))
        return frozenset(x for x in self._ideal(shortest) if all(x.value in y.value for y in descs))

    def max_elements(self):
        # every word is a strict substring of a longer one
        return ()

    def covered_by_max(self):
        return False

    def has_empty_extent(self, deltas):
        return True

    def parse(self, literal):
        if not isinstance(literal, str):
            raise ParseError(f"word literal must be a string, got {literal!r}")
        d = Description("word", literal)
        if not self._valid(d):
            raise ParseError(f"{literal!r} is not a nonempty word over {self.alphabet!r}")
        return d

    def to_literal(self, d):
        return d.value

    def declaration(self):
        return {"kind": "words", "alphabet": self.alphabet}

    def __repr__(self):
        return f"WordSpace({self.alphabet!r})"


class ExplicitSpace(DescriptionSpace):
    """The elements of a finite poset, with its order."""

    kinds = frozenset({"explicit"})
    name = "explicit"
    caps = SpaceCaps(False, True, True, "per-setup")

    def __init__(self, poset: FinitePoset):
        self.poset = poset
        self.caps = SpaceCaps(poset.top() is not None, True, True, "per-setup")

    def element(self, x) -> Description:
        return self.check(Description("explicit", x))

    def _valid(self, d):
        return d.value in self.poset

    def _leq(self, c, d):
        return self.poset.le(c.value, d.value)

    def _wrap(self, ids) -> tuple:
        return tuple(Description("explicit", x) for x in ids)

    def _ideal(self, d):
        return frozenset(self._wrap(self.poset.down_closure([d.value])))

    def _lower_bounds(self, descs):
        return frozenset(self._wrap(self.poset.lower_bounds([d.value for d in descs])))

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        mb = self.poset.multi_infima([d.value for d in descs])
        return MultiBound(self._wrap(mb.elements), mb.complete)

    def top(self):
        t = self.poset.top()
        return None if t is None else Description("explicit", t)

    def max_elements(self):
        return self._wrap(self.poset.maximal_elements(self.poset.elements))

    def covered_by_max(self):
        return self.poset.multi_infima(()).complete

    def universe(self):
        return self._wrap(self.poset.elements)

    def parse(self, literal):
        if not isinstance(literal, str) or literal not in self.poset:
            raise ParseError(f"{literal!r} is not an element of the explicit poset")
        return Description("explicit", literal)

    def to_literal(self, d):
        return d.value

    def declaration(self):
        from .io import poset_to_json

        return {"kind": "explicit", "poset": poset_to_json(self.poset)}

    def __repr__(self):
        return f"ExplicitSpace({self.poset!r})"


_OMEGA_RE = re.compile(r"^c\(?(\d+)\)?$")


class OmegaSpace(DescriptionSpace):
    """Infinite chain c(0) < c(1) < ... with two incomparable upper bounds a, b.

    The pair {a, b} has infinitely many common lower bounds and no maximal
    one.
    """

    kinds = frozenset({"omega"})
    name = "omega"
    caps = SpaceCaps(False, True, False, "per-setup")

    A = Description("omega", "a")
    B = Description("omega", "b")

    @staticmethod
    def c(i: int) -> Description:
        return Description("omega", int(i))

    def _valid(self, d):
        v = d.value
        return v in ("a", "b") or (isinstance(v, int) and not isinstance(v, bool) and v >= 0)

    def _leq(self, c, d):
        if isinstance(c.value, int):
            return not isinstance(d.value, int) or c.value <= d.value
        return c.value == d.value

    def _ideal(self, d):
        if not isinstance(d.value, int):
            raise InfiniteIdeal(f"principal ideal of {d} is infinite")
        return frozenset(self.c(i) for i in range(d.value + 1))

    def _lower_bounds(self, descs):
        chain = [d.value for d in descs if isinstance(d.value, int)]
        if chain:
            return self._ideal(self.c(min(chain)))
        tops = {d.value for d in descs}
        if len(tops) == 1:
            (t,) = tops
            return SymbolicSet(f"down({t})", lambda x, t=t: self.owns(x) and (x.value == t or isinstance(x.value, int)))
        return SymbolicSet("{c(i) | i in N}", lambda x: self.owns(x) and isinstance(x.value, int))

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        if not descs:
            return MultiBound((self.A, self.B), True)
        chain = [d.value for d in descs if isinstance(d.value, int)]
        if chain:
            return MultiBound((self.c(min(chain)),), True)
        tops = sorted({d.value for d in descs})
        if len(tops) == 1:
            return MultiBound((Description("omega", tops[0]),), True)
        return MultiBound((), False)

    def max_elements(self):
        return (self.A, self.B)

    def covered_by_max(self):
        return True

    def representatives(self, deltas):
        chain = [d.value for d in deltas if isinstance(d.value, int)]
        m = max(chain, default=-1) + 1
        return tuple(sorted([self.A, self.B] + [self.c(i) for i in range(m + 1)], key=sort_key))

    def has_empty_extent(self, deltas):
        return any(not any(self._leq(x, d) for d in deltas) for x in self.representatives(deltas))

    def parse(self, literal):
        if literal in ("a", "b"):
            return Description("omega", literal)
        if isinstance(literal, str):
            m = _OMEGA_RE.match(literal.strip())
            if m:
                return self.c(int(m.group(1)))
        raise ParseError(f"bad omega literal {literal!r}")

    def __repr__(self):
        return "OmegaSpace()"


class TopAugmented(DescriptionSpace):
    """A space with a synthetic largest element ``TOP`` added."""

    name = "top-augmented"

    def __init__(self, base: DescriptionSpace):
        self.base = base
        self.kinds = base.kinds | {"top"}
        self.name = base.name
        self.caps = SpaceCaps(True, base.caps.supports_minf_oracle, base.caps.principal_ideals_finite, "per-setup")

    def owns(self, d):
        return d == TOP or self.base.owns(d)

    def _leq(self, c, d):
        if d == TOP:
            return True
        if c == TOP:
            return False
        return self.base._leq(c, d)

    def _ideal(self, d):
        if d == TOP:
            universe = self.universe()
            if universe is None:
                raise InfiniteIdeal("principal ideal of TOP is the whole infinite space")
            return frozenset(universe)
        return self.base._ideal(d)

    def _lower_bounds(self, descs):
        rest = [d for d in descs if d != TOP]
        if not rest:
            universe = self.universe()
            return SymbolicSet("ALL", self.owns) if universe is None else frozenset(universe)
        return self.base._lower_bounds(rest)

    def multi_infima(self, descs):
        descs = [self.check(d) for d in descs]
        rest = [d for d in descs if d != TOP]
        if not rest:
            return MultiBound((TOP,), True)
        return self.base.multi_infima(rest)

    def top(self):
        return TOP

    def max_elements(self):
        return (TOP,)

    def covered_by_max(self):
        return True

    def universe(self):
        base = self.base.universe()
        return None if base is None else base + (TOP,)

    def representatives(self, deltas):
        rest = [d for d in deltas if d != TOP]
        out = self.base.representatives(rest) if rest else ()
        return out + (TOP,) if len(rest) < len(deltas) else out

    def has_empty_extent(self, deltas):
        return TOP not in deltas

    def parse(self, literal):
        return TOP if literal == "TOP" else self.base.parse(literal)

    def to_literal(self, d):
        return "TOP" if d == TOP else self.base.to_literal(d)

    def declaration(self):
        return {**self.base.declaration(), "augment_top": True}

    def __repr__(self):
        return f"TopAugmented({self.base!r})"


def augment_with_top(space: DescriptionSpace) -> DescriptionSpace:
    """Add a synthetic top.  Augmenting an augmented space returns it unchanged."""
    if isinstance(space, TopAugmented):
        return space
    return TopAugmented(space)


def restrict_to_relevant(space: DescriptionSpace, deltas: Iterable[Description]) -> FinitePoset:
    """The finite poset ↓δ[G] of descriptions holding for at least one object."""
    elements: set = set()
    for d in deltas:
        elements |= space.principal_ideal(d)
    return poset_from_order(elements, space._leq, key=sort_key)


def subsumes(space: DescriptionSpace, c: Description, d: Description) -> bool:
    return space.subsumes(c, d)


def principal_ideal(space: DescriptionSpace, d: Description) -> tuple:
    return tuple(sorted(space.principal_ideal(d), key=sort_key))


def minf_of_pair_oracle(space: DescriptionSpace, c: Description, d: Description) -> MultiBound:
    return space.minf_of_pair_oracle(c, d)
