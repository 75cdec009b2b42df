"""JSON, CSV and DOT conversions."""

from __future__ import annotations

import csv
import io as _io
import json
import sys
from typing import Callable, Iterable

from .descspace import (
    Description,
    DescriptionSpace,
    ExplicitSpace,
    IntervalSpace,
    ItemsetSpace,
    OmegaSpace,
    RaySpace,
    WordSpace,
    augment_with_top,
)
from .errors import CycleDetected, ParseError, UnknownElement
from .poset import FinitePoset, build_poset
from .setup import PatternSetup

__all__ = [
    "read_json",
    "dumps",
    "poset_from_json",
    "poset_to_json",
    "space_from_json",
    "setup_from_json",
    "setup_to_json",
    "setup_from_csv",
    "is_poset_document",
    "hasse_dot",
    "concept_lattice_to_json",
    "concept_lattice_dot",
    "object_list",
]


def read_json(path: str):
    """Load JSON from a file path, or from stdin when ``path`` is ``-``."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# posets


def poset_from_json(obj) -> FinitePoset:
    if not isinstance(obj, dict) or not isinstance(obj.get("elements"), list):
        raise ParseError('a poset needs an "elements" list')
    elements = obj["elements"]
    if not all(isinstance(e, str) for e in elements):
        raise ParseError("poset element ids must be strings")
    pairs = obj.get("leq", [])
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p) for p in pairs
    ):
        raise ParseError('"leq" must be a list of [x, y] id pairs')
    try:
        return build_poset(elements, [tuple(p) for p in pairs])
    except ParseError:
        raise
    except (ValueError, CycleDetected, UnknownElement) as exc:
        raise ParseError(str(exc)) from None


def poset_to_json(p: FinitePoset, label: Callable = str) -> dict:
    """Elements plus the covering pairs, which generate the order."""
    return {
        "elements": [label(x) for x in p.elements],
        "leq": [[label(x), label(y)] for x, y in p.hasse_edges],
    }


def is_poset_document(obj) -> bool:
    return isinstance(obj, dict) and "elements" in obj and "objects" not in obj


# datasets


def _grid_values(space_kind: str, descs: Iterable[Description]) -> list:
    out = []
    for d in descs:
        if space_kind == "intervals" and d.value is not None:
            out.extend(d.value)
        elif space_kind == "rays":
            out.append(d.value[1])
    return out


def space_from_json(decl, literals: list | None = None) -> tuple[DescriptionSpace, list]:
    """Build a space from its declaration and parse the object literals.

    Interval and ray spaces take their grid from the declaration's optional
    ``"grid"`` field, or else from the parsed literals.
    """
    if not isinstance(decl, dict) or "kind" not in decl:
        raise ParseError('space declaration needs a "kind"')
    literals = literals or []
    kind = decl["kind"]
    if kind == "itemset":
        attrs = decl.get("attributes")
        if not isinstance(attrs, list) or not all(isinstance(a, str) for a in attrs):
            raise ParseError('itemset space needs an "attributes" list of strings')
        space: DescriptionSpace = ItemsetSpace(attrs)
    elif kind == "words":
        alphabet = decl.get("alphabet")
        if not isinstance(alphabet, str):
            raise ParseError('words space needs an "alphabet" string')
        space = WordSpace(alphabet)
    elif kind in ("intervals", "rays"):
        cls = IntervalSpace if kind == "intervals" else RaySpace
        parsed = [cls(()).parse(x) for x in literals]
        grid = decl.get("grid")
        if grid is None:
            grid = _grid_values(kind, parsed)
        elif not isinstance(grid, list):
            raise ParseError('"grid" must be a list of numbers')
        space = cls(grid)
    elif kind == "explicit":
        space = ExplicitSpace(poset_from_json(decl.get("poset")))
    elif kind == "omega":
        space = OmegaSpace()
    else:
        raise ParseError(f"unknown space kind {kind!r}")
    if decl.get("augment_top", False):
        space = augment_with_top(space)
    return space, [space.parse(x) for x in literals]


def setup_from_json(obj, *, max_objects: int = 20) -> PatternSetup:
    if not isinstance(obj, dict) or "space" not in obj or not isinstance(obj.get("objects"), list):
        raise ParseError('a dataset needs "space" and an "objects" list')
    ids, literals = [], []
    for entry in obj["objects"]:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str) or "desc" not in entry:
            raise ParseError(f'each object needs a string "id" and a "desc": {entry!r}')
        ids.append(entry["id"])
        literals.append(entry["desc"])
    if not ids:
        raise ParseError("a dataset needs at least one object")
    if len(set(ids)) != len(ids):
        raise ParseError("object ids must be unique")
    space, descs = space_from_json(obj["space"], literals)
    return PatternSetup(ids, space, dict(zip(ids, descs)), max_objects=max_objects)


def setup_to_json(setup: PatternSetup) -> dict:
    return {
        "space": setup.space.declaration(),
        "objects": [{"id": g, "desc": setup.space.to_literal(setup.delta[g])} for g in setup.objects],
    }


def setup_from_csv(text: str, kind: str = "itemset", *, max_objects: int = 20) -> PatternSetup:
    """Read a CSV dataset.

    The first column holds object ids.  For ``kind="itemset"`` the other
    columns are attributes with 0/1 cells; for ``"intervals"`` or
    ``"rays"`` there is exactly one numeric value column.
    """
    rows = list(csv.reader(_io.StringIO(text)))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if len(rows) < 2:
        raise ParseError("CSV needs a header row and at least one object row")
    header, body = [h.strip() for h in rows[0]], rows[1:]
    objects = []
    if kind == "itemset":
        attrs = header[1:]
        for r in body:
            if len(r) != len(header):
                raise ParseError(f"row {r!r} has {len(r)} cells, expected {len(header)}")
            cells = [c.strip() for c in r[1:]]
            if any(c not in ("0", "1") for c in cells):
                raise ParseError(f"itemset cells must be 0 or 1 in row {r!r}")
            objects.append({"id": r[0].strip(), "desc": [a for a, c in zip(attrs, cells) if c == "1"]})
        decl = {"kind": "itemset", "attributes": attrs}
    elif kind in ("intervals", "rays"):
        if len(header) != 2:
            raise ParseError("numeric CSV needs exactly an id column and one value column")
        for r in body:
            if len(r) != 2:
                raise ParseError(f"row {r!r} must have two cells")
            objects.append({"id": r[0].strip(), "desc": r[1].strip()})
        decl = {"kind": kind}
    else:
        raise ParseError(f"unsupported CSV kind {kind!r}")
    return setup_from_json({"space": decl, "objects": objects}, max_objects=max_objects)


def object_list(setup: PatternSetup, A: Iterable[str]) -> list:
    A = frozenset(A)
    return [g for g in setup.objects if g in A]


# DOT


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def hasse_dot(p: FinitePoset, *, name: str = "poset", label: Callable = str) -> str:
    """Hasse diagram in DOT; each edge goes from the lower to the higher element."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, x in enumerate(p.elements):
        lines.append(f"  n{i} [label={_quote(label(x))}];")
    for x, y in p.hasse_edges:
        lines.append(f"  n{p.index(x)} -> n{p.index(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _intent_literal(space: DescriptionSpace, d: Description):
    return space.to_literal(d)


def concept_lattice_to_json(lattice, setup: PatternSetup) -> dict:
    return {
        "concepts": [
            {"extent": object_list(setup, c.extent), "intent": _intent_literal(setup.space, c.intent)}
            for c in lattice.concepts
        ],
        "hasse": [[i, j] for i, j in lattice.hasse],
    }


def concept_lattice_dot(lattice, setup: PatternSetup, *, name: str = "concepts") -> str:
    def label(i: int) -> str:
        c = lattice.concepts[i]
        return f"{setup.format_set(c.extent)}\n{c.intent}"

    return hasse_dot(lattice.order, name=name, label=label)
