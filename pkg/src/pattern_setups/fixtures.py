"""Reference datasets used by the tests and the ``fixtures`` command."""

from __future__ import annotations

from .errors import UnknownFixture
from .io import setup_from_json
from .setup import PatternSetup

__all__ = ["FIXTURE_NAMES", "fixture_dataset", "load_fixture", "exp_element_id"]


def _seq() -> dict:
    return {
        "space": {"kind": "words", "alphabet": "abc"},
        "objects": [
            {"id": "g1", "desc": "cab"},
            {"id": "g2", "desc": "cbba"},
            {"id": "g3", "desc": "a"},
            {"id": "g4", "desc": "bbc"},
        ],
    }


def _item() -> dict:
    return {
        "space": {"kind": "itemset", "attributes": ["a", "b", "c"]},
        "objects": [
            {"id": "g1", "desc": ["a", "b", "c"]},
            {"id": "g2", "desc": ["a"]},
            {"id": "g3", "desc": ["a"]},
            {"id": "g4", "desc": ["b", "c"]},
        ],
    }


def _numeric(kind: str) -> dict:
    values = [1, 3, 5, 9]
    return {
        "space": {"kind": kind},
        "objects": [{"id": f"g{i + 1}", "desc": v} for i, v in enumerate(values)],
    }


def _omega() -> dict:
    return {
        "space": {"kind": "omega"},
        "objects": [{"id": "g1", "desc": "a"}, {"id": "g2", "desc": "b"}],
    }


def exp_element_id(members) -> str:
    return "{" + ",".join(str(i) for i in sorted(members)) + "}"


def _exp(n: int) -> dict:
    if n < 3:
        raise ValueError("EXP(n) needs n >= 3 so that singletons and complements differ")
    full = set(range(1, n + 1))
    singles = [exp_element_id({i}) for i in sorted(full)]
    complements = [exp_element_id(full - {i}) for i in sorted(full)]
    leq = [
        [exp_element_id({i}), exp_element_id(full - {j})]
        for i in sorted(full)
        for j in sorted(full)
        if i != j
    ]
    return {
        "space": {"kind": "explicit", "poset": {"elements": singles + complements, "leq": leq}},
        "objects": [{"id": f"g{i}", "desc": exp_element_id(full - {i})} for i in sorted(full)],
    }


def _abba() -> dict:
    poset = {
        "elements": ["", "a", "b", "ab", "ba"],
        "leq": [["", "a"], ["", "b"], ["a", "ab"], ["a", "ba"], ["b", "ab"], ["b", "ba"]],
    }
    return {
        "space": {"kind": "explicit", "poset": poset},
        "objects": [{"id": "g1", "desc": "ab"}, {"id": "g2", "desc": "ba"}],
    }


_BUILDERS = {
    "SEQ": _seq,
    "ITEM": _item,
    "NUM": lambda: _numeric("rays"),
    "INTERVAL": lambda: _numeric("intervals"),
    "OMEGA": _omega,
    "ABBA": _abba,
}

FIXTURE_NAMES = ("SEQ", "ITEM", "NUM", "INTERVAL", "OMEGA", "EXP", "ABBA")


def fixture_dataset(name: str, n: int | None = None) -> dict:
    """Canonical JSON dataset of a named fixture (``EXP`` takes ``n``, default 4)."""
    key = name.upper()
    if key == "EXP":
        return _exp(4 if n is None else n)
    if key not in _BUILDERS:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return _BUILDERS[key]()


def load_fixture(name: str, n: int | None = None, *, max_objects: int = 20) -> PatternSetup:
    return setup_from_json(fixture_dataset(name, n), max_objects=max_objects)
