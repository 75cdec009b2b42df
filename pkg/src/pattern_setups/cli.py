"""Command-line interface.

Every command reads a JSON document (a dataset, or a poset for the poset
commands) from a path or from stdin (``-``) and writes JSON or DOT to
stdout.  Exit status: 0 on success, 2 on invalid input or an unmet
precondition, 3 when an enumeration cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .completion import (
    DEFAULT_MAX_ANTICHAINS,
    antichain_completion_of_poset,
    antichain_completion_of_setup,
    completion_iff_theorem,
    completion_report,
    dedekind_macneille,
    direct_completion,
)
from .descspace import augment_with_top
from .errors import CapExceeded, PatternSetupError
from .fixtures import FIXTURE_NAMES, fixture_dataset
from .io import (
    concept_lattice_dot,
    concept_lattice_to_json,
    dumps,
    hasse_dot,
    is_poset_document,
    object_list,
    poset_from_json,
    poset_to_json,
    read_json,
    setup_from_json,
    setup_to_json,
)
from .poset import classify
from .structure import concept_lattice, is_pattern_structure

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 2, 3

COMMANDS = (
    "classify-poset",
    "extents",
    "upper-approx",
    "support-closed",
    "implications",
    "minimal-rep",
    "check-multistructure",
    "check-structure",
    "concepts",
    "complete",
    "dm",
    "stats",
    "fixtures",
)


class _Usage(PatternSetupError):
    pass


def _options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--augment-top", action="store_true", help="add a synthetic top description")
    common.add_argument("--complete", choices=("antichain", "direct"), help="work on a completion of the setup")
    common.add_argument("--output", choices=("json", "dot"), default="json")
    common.add_argument("--max-objects", type=int, default=20, help="cap for 2^|G| loops (default 20)")
    common.add_argument(
        "--max-antichains", type=int, default=DEFAULT_MAX_ANTICHAINS, help="cap for antichain enumeration"
    )
    common.add_argument("-o", "--out", help="write to this file instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _options()
    parser = argparse.ArgumentParser(prog="pattern-setups", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_text: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if needs_input:
            p.add_argument("input", help="JSON file, or - for stdin")
        return p

    add("classify-poset", "classify a poset (or the relevant fragment of a dataset)")
    add("extents", "list the definable extents")
    p = add("upper-approx", "minimal definable supersets of an object set")
    p.add_argument("--objects", required=True, help="comma-separated object ids (empty for the empty set)")
    add("support-closed", "list the support-closed descriptions")
    p = add("implications", "pattern implications and extent-equivalence classes")
    p.add_argument("--pattern", nargs=2, action="append", metavar=("LHS", "RHS"), help="JSON literals to test")
    p.add_argument("--objects-pair", nargs=2, action="append", metavar=("A", "B"), help="comma-separated object sets")
    add("minimal-rep", "minimal representation as a dataset over an explicit space")
    add("check-multistructure", "test cov(A) = ↓cov*(A) for every object subset")
    add("check-structure", "test for a greatest common description of every object subset")
    add("concepts", "concept lattice of a pattern structure")
    add("complete", "completion report (defaults to the antichain completion)")
    add("dm", "Dedekind-MacNeille completion of a poset (or of a dataset fragment)")
    add("stats", "extent counts before and after completion")
    p = add("fixtures", "print a reference dataset", needs_input=False)
    p.add_argument("name", help=f"one of {', '.join(FIXTURE_NAMES)}")
    p.add_argument("n", nargs="?", type=int, help="size parameter for EXP")
    return parser


# helpers


def _literal(raw: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def _objects_arg(raw: str) -> list:
    return [g.strip() for g in raw.split(",") if g.strip()]


def _load_setup(args):
    doc = read_json(args.input)
    setup = setup_from_json(doc, max_objects=args.max_objects)
    if args.augment_top:
        setup = setup.replace(space=augment_with_top(setup.space))
    return setup


def _maybe_completed(setup, args):
    if args.complete == "antichain":
        return antichain_completion_of_setup(setup, max_antichains=args.max_antichains)
    if args.complete == "direct":
        return direct_completion(setup, max_antichains=args.max_antichains)
    return setup


def _load_poset(args):
    doc = read_json(args.input)
    if is_poset_document(doc):
        return poset_from_json(doc)
    setup = setup_from_json(doc, max_objects=args.max_objects)
    if args.augment_top:
        setup = setup.replace(space=augment_with_top(setup.space))
    return setup.relevant_fragment()


def _require_json(args, command: str) -> None:
    if args.output == "dot":
        raise _Usage(f"{command} has no DOT rendering; use --output json")


def _set_list(setup, family) -> list:
    return [object_list(setup, A) for A in family]


# commands


def cmd_classify_poset(args):
    p = _load_poset(args)
    if args.output == "dot":
        return hasse_dot(p)
    return classify(p).to_dict()


def cmd_extents(args):
    _require_json(args, "extents")
    setup = _maybe_completed(_load_setup(args), args)
    family = setup.definable_extents()
    space = setup.space
    return {
        "count": len(family),
        "extents": [
            {
                "extent": object_list(setup, E),
                "witness": None if family.provenance.get(E) is None else space.to_literal(family.provenance[E]),
            }
            for E in family
        ],
    }


def cmd_upper_approx(args):
    _require_json(args, "upper-approx")
    setup = _maybe_completed(_load_setup(args), args)
    A = setup.object_set(_objects_arg(args.objects))
    return {"objects": object_list(setup, A), "upper_approximations": _set_list(setup, setup.upper_approximations(A))}


def cmd_support_closed(args):
    _require_json(args, "support-closed")
    setup = _maybe_completed(_load_setup(args), args)
    return {"descriptions": [setup.space.to_literal(d) for d in setup.support_closed_set()]}


def cmd_implications(args):
    _require_json(args, "implications")
    setup = _maybe_completed(_load_setup(args), args)
    space = setup.space
    pairs = None
    if args.pattern:
        pairs = [(space.parse(_literal(a)), space.parse(_literal(b))) for a, b in args.pattern]
    object_pairs = [(_objects_arg(a), _objects_arg(b)) for a, b in (args.objects_pair or [])]
    report = setup.implications(pairs, object_pairs)
    return {
        "pattern_implications": [
            {"lhs": space.to_literal(c), "rhs": space.to_literal(d), "holds": ok} for c, d, ok in report.pattern_verdicts
        ],
        "equivalence_classes": [
            {"extent": object_list(setup, E), "descriptions": [space.to_literal(d) for d in ds]}
            for E, ds in report.equivalence_classes
        ],
        "object_implications": [
            {"lhs": object_list(setup, A), "rhs": object_list(setup, B), "holds": ok}
            for A, B, ok in report.object_verdicts
        ],
    }


def cmd_minimal_rep(args):
    _require_json(args, "minimal-rep")
    setup = _maybe_completed(_load_setup(args), args)
    return setup_to_json(setup.minimal_representation())


def _witness_report(setup, report) -> dict:
    return {
        "holds": report.holds,
        "witness": None if report.witness is None else object_list(setup, report.witness),
        "witnesses": _set_list(setup, report.witnesses),
    }


def cmd_check_multistructure(args):
    _require_json(args, "check-multistructure")
    setup = _maybe_completed(_load_setup(args), args)
    return _witness_report(setup, setup.is_multistructure())


def cmd_check_structure(args):
    _require_json(args, "check-structure")
    setup = _maybe_completed(_load_setup(args), args)
    return _witness_report(setup, is_pattern_structure(setup))


def cmd_concepts(args):
    setup = _maybe_completed(_load_setup(args), args)
    lattice = concept_lattice(setup)
    if args.output == "dot":
        return concept_lattice_dot(lattice, setup)
    return concept_lattice_to_json(lattice, setup)


def cmd_complete(args):
    setup = _load_setup(args)
    kind = args.complete or "antichain"
    if args.output == "dot":
        completed = _maybe_completed(setup, argparse.Namespace(**{**vars(args), "complete": kind}))
        return concept_lattice_dot(concept_lattice(completed), completed)
    report = completion_report(setup, kind, max_antichains=args.max_antichains)
    out = {
        "kind": kind,
        "base_extent_count": report.base_extent_count,
        "completed_extent_count": report.completed_extent_count,
        "new_extents": _set_list(setup, report.new_extents),
        "is_structure_after": report.is_structure_after,
    }
    if kind == "antichain":
        iff = completion_iff_theorem(setup, max_antichains=args.max_antichains)
        out["iff"] = {
            "is_multistructure": iff.is_multistructure,
            "completion_is_structure": iff.completion_is_structure,
            "equivalence_holds": iff.equivalence_holds,
            "extents_match_intersections": iff.extents_match,
            "multistructure_witnesses": _set_list(setup, iff.multistructure_witnesses),
        }
    return out


def cmd_dm(args):
    p = _load_poset(args)
    dm = dedekind_macneille(p, max_cuts=args.max_antichains)
    if args.output == "dot":
        return hasse_dot(dm.poset, name="dm", label=dm.label)
    index = {c: i for i, c in enumerate(dm.poset.elements)}
    return {
        "cuts": [[str(x) for x in p.members(p.mask(c))] for c in dm.poset.elements],
        "hasse": [[index[a], index[b]] for a, b in dm.poset.hasse_edges],
        "embedding": {str(x): index[c] for x, c in dm.embedding.items()},
        "is_embedding": dm.is_embedding,
        "isomorphic_to_base": dm.isomorphic_to_base,
        "isomorphic_modulo_bottom": dm.isomorphic_modulo_bottom,
        "is_complete_lattice": classify(dm.poset, multilattice=False).is_complete_lattice,
    }


def cmd_stats(args):
    _require_json(args, "stats")
    setup = _load_setup(args)
    kind = args.complete or "antichain"
    report = completion_report(setup, kind, max_antichains=args.max_antichains)
    return {"base_extents": report.base_extent_count, "completed_extents": report.completed_extent_count}


def cmd_fixtures(args):
    _require_json(args, "fixtures")
    doc = fixture_dataset(args.name, args.n)
    setup_from_json(doc)  # fixtures must round-trip
    return doc


_HANDLERS = {name: globals()["cmd_" + name.replace("-", "_")] for name in COMMANDS}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        result = _HANDLERS[args.command](args)
    except CapExceeded as exc:
        _diagnose(stderr, args.command, exc)
        return EXIT_CAP
    except (PatternSetupError, ValueError) as exc:
        _diagnose(stderr, args.command, exc)
        return EXIT_INVALID
    text = result if isinstance(result, str) else dumps(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def _diagnose(stream, command: str, exc: Exception) -> None:
    payload = {"command": command, "error": type(exc).__name__, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        payload["witness"] = sorted(witness)
    stream.write(dumps(payload))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
