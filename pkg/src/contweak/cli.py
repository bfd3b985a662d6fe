"""Command-line interface.

Every subcommand reads JSON from ``-i FILE`` (or stdin, or a positional
argument where noted) and writes JSON to ``-o FILE`` or stdout.  Exit status
is 0 on success, 1 when a law or validation check fails (details go to
stderr as JSON) and 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from functools import reduce

from . import algebra as alg
from .embeddings import check_cocone, check_preservation, j_n, j_nm, lift_tuple
from .errors import InvariantError, MorphismError, NotClopenError, SizeError, StructureError
from .hasse import to_dot
from .irreducibles import jirr_decomposition, mirr_decomposition
from .ld import (
    as_clopen, closure, enumerate_clopens, first_closed_violation, first_open_violation,
    interior, ld_join, ld_meet, tuple_leq, tuple_star,
)
from .paths import path_point, staircase_to_tuple, tuple_to_staircase
from .serialize import (
    point_to_json, staircase_from_json, staircase_to_json,
    tuple_from_json, tuple_to_json, word_from_json,
)
from .words import word_to_tuple

__all__ = ["main", "build_parser"]


class CheckFailed(Exception):
    """A law or validation check failed; ``payload`` goes to stderr."""

    def __init__(self, payload):
        super().__init__(json.dumps(payload))
        self.payload = payload


def _read_text(args) -> str:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _read_json(args, text: str | None = None):
    if text is None:
        text = _read_text(args)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"malformed JSON input: {exc}") from exc


def _algebra(args) -> alg.Algebra:
    if getattr(args, "table", None):
        with open(args.table, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise StructureError(f"malformed table JSON: {exc}") from exc
        return alg.algebra_from_table(data, name=args.table)
    return alg.get_algebra(args.algebra)


def _read_tuple(args):
    data = _read_json(args)
    algebra = None
    if isinstance(data, dict) and "algebra" not in data:
        algebra = _algebra(args)
    return tuple_from_json(data, algebra)


def _require_clopen(f, label="input"):
    try:
        return as_clopen(f)
    except NotClopenError as exc:
        raise CheckFailed({"error": f"{label} is not clopen", "kind": exc.kind,
                           "triple": list(exc.triple)}) from exc


def _law_payload(reports):
    return [
        {"law": r.law, "passed": r.passed, "cases": r.cases, "exhaustive": r.exhaustive,
         "seed": r.seed, "counterexample": [str(c) for c in r.counterexample]}
        for r in reports
    ]


# --------------------------------------------------------------------------
# subcommands

def cmd_axioms(args):
    Q = _algebra(args)
    reports = alg.check_lbs_axioms(Q, args.budget, args.seed)
    if Q.star is not None:
        reports += alg.check_involutive_rl_axioms(Q, args.budget, args.seed)
    failed = [r for r in reports if not r.passed]
    if failed:
        raise CheckFailed({"algebra": Q.name, "failures": _law_payload(failed)})
    return {"algebra": Q.name, "laws": _law_payload(reports)}


def cmd_enumerate(args):
    if args.d is None:
        raise StructureError("enumerate needs --d")
    Q = _algebra(args)
    clopens = enumerate_clopens(Q, args.d, force=args.force)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(clopens, tuple_leq, label=_tuple_label))
    if args.count:
        return len(clopens)
    return [tuple_to_json(f) for f in clopens]


def _tuple_label(f) -> str:
    return " ".join(f"{i}{j}:{c}" for (i, j), c in f.items())


def cmd_clopen_check(args):
    f = _read_tuple(args)
    bad = first_closed_violation(f)
    if bad is not None:
        raise CheckFailed({"clopen": False, "kind": "closed", "triple": list(bad)})
    bad = first_open_violation(f)
    if bad is not None:
        raise CheckFailed({"clopen": False, "kind": "open", "triple": list(bad)})
    return {"clopen": True}


def cmd_closure(args):
    return tuple_to_json(closure(_read_tuple(args)))


def cmd_interior(args):
    return tuple_to_json(interior(_read_tuple(args)))


def _read_pair(args):
    data = _read_json(args)
    if not isinstance(data, list) or len(data) < 2:
        raise StructureError("expected a JSON array of at least two tuples")
    fallback = None
    if any(isinstance(t, dict) and "algebra" not in t for t in data):
        fallback = _algebra(args)
    tuples = [tuple_from_json(t, None if "algebra" in t else fallback) for t in data]
    return [_require_clopen(t, f"tuple {k}") for k, t in enumerate(tuples)]


def cmd_join(args):
    return tuple_to_json(reduce(ld_join, _read_pair(args)))


def cmd_meet(args):
    return tuple_to_json(reduce(ld_meet, _read_pair(args)))


def cmd_star(args):
    return tuple_to_json(tuple_star(_read_tuple(args)))


def cmd_word2tuple(args):
    text = args.word if args.word is not None else _read_text(args).strip()
    data = _read_json(args, text) if text.startswith(("{", '"')) else text
    w = word_from_json(data, args.n)
    return tuple_to_json(word_to_tuple(w))


def cmd_tuple2path(args):
    f = _require_clopen(_read_tuple(args))
    return staircase_to_json(tuple_to_staircase(f))


def cmd_path2tuple(args):
    return tuple_to_json(staircase_to_tuple(staircase_from_json(_read_json(args))))


def cmd_path_point(args):
    f = _require_clopen(_read_tuple(args))
    if not 1 <= args.i <= f.d:
        raise StructureError(f"--i must lie in 1..{f.d}")
    return point_to_json(path_point(f, args.i, args.x))


def cmd_decompose_jirr(args):
    f = _require_clopen(_read_tuple(args))
    return [point_to_json(p) for p in jirr_decomposition(f)]


def cmd_decompose_mirr(args):
    f = _require_clopen(_read_tuple(args))
    return [point_to_json(p) for p in mirr_decomposition(f)]


def cmd_embed(args):
    if args.n is None:
        raise StructureError("embed needs --n")
    emb = j_n(args.n) if args.m is None else j_nm(args.n, args.m)
    data = _read_json(args)
    f = tuple_from_json(data, emb.source if "algebra" not in data else None)
    if args.d is not None and f.d != args.d:
        raise StructureError(f"tuple has d={f.d}, but --d {args.d} was given")
    if f.algebra != emb.source:
        raise StructureError(f"--n {args.n} needs a tuple over {emb.source.name}, not {f.algebra.name}")
    f = _require_clopen(f)
    return tuple_to_json(lift_tuple(emb, f))


def cmd_cocone_check(args):
    n = args.n if args.n is not None else 2
    m = args.m if args.m is not None else 2
    sample = args.sample
    reports = [check_cocone(n, m, sample, args.seed)]
    reports += check_preservation(j_n(n), sample, args.seed)
    reports += check_preservation(j_nm(n, m), sample, args.seed)
    failed = [r for r in reports if not r.passed]
    if failed:
        raise CheckFailed({"failures": _law_payload(failed)})
    return {"laws": _law_payload(reports)}


COMMANDS = {
    "axioms": (cmd_axioms, "check the bisemigroup and involutive residuated lattice laws"),
    "enumerate": (cmd_enumerate, "list the clopen tuples of a finite algebra"),
    "clopen-check": (cmd_clopen_check, "test whether a tuple is closed and open"),
    "closure": (cmd_closure, "least closed tuple above the input"),
    "interior": (cmd_interior, "greatest open tuple below the input"),
    "join": (cmd_join, "lattice join of a JSON array of clopen tuples"),
    "meet": (cmd_meet, "lattice meet of a JSON array of clopen tuples"),
    "star": (cmd_star, "apply the involution to a tuple"),
    "word2tuple": (cmd_word2tuple, "encode a word as a clopen chain tuple"),
    "tuple2path": (cmd_tuple2path, "staircase of a clopen step tuple"),
    "path2tuple": (cmd_path2tuple, "clopen step tuple of a staircase"),
    "path-point": (cmd_path_point, "least point of the path with a given coordinate"),
    "decompose-jirr": (cmd_decompose_jirr, "points whose e_p join to the input"),
    "decompose-mirr": (cmd_decompose_mirr, "points whose m_p meet to the input"),
    "embed": (cmd_embed, "lift a chain tuple along j_n (or j_{n,m} with --m)"),
    "cocone-check": (cmd_cocone_check, "check lifting laws for the chain embeddings"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="input JSON file (default: stdin)")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--algebra", default="step", help="bool, sugihara, chain:N or step")
    common.add_argument("--table", help="JSON operation table defining a finite algebra")
    common.add_argument("--d", type=int, help="dimension")
    common.add_argument("--n", type=int, help="chain size or word multiplicity")
    common.add_argument("--seed", type=int, default=alg.DEFAULT_SEED)
    common.add_argument("--budget", type=int, default=alg.DEFAULT_BUDGET)
    common.add_argument("--force", action="store_true", help="override size guards")

    parser = argparse.ArgumentParser(prog="contweak", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "enumerate":
            p.add_argument("--count", action="store_true", help="print only the number of tuples")
            p.add_argument("--dot", help="write the Hasse diagram to this DOT file")
        elif name == "word2tuple":
            p.add_argument("word", nargs="?", help="word such as xyxy (default: read input)")
        elif name == "path-point":
            p.add_argument("--i", type=int, required=True, help="coordinate index")
            p.add_argument("--x", required=True, help="rational coordinate value")
        elif name in ("embed", "cocone-check"):
            p.add_argument("--m", type=int, help="refinement factor for j_{n,m}")
            if name == "cocone-check":
                p.add_argument("--sample", type=int, help="random maps instead of all of them")
    return parser


def _emit(args, result) -> None:
    text = result if isinstance(result, str) else json.dumps(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func = COMMANDS[args.command][0]
    try:
        result = func(args)
    except CheckFailed as exc:
        sys.stderr.write(json.dumps(exc.payload) + "\n")
        return 1
    except (InvariantError, MorphismError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 1
    except (StructureError, SizeError, ValueError, KeyError, TypeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(args, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
