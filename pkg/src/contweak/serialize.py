"""JSON encodings of elements, tuples, points, staircases and words.

Rationals are strings such as ``"1/2"``.  Elements of ``bool`` and
``sugihara`` are integers, chain maps are ``{"n": 2, "values": [0, 1]}``
(a bare list of values is also accepted) and step functions are
``{"steps": [{"x": "1/4", "y": "1/2"}]}``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import chain, step
from .algebra import Algebra, get_algebra
from .errors import StructureError
from .ld import LdTuple, pairs
from .paths import Point, Staircase, as_point
from .words import MultiWord, parse_word

__all__ = [
    "rat_to_json", "rat_from_json", "element_to_json", "element_from_json",
    "tuple_to_json", "tuple_from_json", "point_to_json", "point_from_json",
    "staircase_to_json", "staircase_from_json", "word_from_json", "dumps",
]


def rat_to_json(q) -> str:
    return str(q)


def rat_from_json(value) -> Fraction:
    if isinstance(value, float):
        raise StructureError(f"rational {value!r} must be given as a string or integer")
    try:
        return step.as_rat(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise StructureError(f"bad rational {value!r}") from exc


def element_to_json(algebra: Algebra, e) -> Any:
    if isinstance(e, step.StepFn):
        return {"steps": [{"x": rat_to_json(x), "y": rat_to_json(y)} for x, y in e.steps]}
    if isinstance(e, chain.ChainFn):
        return {"n": e.n, "values": list(e.values)}
    return e


def element_from_json(algebra: Algebra, data) -> Any:
    try:
        if algebra.name == "step":
            steps = data["steps"] if isinstance(data, dict) else data
            return step.canonicalize((rat_from_json(g["x"]), rat_from_json(g["y"])) for g in steps)
        if algebra.name.startswith("chain:"):
            n = int(algebra.name.split(":")[1])
            if isinstance(data, dict):
                if int(data.get("n", n)) != n:
                    raise StructureError(f"element for chain:{data['n']} given to {algebra.name}")
                data = data["values"]
            return chain.ChainFn(n, tuple(int(v) for v in data))
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"malformed {algebra.name} element {data!r}: {exc}") from exc
    if isinstance(data, bool) or not isinstance(data, int) or data not in algebra.elements:
        raise StructureError(f"{data!r} is not an element of {algebra.name}")
    return data


def tuple_to_json(f: LdTuple) -> dict:
    return {
        "d": f.d,
        "algebra": f.algebra.name,
        "components": {f"{i},{j}": element_to_json(f.algebra, c) for (i, j), c in f.items()},
    }


def tuple_from_json(data: dict, algebra: Algebra | None = None) -> LdTuple:
    """Decode a tuple; pairs missing from ``components`` default to bottom."""
    try:
        d = int(data["d"])
        if algebra is None:
            algebra = get_algebra(data["algebra"])
        comps = data.get("components", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"malformed tuple: {exc}") from exc
    if d < 2:
        raise StructureError("tuple dimension must be at least 2")
    valid = {f"{i},{j}" for i, j in pairs(d)}
    extra = set(comps) - valid
    if extra:
        raise StructureError(f"invalid component keys {sorted(extra)} for d={d}")
    return LdTuple(algebra, d, (
        element_from_json(algebra, comps[f"{i},{j}"]) if f"{i},{j}" in comps else algebra.bottom
        for i, j in pairs(d)
    ))


def point_to_json(p: Point) -> list[str]:
    return [rat_to_json(c) for c in p]


def point_from_json(data) -> Point:
    try:
        return as_point(rat_from_json(c) for c in data)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"malformed point {data!r}: {exc}") from exc


def staircase_to_json(c: Staircase) -> dict:
    return {"vertices": [point_to_json(v) for v in c.vertices]}


def staircase_from_json(data) -> Staircase:
    try:
        return Staircase(tuple(point_from_json(v) for v in data["vertices"]))
    except (KeyError, TypeError) as exc:
        raise StructureError(f"malformed staircase: {exc}") from exc


def word_from_json(data, n: int | None = None) -> MultiWord:
    """A word string like ``"xyxy"`` or ``{"d": 3, "n": 2, "word": [1, 2, 3, 1, 2, 3]}``."""
    if isinstance(data, str):
        return parse_word(data, n)
    try:
        return MultiWord(tuple(data["word"]), int(data["d"]), int(data["n"]))
    except (KeyError, TypeError) as exc:
        raise StructureError(f"malformed word: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)
