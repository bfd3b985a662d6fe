"""Staircase paths in the rational cube and their clopen step tuples.

A clopen tuple ``f`` over the step quantale determines the chain
``C_f = {x : f[i,j](x_i) <= x_j for all i != j}``, where ``f[j,i] = star(f[i,j])``.
For step functions this chain is an axis-aligned staircase from ``0`` to ``1``
with finitely many corners.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import step
from .algebra import step_algebra
from .errors import InvariantError, StructureError
from .ld import ClopenTuple, LdTuple, pairs
from .words import MultiWord

__all__ = [
    "Point", "as_point", "Staircase", "tuple_to_staircase", "staircase_to_tuple",
    "path_point", "path_greatest_point", "path_contains", "word_to_staircase",
]

Point = tuple  # of Fractions in [0,1]


def as_point(coords: Iterable) -> Point:
    p = tuple(step.as_rat(c) for c in coords)
    for c in p:
        if not 0 <= c <= 1:
            raise ValueError(f"coordinate {c} outside [0,1]")
    return p


def _moving_axis(a: Point, b: Point) -> int:
    diff = [k for k in range(len(a)) if a[k] != b[k]]
    if len(diff) != 1:
        raise StructureError(f"consecutive vertices {_fmt(a)} and {_fmt(b)} differ in {len(diff)} coordinates")
    k = diff[0]
    if b[k] < a[k]:
        raise StructureError(f"path decreases from {_fmt(a)} to {_fmt(b)}")
    return k


def _fmt(p: Point) -> str:
    return "(" + ", ".join(map(str, p)) + ")"


@dataclass(frozen=True)
class Staircase:
    """Corner points of an axis-aligned monotone path from ``0`` to ``1``.

    Consecutive vertices differ in exactly one coordinate.  Vertices in the
    middle of a straight run are removed, so equal paths compare equal.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        if len(vs) < 2:
            raise StructureError("a staircase needs at least two vertices")
        d = len(vs[0])
        if any(len(v) != d for v in vs):
            raise StructureError("vertices have different dimensions")
        if vs[0] != (0,) * d or vs[-1] != (1,) * d:
            raise StructureError("a staircase runs from the origin to the all-ones point")
        axes = [_moving_axis(a, b) for a, b in zip(vs, vs[1:])]
        kept = [vs[0]]
        for k in range(1, len(vs) - 1):
            if axes[k - 1] != axes[k]:
                kept.append(vs[k])
        kept.append(vs[-1])
        object.__setattr__(self, "vertices", tuple(kept))

    @property
    def d(self) -> int:
        return len(self.vertices[0])

    def segments(self) -> list[tuple[Point, Point, int]]:
        vs = self.vertices
        return [(a, b, _moving_axis(a, b)) for a, b in zip(vs, vs[1:])]

    def __str__(self):
        return " -> ".join(map(_fmt, self.vertices))


def _require_step(f: LdTuple) -> None:
    if f.algebra != step_algebra():
        raise StructureError(f"paths need step components, not {f.algebra.name}")


def _component(f: LdTuple, i: int, j: int) -> step.StepFn:
    return f[i, j] if i < j else step.star(f[j, i])


def path_point(f: LdTuple, i0: int, x0) -> Point:
    """Least point of ``C_f`` whose ``i0``-th coordinate is ``x0``."""
    _require_step(f)
    x0 = step.as_rat(x0)
    if not 0 <= x0 <= 1:
        raise ValueError(f"{x0} outside [0,1]")
    return tuple(x0 if i == i0 else step.evaluate(_component(f, i0, i), x0)
                 for i in range(1, f.d + 1))


def path_greatest_point(f: LdTuple, i0: int, x0) -> Point:
    """Greatest point of ``C_f`` whose ``i0``-th coordinate is ``x0``."""
    _require_step(f)
    x0 = step.as_rat(x0)
    if not 0 <= x0 <= 1:
        raise ValueError(f"{x0} outside [0,1]")
    return tuple(x0 if i == i0 else step.eval_right(_component(f, i0, i), x0)
                 for i in range(1, f.d + 1))


def path_contains(f: LdTuple, p: Sequence) -> bool:
    _require_step(f)
    p = as_point(p)
    if len(p) != f.d:
        raise ValueError(f"point has {len(p)} coordinates, expected {f.d}")
    return all(
        step.evaluate(_component(f, i, j), p[i - 1]) <= p[j - 1]
        for i in range(1, f.d + 1) for j in range(1, f.d + 1) if i != j
    )


def tuple_to_staircase(f: LdTuple) -> Staircase:
    """Corners of ``C_f``.

    Every corner has a coordinate among the generator coordinates of the
    components, so the least and greatest points over that grid cover them.
    """
    _require_step(f)
    grid = {Fraction(0), Fraction(1)}
    for g in f.components:
        for x, y in g.steps:
            grid.update((x, y))
    points = set()
    for i0 in range(1, f.d + 1):
        for x0 in grid:
            points.add(path_point(f, i0, x0))
            points.add(path_greatest_point(f, i0, x0))
    ordered = sorted(points)
    for a, b in zip(ordered, ordered[1:]):
        if not all(s <= t for s, t in zip(a, b)):
            raise InvariantError(f"points {_fmt(a)} and {_fmt(b)} of the path are incomparable")
    try:
        return Staircase(tuple(ordered))
    except StructureError as exc:
        raise InvariantError(f"path corners are incomplete: {exc}") from exc


def staircase_to_tuple(c: Staircase) -> ClopenTuple:
    """``v[i,j](x) = min{y_j : y in C, y_i = x}``.

    A run along axis ``i`` starting at ``a`` with constant ``j``-coordinate
    ``c_j`` contributes the generator ``e<a, c_j>`` to ``v[i,j]``.
    """
    gens: dict[tuple[int, int], list] = {p: [] for p in pairs(c.d)}
    for a, _, axis in c.segments():
        i = axis + 1
        for j in range(i + 1, c.d + 1):
            gens[i, j].append((a[axis], a[j - 1]))
    comps = (step.canonicalize(gens[p]) for p in pairs(c.d))
    return ClopenTuple(step_algebra(), c.d, comps)


def word_to_staircase(w: MultiWord) -> Staircase:
    """The lattice path that reads ``w`` left to right, moving ``1/n`` along axis ``i`` for each letter ``i``."""
    pos = [Fraction(0)] * w.d
    vertices = [tuple(pos)]
    for letter in w.letters:
        pos[letter - 1] += Fraction(1, w.n)
        vertices.append(tuple(pos))
    return Staircase(tuple(vertices))
