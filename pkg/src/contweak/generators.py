"""Seeded random instances: points, staircases, tuples and clopen step tuples."""
from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce

from .algebra import Algebra, step_algebra
from .irreducibles import e_point
from .ld import ClopenTuple, LdTuple, bottom_tuple, ld_join, pairs
from .paths import Point, Staircase, staircase_to_tuple
from .step import DENOMINATORS, random_rational

__all__ = ["random_point", "random_staircase", "random_step_clopen", "random_tuple"]


def random_point(rng: random.Random, d: int, denominators=DENOMINATORS) -> Point:
    return tuple(random_rational(rng, denominators) for _ in range(d))


def random_staircase(rng: random.Random, d: int, max_turns: int = 3,
                     denominators=DENOMINATORS) -> Staircase:
    """Interleave, in random order, increasing runs along each axis."""
    stops = []
    for _ in range(d):
        inner = {random_rational(rng, denominators) for _ in range(rng.randint(0, max_turns))}
        stops.append(sorted(v for v in inner if 0 < v < 1) + [Fraction(1)])
    pos = [Fraction(0)] * d
    vertices = [tuple(pos)]
    nxt = [0] * d
    while True:
        live = [i for i in range(d) if nxt[i] < len(stops[i])]
        if not live:
            break
        i = rng.choice(live)
        pos[i] = stops[i][nxt[i]]
        nxt[i] += 1
        vertices.append(tuple(pos))
    return Staircase(tuple(vertices))


def random_step_clopen(rng: random.Random, d: int, method: str | None = None,
                       denominators=DENOMINATORS) -> ClopenTuple:
    """A clopen step tuple, read off a random staircase or joined from random ``e_p``'s.

    ``method`` is ``"staircase"``, ``"join"`` or None for a fair coin.
    """
    if method is None:
        method = rng.choice(("staircase", "join"))
    if method == "staircase":
        return staircase_to_tuple(random_staircase(rng, d, denominators=denominators))
    if method == "join":
        points = [random_point(rng, d, denominators) for _ in range(rng.randint(1, 3))]
        return reduce(ld_join, map(e_point, points), bottom_tuple(step_algebra(), d))
    raise ValueError(f"unknown method {method!r}")


def random_tuple(rng: random.Random, algebra: Algebra, d: int) -> LdTuple:
    """Independent random components; usually neither closed nor open."""
    return LdTuple(algebra, d, (algebra.sample(rng) for _ in pairs(d)))
