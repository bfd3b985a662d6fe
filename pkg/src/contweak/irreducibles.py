"""Join- and meet-irreducible clopen step tuples and decompositions into them.

For a point ``p`` of the cube, ``e_p`` has components ``e<p_i, p_j>`` and is
join-irreducible whenever it is not bottom.  Dually ``m_p`` has components
``star(e<p_j, p_i>)``.  Every clopen step tuple is a finite join of ``e_p``'s
and a finite meet of ``m_p``'s.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import step
from .algebra import step_algebra
from .errors import StructureError
from .ld import ClopenTuple, LdTuple, bottom_tuple, ld_join, ld_meet, pairs, top_tuple, tuple_star
from .paths import Point, as_point

__all__ = [
    "mu_join", "big_m_join", "dim_join", "e_point", "jirr_leq", "cube",
    "jirr_decomposition", "join_of_points", "g_point", "f_point", "m_point",
    "mirr_decomposition", "meet_of_points",
]


def mu_join(p: Sequence) -> int:
    """First index ``i`` with ``p_i < 1``, or ``d + 1``."""
    return next((i for i, c in enumerate(p, 1) if c < 1), len(p) + 1)


def big_m_join(p: Sequence) -> int:
    """Last index ``j`` with ``p_j > 0``, or ``0``."""
    return max((j for j, c in enumerate(p, 1) if c > 0), default=0)


def dim_join(p: Sequence) -> int:
    return big_m_join(p) - mu_join(p)


def e_point(p: Sequence) -> ClopenTuple:
    p = as_point(p)
    return ClopenTuple(step_algebra(), len(p), (step.one_step(p[i - 1], p[j - 1]) for i, j in pairs(len(p))))


def jirr_leq(r: Sequence, p: Sequence) -> bool:
    """Whether ``e_r <= e_p``, decided from the coordinates alone."""
    r, p = as_point(r), as_point(p)
    if len(r) != len(p):
        raise ValueError("points have different dimensions")
    if dim_join(r) <= 0:
        raise StructureError(f"e_r is bottom for r = {tuple(map(str, r))}")
    lo, hi = mu_join(r), big_m_join(r)
    return (p[lo - 1] <= r[lo - 1] and r[hi - 1] <= p[hi - 1]
            and all(r[i - 1] == p[i - 1] for i in range(lo + 1, hi)))


def cube(p: Sequence, q: Sequence) -> ClopenTuple:
    """Components ``e<p_i, q_j>`` for ``p <= q``."""
    p, q = as_point(p), as_point(q)
    if len(p) != len(q):
        raise ValueError("points have different dimensions")
    if any(a > b for a, b in zip(p, q)):
        raise ValueError("cube corners must satisfy p <= q")
    return ClopenTuple(step_algebra(), len(p), (step.one_step(p[i - 1], q[j - 1]) for i, j in pairs(len(p))))


def jirr_decomposition(f: LdTuple) -> list[Point]:
    """Points ``p`` with ``e_p <= f`` whose join is ``f``.

    For each ``m < M`` and each ``x`` in ``{0}`` plus the breakpoints of
    ``f[m,M]``, the point has ``p_m = x``, ``p_i = f[m,i]`` read from the right
    at ``x`` for ``m < i <= M``, ones before ``m`` and zeros after ``M``.
    Bottom points are skipped.
    """
    if f.algebra != step_algebra():
        raise StructureError("decomposition needs step components")
    d = f.d
    out: list[Point] = []
    seen = set()
    one, zero = Fraction(1), Fraction(0)
    for m, big_m in pairs(d):
        for x in sorted({zero, *f[m, big_m].breakpoints}):
            p = tuple(
                one if i < m else x if i == m
                else step.eval_right(f[m, i], x) if i <= big_m else zero
                for i in range(1, d + 1)
            )
            if dim_join(p) > 0 and p not in seen:
                seen.add(p)
                out.append(p)
    return out


def join_of_points(points: Sequence[Point], d: int) -> ClopenTuple:
    return reduce(ld_join, (e_point(p) for p in points), bottom_tuple(step_algebra(), d))


def g_point(p: Sequence) -> ClopenTuple:
    """Components ``e<0, p_j>``."""
    p = as_point(p)
    return ClopenTuple(step_algebra(), len(p), (step.one_step(0, p[j - 1]) for _, j in pairs(len(p))))


def f_point(p: Sequence) -> ClopenTuple:
    """Components ``e<p_i, 1>``."""
    p = as_point(p)
    return ClopenTuple(step_algebra(), len(p), (step.one_step(p[i - 1], 1) for i, _ in pairs(len(p))))


def m_point(p: Sequence) -> ClopenTuple:
    """Components ``e<0, p_j> v e<p_i, 1>``, which is ``star(e<p_j, p_i>)``."""
    p = as_point(p)
    return ClopenTuple(step_algebra(), len(p), (
        step.canonicalize([(0, p[j - 1]), (p[i - 1], 1)]) for i, j in pairs(len(p))))


def mirr_decomposition(f: LdTuple) -> list[Point]:
    """Points ``p`` with ``f <= m_p`` whose meet is ``f``, by duality with :func:`jirr_decomposition`."""
    return [tuple(reversed(p)) for p in jirr_decomposition(tuple_star(f))]


def meet_of_points(points: Sequence[Point], d: int) -> ClopenTuple:
    return reduce(ld_meet, (m_point(p) for p in points), top_tuple(step_algebra(), d))
