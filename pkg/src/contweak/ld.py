"""Tuples indexed by pairs ``i < j`` of ``[d]`` and the lattice of clopen tuples.

A tuple is *closed* when ``f[i,j] (x) f[j,k] <= f[i,k]`` and *open* when
``f[i,k] <= f[i,j] (+) f[j,k]`` for every ``i < j < k``.  Clopen tuples form a
lattice whose join is the closure of the componentwise join and whose meet
is the interior of the componentwise meet.
"""
from __future__ import annotations

import itertools
from functools import reduce
from math import comb
from typing import Callable, Iterable, Mapping

from .algebra import Algebra
from .errors import InvariantError, MorphismError, NotClopenError, SizeError, StructureError

__all__ = [
    "LdTuple", "ClopenTuple", "pairs", "triples", "make_tuple", "as_clopen",
    "first_closed_violation", "first_open_violation", "is_closed", "is_open", "is_clopen",
    "closure", "interior", "closure_by_subdivisions", "interior_by_subdivisions",
    "componentwise_join", "componentwise_meet", "tuple_leq", "ld_join", "ld_meet",
    "tuple_star", "skew_metric", "map_tuple", "bottom_tuple", "top_tuple",
    "enumerate_clopens", "MAX_ENUMERATE_CANDIDATES",
]

MAX_ENUMERATE_CANDIDATES = 100_000


def pairs(d: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, d + 1), 2))


def triples(d: int) -> list[tuple[int, int, int]]:
    return list(itertools.combinations(range(1, d + 1), 3))


class LdTuple:
    """An element of ``Q^{C(d,2)}``; components are stored in lexicographic pair order."""

    __slots__ = ("algebra", "d", "components", "_index")

    def __init__(self, algebra: Algebra, d: int, components: Iterable):
        if d < 2:
            raise ValueError(f"dimension must be at least 2, got {d}")
        comps = tuple(components)
        if len(comps) != comb(d, 2):
            raise ValueError(f"expected {comb(d, 2)} components for d={d}, got {len(comps)}")
        self.algebra = algebra
        self.d = d
        self.components = comps
        self._index = {p: k for k, p in enumerate(pairs(d))}

    def __getitem__(self, ij: tuple[int, int]):
        try:
            return self.components[self._index[ij]]
        except KeyError:
            raise KeyError(f"no component {ij}; indices are pairs i < j in 1..{self.d}") from None

    def items(self):
        return zip(pairs(self.d), self.components)

    def as_dict(self) -> dict:
        return dict(self.items())

    def __eq__(self, other):
        return (isinstance(other, LdTuple) and self.algebra == other.algebra
                and self.d == other.d and self.components == other.components)

    def __hash__(self):
        return hash((self.algebra.name, self.d, self.components))

    def __repr__(self):
        body = ", ".join(f"{i}{j}: {c}" for (i, j), c in self.items())
        return f"{type(self).__name__}({self.algebra.name}, d={self.d}, {{{body}}})"


class ClopenTuple(LdTuple):
    """A tuple that has been checked to be both closed and open."""

    __slots__ = ()

    def __init__(self, algebra: Algebra, d: int, components: Iterable):
        super().__init__(algebra, d, components)
        bad = first_closed_violation(self)
        if bad is not None:
            raise NotClopenError("closed", bad)
        bad = first_open_violation(self)
        if bad is not None:
            raise NotClopenError("open", bad)


def make_tuple(algebra: Algebra, d: int, mapping: Mapping[tuple[int, int], object] | Callable,
               default=None) -> LdTuple:
    """Build a tuple from a ``{(i, j): element}`` mapping or a function of ``(i, j)``.

    Missing pairs take ``default`` (bottom when not given).
    """
    if callable(mapping):
        return LdTuple(algebra, d, (mapping(i, j) for i, j in pairs(d)))
    fill = algebra.bottom if default is None else default
    extra = set(mapping) - set(pairs(d))
    if extra:
        raise ValueError(f"invalid index pairs {sorted(extra)} for d={d}")
    return LdTuple(algebra, d, (mapping.get(p, fill) for p in pairs(d)))


def as_clopen(f: LdTuple) -> ClopenTuple:
    if isinstance(f, ClopenTuple):
        return f
    return ClopenTuple(f.algebra, f.d, f.components)


def _same_shape(f: LdTuple, g: LdTuple) -> None:
    if f.algebra != g.algebra or f.d != g.d:
        raise StructureError(
            f"tuples differ in shape: {f.algebra.name}/d={f.d} vs {g.algebra.name}/d={g.d}")


# --------------------------------------------------------------------------
# predicates

def first_closed_violation(f: LdTuple) -> tuple[int, int, int] | None:
    Q = f.algebra
    for i, j, k in triples(f.d):
        if not Q.leq(Q.tensor(f[i, j], f[j, k]), f[i, k]):
            return (i, j, k)
    return None


def first_open_violation(f: LdTuple) -> tuple[int, int, int] | None:
    Q = f.algebra
    for i, j, k in triples(f.d):
        if not Q.leq(f[i, k], Q.oplus(f[i, j], f[j, k])):
            return (i, j, k)
    return None


def is_closed(f: LdTuple) -> bool:
    return first_closed_violation(f) is None


def is_open(f: LdTuple) -> bool:
    return first_open_violation(f) is None


def is_clopen(f: LdTuple) -> bool:
    return is_closed(f) and is_open(f)


# --------------------------------------------------------------------------
# closure and interior

def _interval_dp(f: LdTuple, combine, product) -> LdTuple:
    # g[i,k] = f[i,k] combined with g[i,j] * g[j,k] over i < j < k, by increasing gap
    g = f.as_dict()
    for gap in range(2, f.d):
        for i in range(1, f.d - gap + 1):
            k = i + gap
            acc = g[i, k]
            for j in range(i + 1, k):
                acc = combine(acc, product(g[i, j], g[j, k]))
            g[i, k] = acc
    return LdTuple(f.algebra, f.d, (g[p] for p in pairs(f.d)))


def closure(f: LdTuple) -> LdTuple:
    """Least closed tuple above ``f``."""
    Q = f.algebra
    return _interval_dp(f, Q.join, Q.tensor)


def interior(f: LdTuple) -> LdTuple:
    """Greatest open tuple below ``f``."""
    Q = f.algebra
    return _interval_dp(f, Q.meet, Q.oplus)


def _subdivisions(i: int, k: int):
    inner = range(i + 1, k)
    for r in range(len(inner) + 1):
        for mid in itertools.combinations(inner, r):
            yield (i, *mid, k)


def _by_subdivisions(f: LdTuple, combine, product) -> LdTuple:
    def cell(i, k):
        values = (reduce(product, (f[a, b] for a, b in zip(s, s[1:]))) for s in _subdivisions(i, k))
        return reduce(combine, values)
    return LdTuple(f.algebra, f.d, (cell(i, k) for i, k in pairs(f.d)))


def closure_by_subdivisions(f: LdTuple) -> LdTuple:
    """Closure as the join, over all chains ``i = l0 < ... < lk = j``, of the tensor along the chain."""
    return _by_subdivisions(f, f.algebra.join, f.algebra.tensor)


def interior_by_subdivisions(f: LdTuple) -> LdTuple:
    return _by_subdivisions(f, f.algebra.meet, f.algebra.oplus)


# --------------------------------------------------------------------------
# lattice structure

def componentwise_join(f: LdTuple, g: LdTuple) -> LdTuple:
    _same_shape(f, g)
    return LdTuple(f.algebra, f.d, map(f.algebra.join, f.components, g.components))


def componentwise_meet(f: LdTuple, g: LdTuple) -> LdTuple:
    _same_shape(f, g)
    return LdTuple(f.algebra, f.d, map(f.algebra.meet, f.components, g.components))


def tuple_leq(f: LdTuple, g: LdTuple) -> bool:
    _same_shape(f, g)
    return all(map(f.algebra.leq, f.components, g.components))


def _certify(f: LdTuple, what: str) -> ClopenTuple:
    try:
        return as_clopen(f)
    except NotClopenError as exc:
        raise InvariantError(f"{what} produced a non-clopen tuple: {exc}") from exc


def ld_join(f: LdTuple, g: LdTuple) -> ClopenTuple:
    return _certify(closure(componentwise_join(f, g)), "ld_join")


def ld_meet(f: LdTuple, g: LdTuple) -> ClopenTuple:
    return _certify(interior(componentwise_meet(f, g)), "ld_meet")


def tuple_star(f: LdTuple) -> LdTuple:
    """``(f*)[i,j] = star(f[s(j), s(i)])`` with ``s(i) = d - i + 1``.

    Exchanges closed and open tuples, so clopens map to clopens.
    """
    Q = f.algebra
    if Q.star is None:
        raise StructureError(f"algebra {Q.name} has no involution")
    d = f.d
    comps = (Q.star(f[d - j + 1, d - i + 1]) for i, j in pairs(d))
    cls = ClopenTuple if isinstance(f, ClopenTuple) else LdTuple
    return cls(Q, d, comps)


def skew_metric(f: LdTuple, i: int, j: int):
    """``delta(i,j) = f[i,j]`` above the diagonal and ``star(f[j,i])`` below it."""
    if not (1 <= i <= f.d and 1 <= j <= f.d):
        raise ValueError(f"indices ({i}, {j}) outside 1..{f.d}")
    if i == j:
        raise ValueError("the diagonal of the skew metric is not available")
    if i < j:
        return f[i, j]
    if f.algebra.star is None:
        raise StructureError(f"algebra {f.algebra.name} has no involution")
    return f.algebra.star(f[j, i])


def map_tuple(psi: Callable, f: LdTuple, target: Algebra) -> ClopenTuple:
    """Apply a structure-preserving map componentwise; the image must be clopen."""
    image = LdTuple(target, f.d, map(psi, f.components))
    try:
        return as_clopen(image)
    except NotClopenError as exc:
        raise MorphismError(f"image under the map is not clopen: {exc}") from exc


def bottom_tuple(algebra: Algebra, d: int) -> ClopenTuple:
    return ClopenTuple(algebra, d, [algebra.bottom] * comb(d, 2))


def top_tuple(algebra: Algebra, d: int) -> ClopenTuple:
    return ClopenTuple(algebra, d, [algebra.top] * comb(d, 2))


def enumerate_clopens(algebra: Algebra, d: int, force: bool = False) -> list[ClopenTuple]:
    """All clopen tuples of a finite algebra, in lexicographic order of the carrier listing.

    The search extends partial tuples pair by pair and prunes a branch as soon
    as a triple whose three components are all assigned fails.
    """
    if algebra.elements is None:
        raise SizeError(f"algebra {algebra.name} has no finite carrier to enumerate")
    size = len(algebra.elements) ** comb(d, 2)
    if size > MAX_ENUMERATE_CANDIDATES and not force:
        raise SizeError(f"{size} candidate tuples exceed {MAX_ENUMERATE_CANDIDATES}; pass force=True")
    Q = algebra
    order = pairs(d)
    # triples that become fully assigned once the pair at position k is set
    position = {p: k for k, p in enumerate(order)}
    ready: list[list[tuple[int, int, int]]] = [[] for _ in order]
    for i, j, k in triples(d):
        last = max(position[i, j], position[j, k], position[i, k])
        ready[last].append((i, j, k))

    out: list[ClopenTuple] = []
    assigned: dict = {}

    def ok(i, j, k):
        a, b, c = assigned[i, j], assigned[j, k], assigned[i, k]
        return Q.leq(Q.tensor(a, b), c) and Q.leq(c, Q.oplus(a, b))

    def extend(pos):
        if pos == len(order):
            out.append(ClopenTuple(Q, d, (assigned[p] for p in order)))
            return
        for e in Q.elements:
            assigned[order[pos]] = e
            if all(ok(*t) for t in ready[pos]):
                extend(pos + 1)
        del assigned[order[pos]]

    extend(0)
    return out
