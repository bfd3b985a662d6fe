"""The quantale of join-continuous endofunctions of the finite chain {0, ..., n}.

A join-continuous map fixes 0, so a :class:`ChainFn` stores only the values
at ``1..n``.  ``tensor`` is diagrammatic composition, ``star`` the involution
``star(f)(x) = max{y : f(y) < x}`` and ``oplus`` its dual product.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import SizeError

__all__ = [
    "ChainFn", "MAX_ENUMERATE", "enumerate_chain", "identity", "zero", "bottom", "top",
    "tensor", "star", "oplus", "join", "meet", "leq",
    "meetof", "joinof", "left_adjoint", "right_adjoint", "random_chainfn",
]

MAX_ENUMERATE = 6


@dataclass(frozen=True, order=True)
class ChainFn:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("chain size must be at least 1")
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(values)}")
        prev = 0
        for v in values:
            if v < prev or v > self.n:
                raise ValueError(f"values {values} are not a monotone map into 0..{self.n}")
            prev = v

    def __call__(self, x: int) -> int:
        if not 0 <= x <= self.n:
            raise ValueError(f"{x} outside 0..{self.n}")
        return 0 if x == 0 else self.values[x - 1]

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


def _same_n(f: ChainFn, g: ChainFn) -> int:
    if f.n != g.n:
        raise ValueError(f"chain sizes differ: {f.n} vs {g.n}")
    return f.n


def enumerate_chain(n: int) -> list[ChainFn]:
    """All join-continuous maps on {0..n}, lexicographically; there are C(2n, n)."""
    if not 1 <= n <= MAX_ENUMERATE:
        raise SizeError(f"enumeration supported for 1 <= n <= {MAX_ENUMERATE}, got {n}")
    return [ChainFn(n, v) for v in combinations_with_replacement(range(n + 1), n)]


def identity(n: int) -> ChainFn:
    return ChainFn(n, tuple(range(1, n + 1)))


def bottom(n: int) -> ChainFn:
    return ChainFn(n, (0,) * n)


def top(n: int) -> ChainFn:
    return ChainFn(n, (n,) * n)


def zero(n: int) -> ChainFn:
    """The dualizing element ``star(identity)``: ``x -> x - 1``."""
    return ChainFn(n, tuple(range(n)))


def tensor(f: ChainFn, g: ChainFn) -> ChainFn:
    _same_n(f, g)
    return ChainFn(f.n, tuple(g(v) for v in f.values))


def star(f: ChainFn) -> ChainFn:
    n = f.n
    # f(0) = 0 < x, so the set is never empty
    return ChainFn(n, tuple(max(y for y in range(n + 1) if f(y) < x) for x in range(1, n + 1)))


def oplus(f: ChainFn, g: ChainFn) -> ChainFn:
    _same_n(f, g)
    return star(tensor(star(g), star(f)))


def join(f: ChainFn, g: ChainFn) -> ChainFn:
    _same_n(f, g)
    return ChainFn(f.n, tuple(map(max, f.values, g.values)))


def meet(f: ChainFn, g: ChainFn) -> ChainFn:
    _same_n(f, g)
    return ChainFn(f.n, tuple(map(min, f.values, g.values)))


def leq(f: ChainFn, g: ChainFn) -> bool:
    _same_n(f, g)
    return all(a <= b for a, b in zip(f.values, g.values))


# Meet-continuous maps on {0..n} are given as full value vectors over 0..n.

def meetof(f: ChainFn) -> tuple[int, ...]:
    """``x -> min_{x < x'} f(x')``: ``f(x + 1)`` below ``n`` and ``n`` at ``n``."""
    return tuple(f(x + 1) for x in range(f.n)) + (f.n,)


def joinof(g: tuple[int, ...]) -> ChainFn:
    """Inverse of :func:`meetof`: ``x -> g(x - 1)``, with 0 at 0."""
    n = len(g) - 1
    if g[n] != n:
        raise ValueError("a meet-continuous map must fix the top")
    return ChainFn(n, tuple(g[x - 1] for x in range(1, n + 1)))


def right_adjoint(f: ChainFn) -> tuple[int, ...]:
    """``q -> max{p : f(p) <= q}`` as a vector over 0..n."""
    n = f.n
    return tuple(max(p for p in range(n + 1) if f(p) <= q) for q in range(n + 1))


def left_adjoint(g: tuple[int, ...]) -> ChainFn:
    """Left adjoint of a meet-continuous vector ``g``: ``q -> min{p : q <= g(p)}``."""
    n = len(g) - 1
    return ChainFn(n, tuple(min(p for p in range(n + 1) if q <= g[p]) for q in range(1, n + 1)))


def random_chainfn(rng: random.Random, n: int) -> ChainFn:
    return ChainFn(n, tuple(sorted(rng.randint(0, n) for _ in range(n))))
