"""Embeddings of finite chains and the induced lifting of endofunctions.

An embedding ``iota`` of a finite chain ``{0..n}`` into a larger chain, with
left adjoint ``ell`` (a ceiling) and right adjoint ``rho`` (a floor), lifts a
join-continuous ``f`` to ``iota o f o ell``.  Two families are provided:
``j_n`` into the unit interval (``x -> x/n``) and ``j_{n,m}`` into
``{0..nm}`` (``x -> m x``).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import chain, step
from .algebra import Algebra, DEFAULT_SEED, LawReport, chain_algebra, step_algebra
from .errors import InvariantError, MorphismError, NotClopenError, StructureError
from .ld import ClopenTuple, LdTuple, as_clopen, is_clopen

__all__ = [
    "ChainEmbedding", "j_n", "j_nm", "identity_embedding", "lift", "lift_tuple",
    "check_cocone", "check_preservation", "is_in_LR", "DEFAULT_DENOMINATOR_CAP",
]

DEFAULT_DENOMINATOR_CAP = 1000


@dataclass(frozen=True)
class ChainEmbedding:
    """``kind`` is ``"j_n"`` (into the unit interval), ``"j_nm"`` (into ``{0..nm}``) or ``"id"``."""

    kind: str
    n: int
    m: int = 1

    def __post_init__(self):
        if self.kind not in ("j_n", "j_nm", "id"):
            raise ValueError(f"unknown embedding kind {self.kind!r}")
        if self.n < 1 or self.m < 1:
            raise ValueError("embedding parameters must be positive")

    @property
    def source(self) -> Algebra:
        return chain_algebra(self.n)

    @property
    def target(self) -> Algebra:
        if self.kind == "j_n":
            return step_algebra()
        return chain_algebra(self.n * self.m)

    def iota(self, x: int):
        if not 0 <= x <= self.n:
            raise ValueError(f"{x} outside 0..{self.n}")
        if self.kind == "j_n":
            return Fraction(x, self.n)
        return x * self.m if self.kind == "j_nm" else x

    def ell(self, t) -> int:
        """Ceiling: the least ``x`` with ``t <= iota(x)``."""
        if self.kind == "j_n":
            return math.ceil(step.as_rat(t) * self.n)
        return -(-t // self.m) if self.kind == "j_nm" else t

    def rho(self, t) -> int:
        """Floor: the greatest ``x`` with ``iota(x) <= t``."""
        if self.kind == "j_n":
            return math.floor(step.as_rat(t) * self.n)
        return t // self.m if self.kind == "j_nm" else t

    def to_json(self) -> dict:
        out = {"kind": self.kind, "n": self.n}
        if self.kind == "j_nm":
            out["m"] = self.m
        return out


def j_n(n: int) -> ChainEmbedding:
    return ChainEmbedding("j_n", n)


def j_nm(n: int, m: int) -> ChainEmbedding:
    return ChainEmbedding("j_nm", n, m)


def identity_embedding(n: int) -> ChainEmbedding:
    return ChainEmbedding("id", n)


def lift(emb: ChainEmbedding, f: chain.ChainFn):
    """``iota o f o ell``: a step function for ``j_n``, a chain map otherwise."""
    if not isinstance(f, chain.ChainFn) or f.n != emb.n:
        raise MorphismError(f"lift along an embedding of {{0..{emb.n}}} needs a map on that chain")
    if emb.kind == "id":
        return f
    if emb.kind == "j_n":
        # constant f(k)/n on ((k-1)/n, k/n]
        return step.canonicalize((Fraction(k - 1, emb.n), Fraction(f(k), emb.n)) for k in range(1, emb.n + 1))
    size = emb.n * emb.m
    return chain.ChainFn(size, tuple(emb.iota(f(emb.ell(y))) for y in range(1, size + 1)))


def lift_tuple(emb: ChainEmbedding, f: LdTuple) -> ClopenTuple:
    if f.algebra != emb.source:
        raise MorphismError(f"tuple over {f.algebra.name} cannot be lifted along an embedding of chain:{emb.n}")
    image = LdTuple(emb.target, f.d, (lift(emb, c) for c in f.components))
    try:
        return as_clopen(image)
    except NotClopenError as exc:
        raise InvariantError(f"lifted tuple is not clopen: {exc}") from exc


def _elements(n: int, sample: int | None, rng: random.Random) -> list[chain.ChainFn]:
    if sample is None:
        return chain.enumerate_chain(n)
    return [chain.random_chainfn(rng, n) for _ in range(sample)]


def check_cocone(n: int, m: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> LawReport:
    """``lift(j_nm) o lift(j_{n,m}) = lift(j_n)``, plus the identity and composition laws.

    Exhaustive over ``{0..n}`` unless ``sample`` gives a number of random maps.
    """
    rng = random.Random(seed)
    fs = _elements(n, sample, rng)
    recorded = None if sample is None else seed
    cases = 0
    outer, inner, direct = j_n(n * m), j_nm(n, m), j_n(n)
    ident = identity_embedding(n)
    # composing j_{n,m} with j_{nm,2} is j_{n,2m}
    further, composite = j_nm(n * m, 2), j_nm(n, 2 * m)
    for f in fs:
        cases += 1
        if (lift(outer, lift(inner, f)) != lift(direct, f) or lift(ident, f) != f
                or lift(further, lift(inner, f)) != lift(composite, f)):
            return LawReport(f"cocone(n={n}, m={m})", False, (f,), cases, sample is None, recorded)
    return LawReport(f"cocone(n={n}, m={m})", True, (), cases, sample is None, recorded)


def check_preservation(emb: ChainEmbedding, sample: int | None = None,
                       seed: int = DEFAULT_SEED) -> list[LawReport]:
    """Lifting preserves ``tensor``, ``star``, ``oplus``, ``join``, ``meet`` and is injective.

    Exhaustive over pairs of maps when ``sample`` is None, otherwise over
    ``sample`` random pairs.
    """
    src, tgt = emb.source, emb.target
    rng = random.Random(seed)
    if sample is None:
        elems = chain.enumerate_chain(emb.n)
        pair_list = list(itertools.product(elems, repeat=2))
    else:
        pair_list = [(chain.random_chainfn(rng, emb.n), chain.random_chainfn(rng, emb.n))
                     for _ in range(sample)]
    L = lambda f: lift(emb, f)  # noqa: E731
    binary: dict[str, Callable] = {
        "lift_tensor": lambda f, g: L(src.tensor(f, g)) == tgt.tensor(L(f), L(g)),
        "lift_oplus": lambda f, g: L(src.oplus(f, g)) == tgt.oplus(L(f), L(g)),
        "lift_join": lambda f, g: L(src.join(f, g)) == tgt.join(L(f), L(g)),
        "lift_meet": lambda f, g: L(src.meet(f, g)) == tgt.meet(L(f), L(g)),
        "lift_star": lambda f, g: L(src.star(f)) == tgt.star(L(f)),
        "lift_injective": lambda f, g: (L(f) == L(g)) == (f == g),
        "lift_order": lambda f, g: src.leq(f, g) == tgt.leq(L(f), L(g)),
    }
    reports = []
    for name, holds in binary.items():
        report = LawReport(name, True, (), len(pair_list), sample is None, None if sample is None else seed)
        for k, (f, g) in enumerate(pair_list, 1):
            if not holds(f, g):
                report = LawReport(name, False, (f, g), k, sample is None, None if sample is None else seed)
                break
        reports.append(report)
    return reports


def is_in_LR(f: LdTuple, cap: int = DEFAULT_DENOMINATOR_CAP) -> bool | None:
    """Whether ``f`` is the lift along some ``j_n`` of a clopen chain tuple.

    ``n`` is the least common denominator of all generator coordinates.
    Returns None when that exceeds ``cap``.
    """
    if f.algebra != step_algebra():
        raise StructureError("membership test needs step components")
    coords = [c for g in f.components for xy in g.steps for c in xy]
    n = math.lcm(1, *(c.denominator for c in coords))
    if n > cap:
        return None
    emb = j_n(n)
    preimage = []
    for g in f.components:
        values = [g(Fraction(k, n)) * n for k in range(1, n + 1)]
        if any(v.denominator != 1 for v in values):
            return False
        preimage.append(chain.ChainFn(n, tuple(int(v) for v in values)))
    if tuple(lift(emb, c) for c in preimage) != f.components:
        return False
    return is_clopen(LdTuple(chain_algebra(n), f.d, preimage))
