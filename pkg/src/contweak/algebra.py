"""Mix lattice-ordered bisemigroups and involutive residuated lattices.

An :class:`Algebra` bundles the order, lattice operations, the two products
``tensor`` and ``oplus`` and (optionally) the involution ``star`` and units,
as plain callables.  Finite algebras list their carrier; infinite ones supply
a sampler.  :func:`check_lbs_axioms` and :func:`check_involutive_rl_axioms`
evaluate the defining laws exhaustively when the case count fits the budget
and on seeded random samples otherwise.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Sequence

from . import chain, step
from .errors import StructureError

__all__ = [
    "Algebra", "Law", "LawReport", "DEFAULT_SEED", "DEFAULT_BUDGET",
    "check_lbs_axioms", "check_involutive_rl_axioms", "run_laws", "residual_left",
    "bool2", "sugihara3", "chain_algebra", "step_algebra", "algebra_from_table",
    "get_algebra",
]

DEFAULT_SEED = 2018
DEFAULT_BUDGET = 10_000


@dataclass(frozen=True, eq=False)
class Algebra:
    name: str
    leq: Callable[[Any, Any], bool]
    join: Callable[[Any, Any], Any]
    meet: Callable[[Any, Any], Any]
    tensor: Callable[[Any, Any], Any]
    oplus: Callable[[Any, Any], Any]
    bottom: Any
    top: Any
    star: Callable[[Any], Any] | None = None
    unit1: Any = None
    unit0: Any = None
    elements: tuple | None = None
    sampler: Callable[[random.Random], Any] | None = field(default=None, repr=False)
    is_complete: bool = True

    def __eq__(self, other):
        return isinstance(other, Algebra) and other.name == self.name

    def __hash__(self):
        return hash(("Algebra", self.name))

    @property
    def has_units(self) -> bool:
        return self.unit1 is not None

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    def sample(self, rng: random.Random):
        if self.elements is not None:
            return rng.choice(self.elements)
        if self.sampler is None:
            raise StructureError(f"algebra {self.name} has neither a carrier nor a sampler")
        return self.sampler(rng)

    def eq(self, a, b) -> bool:
        return self.leq(a, b) and self.leq(b, a)


# --------------------------------------------------------------------------
# law checking

@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    holds: Callable[..., bool]
    needs_star: bool = False
    needs_units: bool = False
    # nullary laws report these constants as their counterexample
    witness: Callable[[Algebra], tuple] | None = None


@dataclass(frozen=True)
class LawReport:
    law: str
    passed: bool
    counterexample: tuple = ()
    cases: int = 0
    exhaustive: bool = True
    seed: int | None = None

    def __str__(self):
        mode = "exhaustive" if self.exhaustive else f"sampled, seed={self.seed}"
        verdict = "pass" if self.passed else f"FAIL at {tuple(map(str, self.counterexample))}"
        return f"{self.law}: {verdict} ({self.cases} cases, {mode})"


def _run_law(Q: Algebra, law: Law, budget: int, seed: int) -> LawReport:
    if law.arity == 0:
        ok = law.holds(Q)
        return LawReport(law.name, ok, () if ok else law.witness(Q), 1)
    if Q.elements is not None and len(Q.elements) ** law.arity <= budget:
        cases = 0
        for args in itertools.product(Q.elements, repeat=law.arity):
            cases += 1
            if not law.holds(Q, *args):
                return LawReport(law.name, False, args, cases)
        return LawReport(law.name, True, (), cases)
    rng = random.Random(seed)
    for case in range(1, budget + 1):
        args = tuple(Q.sample(rng) for _ in range(law.arity))
        if not law.holds(Q, *args):
            return LawReport(law.name, False, args, case, False, seed)
    return LawReport(law.name, True, (), budget, False, seed)


def _check_closure(Q: Algebra, budget: int) -> None:
    """Every operation must land back in a finite carrier."""
    if Q.elements is None or len(Q.elements) ** 2 > budget:
        return
    carrier = set(Q.elements)
    ops = {"join": Q.join, "meet": Q.meet, "tensor": Q.tensor, "oplus": Q.oplus}
    for a, b in itertools.product(Q.elements, repeat=2):
        for op_name, op in ops.items():
            r = op(a, b)
            if r not in carrier:
                raise StructureError(f"{Q.name}: {op_name}({a}, {b}) = {r} is not in the carrier")
    if Q.star is not None:
        for a in Q.elements:
            if Q.star(a) not in carrier:
                raise StructureError(f"{Q.name}: star({a}) = {Q.star(a)} is not in the carrier")


def run_laws(Q: Algebra, laws: Sequence[Law], budget: int = DEFAULT_BUDGET,
             seed: int = DEFAULT_SEED) -> list[LawReport]:
    if budget < 1:
        raise ValueError("budget must be at least 1")
    _check_closure(Q, budget)
    reports = []
    for law in laws:
        if law.needs_star and Q.star is None:
            continue
        if law.needs_units and not Q.has_units:
            continue
        reports.append(_run_law(Q, law, budget, seed))
    return reports


def _eq(Q, a, b):
    return Q.eq(a, b)


LBS_LAWS = [
    Law("leq_reflexive", 1, lambda Q, a: Q.leq(a, a)),
    Law("leq_antisymmetric", 2, lambda Q, a, b: not (Q.leq(a, b) and Q.leq(b, a)) or a == b),
    Law("leq_transitive", 3, lambda Q, a, b, c: not (Q.leq(a, b) and Q.leq(b, c)) or Q.leq(a, c)),
    Law("bounds", 1, lambda Q, a: Q.leq(Q.bottom, a) and Q.leq(a, Q.top)),
    Law("join_upper_bound", 2, lambda Q, a, b: Q.leq(a, Q.join(a, b)) and Q.leq(b, Q.join(a, b))),
    Law("join_least", 3, lambda Q, a, b, c:
        not (Q.leq(a, c) and Q.leq(b, c)) or Q.leq(Q.join(a, b), c)),
    Law("meet_lower_bound", 2, lambda Q, a, b: Q.leq(Q.meet(a, b), a) and Q.leq(Q.meet(a, b), b)),
    Law("meet_greatest", 3, lambda Q, a, b, c:
        not (Q.leq(c, a) and Q.leq(c, b)) or Q.leq(c, Q.meet(a, b))),
    Law("tensor_associative", 3, lambda Q, a, b, c:
        _eq(Q, Q.tensor(Q.tensor(a, b), c), Q.tensor(a, Q.tensor(b, c)))),
    Law("oplus_associative", 3, lambda Q, a, b, c:
        _eq(Q, Q.oplus(Q.oplus(a, b), c), Q.oplus(a, Q.oplus(b, c)))),
    Law("tensor_bottom", 1, lambda Q, a:
        _eq(Q, Q.tensor(a, Q.bottom), Q.bottom) and _eq(Q, Q.tensor(Q.bottom, a), Q.bottom)),
    Law("oplus_top", 1, lambda Q, a:
        _eq(Q, Q.oplus(a, Q.top), Q.top) and _eq(Q, Q.oplus(Q.top, a), Q.top)),
    Law("tensor_distributes_over_join", 3, lambda Q, a, b, c:
        _eq(Q, Q.tensor(a, Q.join(b, c)), Q.join(Q.tensor(a, b), Q.tensor(a, c)))
        and _eq(Q, Q.tensor(Q.join(a, b), c), Q.join(Q.tensor(a, c), Q.tensor(b, c)))),
    Law("oplus_distributes_over_meet", 3, lambda Q, a, b, c:
        _eq(Q, Q.oplus(a, Q.meet(b, c)), Q.meet(Q.oplus(a, b), Q.oplus(a, c)))
        and _eq(Q, Q.oplus(Q.meet(a, b), c), Q.meet(Q.oplus(a, c), Q.oplus(b, c)))),
    # b (x) (c (+) d) <= (b (x) c) (+) d
    Law("hemidistr1p", 3, lambda Q, b, c, d:
        Q.leq(Q.tensor(b, Q.oplus(c, d)), Q.oplus(Q.tensor(b, c), d))),
    # (a (+) b) (x) c <= a (+) (b (x) c)
    Law("hemidistr2p", 3, lambda Q, a, b, c:
        Q.leq(Q.tensor(Q.oplus(a, b), c), Q.oplus(a, Q.tensor(b, c)))),
    # (a (+) b) (x) (c (+) d) <= a (+) (b (x) c) (+) d
    Law("hemidistr1", 4, lambda Q, a, b, c, d:
        Q.leq(Q.tensor(Q.oplus(a, b), Q.oplus(c, d)), Q.oplus(Q.oplus(a, Q.tensor(b, c)), d))),
    # a (x) (b (+) c) (x) d <= (a (x) b) (+) (c (x) d)
    Law("hemidistr2", 4, lambda Q, a, b, c, d:
        Q.leq(Q.tensor(Q.tensor(a, Q.oplus(b, c)), d), Q.oplus(Q.tensor(a, b), Q.tensor(c, d)))),
    Law("mix", 2, lambda Q, a, b: Q.leq(Q.tensor(a, b), Q.oplus(a, b))),
]


def _residuation(Q, a, b, c):
    lhs = Q.leq(Q.tensor(a, b), c)
    return lhs == Q.leq(a, Q.oplus(c, Q.star(b))) == Q.leq(b, Q.oplus(Q.star(a), c))


IRL_LAWS = [
    Law("star_involution", 1, lambda Q, a: Q.star(Q.star(a)) == a, needs_star=True),
    Law("star_antitone", 2, lambda Q, a, b: not Q.leq(a, b) or Q.leq(Q.star(b), Q.star(a)),
        needs_star=True),
    Law("star_join_to_meet", 2, lambda Q, a, b:
        _eq(Q, Q.star(Q.join(a, b)), Q.meet(Q.star(a), Q.star(b))), needs_star=True),
    Law("oplus_duality", 2, lambda Q, a, b:
        _eq(Q, Q.oplus(a, b), Q.star(Q.tensor(Q.star(b), Q.star(a)))), needs_star=True),
    Law("residuation", 3, _residuation, needs_star=True),
    Law("tensor_unit", 1, lambda Q, a:
        _eq(Q, Q.tensor(Q.unit1, a), a) and _eq(Q, Q.tensor(a, Q.unit1), a), needs_units=True),
    Law("oplus_unit", 1, lambda Q, a:
        _eq(Q, Q.oplus(Q.unit0, a), a) and _eq(Q, Q.oplus(a, Q.unit0), a),
        needs_star=True, needs_units=True),
    Law("zero_is_star_one", 0, lambda Q: Q.unit0 == Q.star(Q.unit1),
        needs_star=True, needs_units=True, witness=lambda Q: (Q.unit0, Q.unit1)),
    Law("mix_units", 0, lambda Q: Q.leq(Q.unit0, Q.unit1),
        needs_units=True, witness=lambda Q: (Q.unit0, Q.unit1)),
]


def check_lbs_axioms(Q: Algebra, budget: int = DEFAULT_BUDGET,
                     seed: int = DEFAULT_SEED) -> list[LawReport]:
    """Lattice laws, both products, hemidistributivity and the mix rule."""
    return run_laws(Q, LBS_LAWS, budget, seed)


def check_involutive_rl_axioms(Q: Algebra, budget: int = DEFAULT_BUDGET,
                               seed: int = DEFAULT_SEED) -> list[LawReport]:
    """Involution, residuation through ``oplus`` and, when units exist, ``0 = star(1) <= 1``.

    Unit laws are skipped for algebras without units.
    """
    if Q.star is None:
        raise StructureError(f"algebra {Q.name} has no involution")
    return run_laws(Q, IRL_LAWS, budget, seed)


def residual_left(Q: Algebra, a, b):
    """``a -o b = star(a) (+) b``, the largest ``c`` with ``a (x) c <= b``."""
    if Q.star is None:
        raise StructureError(f"algebra {Q.name} has no involution")
    return Q.oplus(Q.star(a), b)


# --------------------------------------------------------------------------
# built-in algebras

_le = lambda a, b: a <= b  # noqa: E731


@lru_cache(maxsize=None)
def bool2() -> Algebra:
    return Algebra(
        name="bool", leq=_le, join=max, meet=min, tensor=min, oplus=max,
        bottom=0, top=1, star=lambda a: 1 - a, unit1=1, unit0=0, elements=(0, 1),
    )


_SUGIHARA_TENSOR = {
    (-1, -1): -1, (-1, 0): -1, (-1, 1): -1,
    (0, -1): -1, (0, 0): 0, (0, 1): 1,
    (1, -1): -1, (1, 0): 1, (1, 1): 1,
}
_SUGIHARA_OPLUS = {
    (-1, -1): -1, (-1, 0): -1, (-1, 1): 1,
    (0, -1): -1, (0, 0): 0, (0, 1): 1,
    (1, -1): 1, (1, 0): 1, (1, 1): 1,
}


@lru_cache(maxsize=None)
def sugihara3() -> Algebra:
    return Algebra(
        name="sugihara", leq=_le, join=max, meet=min,
        tensor=lambda a, b: _SUGIHARA_TENSOR[a, b],
        oplus=lambda a, b: _SUGIHARA_OPLUS[a, b],
        bottom=-1, top=1, star=lambda a: -a, unit1=0, unit0=0, elements=(-1, 0, 1),
    )


@lru_cache(maxsize=None)
def chain_algebra(n: int) -> Algebra:
    if n < 1:
        raise ValueError("chain size must be at least 1")
    elements = tuple(chain.enumerate_chain(n)) if n <= chain.MAX_ENUMERATE else None
    return Algebra(
        name=f"chain:{n}", leq=chain.leq, join=chain.join, meet=chain.meet,
        tensor=chain.tensor, oplus=chain.oplus, bottom=chain.bottom(n), top=chain.top(n),
        star=chain.star, unit1=chain.identity(n), unit0=chain.zero(n), elements=elements,
        sampler=lambda rng: chain.random_chainfn(rng, n),
    )


@lru_cache(maxsize=None)
def step_algebra() -> Algebra:
    return Algebra(
        name="step", leq=step.leq, join=step.join, meet=step.meet,
        tensor=step.tensor, oplus=step.oplus, bottom=step.BOTTOM, top=step.TOP,
        star=step.star, sampler=step.random_stepfn, is_complete=False,
    )


def algebra_from_table(data: dict, name: str = "table") -> Algebra:
    """Finite algebra from ``{"carrier": n, "leq": .., "tensor": .., "oplus": .., "star": ..}``.

    Elements are the indices ``0..n-1``.  Joins and meets are derived from
    ``leq``; the tensor unit, if one exists, is found by search and the
    dual unit is its star.
    """
    try:
        n = int(data["carrier"])
        le = [[bool(v) for v in row] for row in data["leq"]]
        tens = [[int(v) for v in row] for row in data["tensor"]]
        opl = [[int(v) for v in row] for row in data["oplus"]]
        st = [int(v) for v in data["star"]] if data.get("star") is not None else None
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"malformed operation table: {exc}") from exc
    if n < 1:
        raise StructureError("carrier must be non-empty")
    for label, table in (("leq", le), ("tensor", tens), ("oplus", opl)):
        if len(table) != n or any(len(row) != n for row in table):
            raise StructureError(f"{label} table must be {n}x{n}")
    for label, table in (("tensor", tens), ("oplus", opl)):
        for a, b in itertools.product(range(n), repeat=2):
            if not 0 <= table[a][b] < n:
                raise StructureError(f"{label}({a}, {b}) = {table[a][b]} is not in the carrier")
    if st is not None:
        if len(st) != n:
            raise StructureError(f"star must list {n} values")
        for a, v in enumerate(st):
            if not 0 <= v < n:
                raise StructureError(f"star({a}) = {v} is not in the carrier")

    def bound(a, b, upper):
        cands = [c for c in range(n) if (le[a][c] and le[b][c] if upper else le[c][a] and le[c][b])]
        best = [c for c in cands if all((le[c][e] if upper else le[e][c]) for e in cands)]
        if len(best) != 1:
            kind = "join" if upper else "meet"
            raise StructureError(f"{kind} of {a} and {b} does not exist")
        return best[0]

    joins = [[bound(a, b, True) for b in range(n)] for a in range(n)]
    meets = [[bound(a, b, False) for b in range(n)] for a in range(n)]
    bottoms = [a for a in range(n) if all(le[a][b] for b in range(n))]
    tops = [a for a in range(n) if all(le[b][a] for b in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise StructureError("order must have a least and a greatest element")
    units = [u for u in range(n) if all(tens[u][a] == a == tens[a][u] for a in range(n))]
    unit1 = units[0] if units else None
    unit0 = st[unit1] if (unit1 is not None and st is not None) else None
    return Algebra(
        name=f"table:{name}", leq=lambda a, b: le[a][b],
        join=lambda a, b: joins[a][b], meet=lambda a, b: meets[a][b],
        tensor=lambda a, b: tens[a][b], oplus=lambda a, b: opl[a][b],
        bottom=bottoms[0], top=tops[0], star=(lambda a: st[a]) if st is not None else None,
        unit1=unit1, unit0=unit0, elements=tuple(range(n)),
    )


def get_algebra(tag: str) -> Algebra:
    """Resolve ``bool``, ``sugihara``, ``chain:N`` or ``step``."""
    tag = tag.strip()
    if tag in ("bool", "bool2"):
        return bool2()
    if tag in ("sugihara", "sugihara3"):
        return sugihara3()
    if tag == "step":
        return step_algebra()
    if tag.startswith("chain:"):
        try:
            n = int(tag.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad chain size in {tag!r}") from None
        return chain_algebra(n)
    raise ValueError(f"unknown algebra {tag!r}; expected bool, sugihara, chain:N or step")
