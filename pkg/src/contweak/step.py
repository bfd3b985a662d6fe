"""Join-continuous rational step functions on the unit interval.

A :class:`StepFn` is a finite join of one-step functions ``e<x,y>``, where
``e<x,y>(t) = 0`` for ``t <= x`` and ``y`` for ``t > x``.  The canonical form
keeps an antichain of generators with strictly increasing ``x`` and ``y``,
so structural equality is semantic equality.

Composition (``f (x) g = g o f``), the involution ``star`` and the dual
product ``oplus`` make these functions a unit-free mix lattice-ordered
bisemigroup.  The identity map is not a finite join of one-step functions
and so is not representable here.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Rat", "as_rat", "StepFn", "canonicalize", "one_step", "BOTTOM", "TOP",
    "evaluate", "eval_right", "tensor", "star", "oplus", "join", "meet", "leq",
    "random_rational", "random_stepfn",
]

Rat = Fraction
_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rat(value) -> Fraction:
    """Coerce ``value`` (int, Fraction or ``"p/q"`` string) to an exact rational."""
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a string or Fraction")
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(value)


def _unit(value, what="coordinate") -> Fraction:
    q = as_rat(value)
    if not 0 <= q <= 1:
        raise ValueError(f"{what} {q} outside [0,1]")
    return q


@dataclass(frozen=True)
class StepFn:
    """Canonical finite join of one-step functions.

    ``steps`` holds pairs ``(x, y)`` with ``0 <= x1 < ... < xk < 1`` and
    ``0 < y1 < ... < yk <= 1``.  Build instances with :func:`canonicalize`
    or :func:`one_step`; the constructor only validates.
    """

    steps: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        prev_x, prev_y = None, Fraction(0)
        for x, y in self.steps:
            if not (isinstance(x, Fraction) and isinstance(y, Fraction)):
                raise TypeError("step coordinates must be Fractions")
            if not (0 <= x < 1 and 0 < y <= 1):
                raise ValueError(f"non-canonical generator ({x}, {y})")
            if prev_x is not None and not (prev_x < x and prev_y < y):
                raise ValueError("generators must be strictly increasing in x and y")
            prev_x, prev_y = x, y

    def __call__(self, t) -> Fraction:
        return evaluate(self, t)

    def __str__(self):
        if not self.steps:
            return "bot"
        return " v ".join(f"e<{x},{y}>" for x, y in self.steps)

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.steps)

    def is_bottom(self) -> bool:
        return not self.steps


def canonicalize(raw: Iterable[tuple]) -> StepFn:
    """Canonical form of the join of the generators in ``raw``.

    Generators with ``x = 1`` or ``y = 0`` are bottom and are dropped, as are
    generators dominated by another one (``x' <= x`` and ``y <= y'``).
    """
    return _canon((_unit(x), _unit(y)) for x, y in raw)


def _canon(pairs) -> StepFn:
    # trusted path: coordinates are already Fractions in [0,1]
    pairs = [(x, y) for x, y in pairs if x < 1 and y > 0]
    # by x ascending, ties broken by larger y first
    pairs.sort(key=lambda p: (p[0], -p[1]))
    kept = []
    best = _ZERO
    for x, y in pairs:
        if y > best:
            kept.append((x, y))
            best = y
    fn = object.__new__(StepFn)
    object.__setattr__(fn, "steps", tuple(kept))
    return fn


def one_step(x, y) -> StepFn:
    return canonicalize([(x, y)])


BOTTOM = StepFn()
TOP = StepFn(((Fraction(0), Fraction(1)),))


def evaluate(f: StepFn, t) -> Fraction:
    """``f(t) = max{y : (x, y) in f, x < t}``, or 0."""
    return _eval(f, _unit(t, "argument"))


def _eval(f: StepFn, t: Fraction) -> Fraction:
    value = _ZERO
    for x, y in f.steps:
        if x < t:
            value = y
        else:
            break
    return value


def eval_right(f: StepFn, t) -> Fraction:
    """Right limit of ``f`` at ``t``: the meet-continuous companion of ``f``.

    The empty meet at ``t = 1`` is the top value 1.
    """
    return _eval_right(f, _unit(t, "argument"))


def _eval_right(f: StepFn, t: Fraction) -> Fraction:
    if t == 1:
        return _ONE
    value = _ZERO
    for x, y in f.steps:
        if x <= t:
            value = y
        else:
            break
    return value


def tensor(f: StepFn, g: StepFn) -> StepFn:
    """``f (x) g = g o f``; ``g o e<x,y> = e<x, g(y)>`` on each generator of ``f``."""
    return _canon((x, _eval(g, y)) for x, y in f.steps)


def star(f: StepFn) -> StepFn:
    """``star(f)(s) = sup{t : f(t) < s}``.

    If ``f`` has generators ``(x1,y1) .. (xk,yk)`` then ``star(f)`` takes the
    value ``x1`` on ``(0, y1]``, ``x(i+1)`` on ``(yi, y(i+1)]`` and 1 above ``yk``.
    """
    xs = [x for x, _ in f.steps] + [_ONE]
    ys = [_ZERO] + [y for _, y in f.steps]
    return _canon(zip(ys, xs))


def oplus(f: StepFn, g: StepFn) -> StepFn:
    return star(tensor(star(g), star(f)))


def join(f: StepFn, g: StepFn) -> StepFn:
    return _canon(f.steps + g.steps)


def meet(f: StepFn, g: StepFn) -> StepFn:
    """Pointwise minimum, read off on the merged breakpoint grid."""
    grid = sorted(set(f.breakpoints) | set(g.breakpoints))
    return _canon((b, min(_eval_right(f, b), _eval_right(g, b))) for b in grid)


def leq(f: StepFn, g: StepFn) -> bool:
    return all(y <= _eval_right(g, x) for x, y in f.steps)


DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 12)


def random_rational(rng: random.Random, denominators=DENOMINATORS) -> Fraction:
    """A rational in [0,1] drawn from a coarse grid, so ties occur often."""
    q = rng.choice(denominators)
    return Fraction(rng.randint(0, q), q)


def random_stepfn(rng: random.Random, max_steps: int = 4, denominators=DENOMINATORS) -> StepFn:
    k = rng.randint(0, max_steps)
    return canonicalize(
        (random_rational(rng, denominators), random_rational(rng, denominators)) for _ in range(k)
    )
