"""Shared strategies and independent oracles.

The oracles here never call the library's operations: step functions are
compared by evaluating them on a rational grid fine enough to see every
breakpoint, and chain maps by their value vectors.
"""
from __future__ import annotations

import math
import sys
from fractions import Fraction

from hypothesis import strategies as st

from contweak import step
from contweak.step import StepFn

DENOMS = (1, 2, 3, 4, 6, 8)


@st.composite
def rationals(draw, lo=0, hi=1):
    q = draw(st.sampled_from(DENOMS))
    k = draw(st.integers(min_value=math.ceil(lo * q), max_value=math.floor(hi * q)))
    return Fraction(k, q)


@st.composite
def stepfns(draw, max_steps=4):
    raw = draw(st.lists(st.tuples(rationals(), rationals()), max_size=max_steps))
    return step.canonicalize(raw)


def raw_value(gens, t) -> Fraction:
    """Value at ``t`` of the join of raw generators ``(x, y)``: max ``y`` over ``x < t``."""
    return max((Fraction(y) for x, y in gens if Fraction(x) < t), default=Fraction(0))


def grid_for(*fns: StepFn, extra=()) -> list[Fraction]:
    """Multiples of ``1/(2L)`` where ``L`` clears every coordinate's denominator.

    Breakpoints fall on the grid and every open cell contains a grid point.
    """
    dens = [c.denominator for f in fns for xy in f.steps for c in xy]
    dens += [Fraction(c).denominator for c in extra]
    L = 2 * math.lcm(1, *dens)
    return [Fraction(k, L) for k in range(L + 1)]


def semantic(f: StepFn, grid) -> tuple:
    """Values of ``f`` on ``grid`` computed directly from its generators."""
    return tuple(raw_value(f.steps, t) for t in grid)


def star_oracle(f: StepFn, s: Fraction, grid) -> Fraction:
    """``sup{t : f(t) < s}`` read off the grid (exact when the grid contains every breakpoint)."""
    return max(t for t in grid if raw_value(f.steps, t) < s)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
