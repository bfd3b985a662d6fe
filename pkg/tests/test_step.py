from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contweak import step
from contweak.step import BOTTOM, TOP, canonicalize, one_step

from conftest import grid_for, rationals, raw_value, semantic, star_oracle, stepfns

h = F(1, 2)


class TestCanonical:
    def test_sorts_generators(self):
        f = canonicalize([(h, 1), (F(1, 4), h)])
        assert f.steps == ((F(1, 4), h), (h, F(1)))

    def test_drops_dominated_and_degenerate(self):
        f = canonicalize([(F(1, 4), F(3, 4)), (h, h), (1, h), (0, 0)])
        assert f.steps == ((F(1, 4), F(3, 4)),)

    def test_constructor_rejects_noncanonical(self):
        with pytest.raises(ValueError):
            step.StepFn(((h, h), (F(1, 4), F(3, 4))))
        with pytest.raises(ValueError):
            step.StepFn(((F(1), h),))

    def test_rejects_floats_and_range(self):
        with pytest.raises(TypeError):
            one_step(0.5, 0.5)
        with pytest.raises(ValueError):
            one_step(F(3, 2), h)

    @given(st.lists(st.tuples(rationals(), rationals()), max_size=6))
    def test_preserves_semantics(self, raw):
        f = canonicalize(raw)
        for t in grid_for(f, extra=[c for xy in raw for c in xy]):
            assert f(t) == raw_value(raw, t)

    def test_str(self):
        assert str(BOTTOM) == "bot"
        assert str(one_step("1/4", "1/2")) == "e<1/4,1/2>"


class TestEvaluation:
    def test_left_and_right_values(self):
        e = one_step(h, h)
        assert e(h) == 0
        assert step.eval_right(e, h) == h

    def test_at_zero_and_top(self):
        assert one_step(0, 1)(0) == 0
        assert step.eval_right(BOTTOM, 1) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            step.evaluate(TOP, F(2))


class TestTensor:
    def test_generator_pair(self):
        assert step.tensor(one_step(h, F(1, 3)), one_step(F(1, 4), F(2, 3))) == one_step(h, F(2, 3))

    @given(rationals(), rationals(), rationals())
    def test_collapse_when_output_meets_threshold(self, x, y, z):
        assert step.tensor(one_step(x, y), one_step(y, z)) == BOTTOM

    @given(stepfns())
    def test_bottom_absorbs(self, f):
        assert step.tensor(f, BOTTOM) == BOTTOM
        assert step.tensor(BOTTOM, f) == BOTTOM

    @given(stepfns(), stepfns())
    def test_is_composition(self, f, g):
        fg = step.tensor(f, g)
        for t in grid_for(f, g, fg):
            assert fg(t) == raw_value(g.steps, raw_value(f.steps, t))


class TestStar:
    def test_generator(self):
        assert step.star(one_step(h, F(1, 3))) == canonicalize([(0, h), (F(1, 3), 1)])

    def test_bounds(self):
        assert step.star(BOTTOM) == TOP
        assert step.star(TOP) == BOTTOM

    def test_involution_example(self):
        e = one_step(F(1, 4), F(3, 4))
        assert step.star(step.star(e)) == e

    @given(stepfns())
    def test_matches_sup_formula(self, f):
        fs = step.star(f)
        grid = grid_for(f, fs)
        for s in grid[1:]:
            assert fs(s) == star_oracle(f, s, grid)

    @given(stepfns(), stepfns())
    def test_antitone_involution(self, f, g):
        assert step.star(step.star(f)) == f
        if step.leq(f, g):
            assert step.leq(step.star(g), step.star(f))


class TestOplus:
    def test_bottom_bottom(self):
        assert step.oplus(BOTTOM, BOTTOM) == BOTTOM

    @given(stepfns())
    def test_top_absorbs(self, f):
        assert step.oplus(TOP, f) == TOP
        assert step.oplus(f, TOP) == TOP

    def test_half_half(self):
        e = one_step(h, h)
        # star(e) tensor star(e) composes e<0,1/2> v e<1/2,1> with itself: it stays the same
        s = canonicalize([(0, h), (h, 1)])
        assert step.tensor(s, s) == s
        assert step.oplus(e, e) == step.star(s) == e

    @given(stepfns(), stepfns())
    def test_mix(self, f, g):
        assert step.leq(step.tensor(f, g), step.oplus(f, g))


class TestLattice:
    def test_examples(self):
        assert step.join(one_step(F(1, 4), h), one_step(h, 1)).steps == ((F(1, 4), h), (h, F(1)))
        assert step.meet(one_step(0, h), one_step(h, 1)) == one_step(h, h)
        assert step.leq(one_step(h, h), one_step(F(1, 4), h))
        assert not step.leq(one_step(F(1, 4), h), one_step(h, h))

    @given(stepfns(), stepfns())
    def test_pointwise(self, f, g):
        j, m = step.join(f, g), step.meet(f, g)
        grid = grid_for(f, g, j, m)
        for t in grid:
            assert j(t) == max(f(t), g(t))
            assert m(t) == min(f(t), g(t))
        assert step.leq(f, g) == all(a <= b for a, b in zip(semantic(f, grid), semantic(g, grid)))

    @given(stepfns(), stepfns(), stepfns())
    def test_distributive(self, f, g, k):
        assert step.meet(f, step.join(g, k)) == step.join(step.meet(f, g), step.meet(f, k))

    @given(rationals(), rationals(), rationals(), rationals())
    def test_order_on_generators(self, x, y, z, w):
        if x < 1 and y > 0 and z < 1 and w > 0:
            assert step.leq(one_step(x, y), one_step(z, w)) == (z <= x and y <= w)


@settings(max_examples=200)
@given(stepfns(), stepfns(), stepfns())
def test_residuation(f, g, k):
    assert step.leq(step.tensor(f, g), k) == step.leq(f, step.oplus(k, step.star(g)))


def test_random_stepfn_is_seeded():
    import random
    a = [step.random_stepfn(random.Random(7)) for _ in range(5)]
    b = [step.random_stepfn(random.Random(7)) for _ in range(5)]
    assert a == b
