import random
from fractions import Fraction as F

import pytest

from contweak import step
from contweak.algebra import get_algebra
from contweak.embeddings import j_n, lift_tuple
from contweak.errors import StructureError
from contweak.generators import random_staircase, random_step_clopen
from contweak.irreducibles import e_point
from contweak.ld import bottom_tuple, make_tuple
from contweak.paths import (
    Staircase, path_contains, path_greatest_point, path_point, staircase_to_tuple,
    tuple_to_staircase, word_to_staircase,
)
from contweak.words import all_words, parse_word, word_to_tuple

S = get_algebra("step")
h, q, tq = F(1, 2), F(1, 4), F(3, 4)
HOOK = ((0, 0), (h, 0), (h, h), (1, h), (1, 1))


def hook_tuple():
    return make_tuple(S, 2, {(1, 2): step.one_step(h, h)})


class TestStaircase:
    def test_hook_both_ways(self):
        assert tuple_to_staircase(hook_tuple()).vertices == HOOK
        assert staircase_to_tuple(Staircase(HOOK)) == hook_tuple()

    def test_bottom(self):
        assert tuple_to_staircase(bottom_tuple(S, 2)).vertices == ((0, 0), (1, 0), (1, 1))
        assert staircase_to_tuple(Staircase(((0, 0), (1, 0), (1, 1)))) == bottom_tuple(S, 2)

    def test_seven_corners_through_centre(self):
        c = tuple_to_staircase(e_point([h, h, h]))
        assert len(c.vertices) == 7
        assert (h, h, h) in c.vertices

    def test_collinear_vertices_merged(self):
        c = Staircase(((0, 0), (q, 0), (1, 0), (1, 1)))
        assert c.vertices == ((0, 0), (1, 0), (1, 1))

    @pytest.mark.parametrize("vertices", [
        ((0, 0), (1, 1)),
        ((0, 0), (h, 0), (q, 0), (1, 0), (1, 1)),
        ((0, 0), (1, 0)),
        ((0, 0, 0), (1, 1)),
    ])
    def test_invalid(self, vertices):
        with pytest.raises(StructureError):
            Staircase(vertices)

    def test_round_trips(self):
        rng = random.Random(12)
        for _ in range(60):
            d = rng.randint(2, 4)
            f = random_step_clopen(rng, d)
            c = tuple_to_staircase(f)
            assert staircase_to_tuple(c) == f
            assert all(path_contains(f, v) for v in c.vertices)
            c2 = random_staircase(rng, d)
            assert tuple_to_staircase(staircase_to_tuple(c2)) == c2

    def test_word_staircase_matches_lift(self):
        for n in (1, 2):
            for w in all_words(3, n):
                expected = lift_tuple(j_n(n), word_to_tuple(w))
                assert staircase_to_tuple(word_to_staircase(w)) == expected

    def test_non_step_rejected(self):
        with pytest.raises(StructureError):
            tuple_to_staircase(word_to_tuple(parse_word("xy")))


class TestPathPoint:
    def test_examples(self):
        assert path_point(hook_tuple(), 1, tq) == (tq, h)
        assert path_point(hook_tuple(), 1, 0) == (0, 0)
        assert path_point(e_point([h, h, h]), 1, tq) == (tq, h, h)

    def test_contains_examples(self):
        assert path_contains(hook_tuple(), (q, 0))
        assert not path_contains(hook_tuple(), (tq, 0))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            path_point(hook_tuple(), 1, F(3, 2))

    def test_least_and_greatest(self):
        f = hook_tuple()
        assert path_point(f, 1, h) == (h, 0)
        assert path_greatest_point(f, 1, h) == (h, h)

    def test_chain_property(self):
        rng = random.Random(6)
        grid = [F(k, 12) for k in range(13)]
        for _ in range(30):
            d = rng.randint(2, 4)
            f = random_step_clopen(rng, d)
            i = rng.randint(1, d)
            pts = [path_point(f, i, x) for x in grid]
            assert all(path_contains(f, p) for p in pts)
            for a, b in zip(pts, pts[1:]):
                assert all(s <= t for s, t in zip(a, b))
