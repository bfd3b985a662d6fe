import itertools

import pytest

from contweak.algebra import get_algebra
from contweak.chain import ChainFn
from contweak.errors import SizeError
from contweak.ld import enumerate_clopens, ld_join, ld_meet, tuple_leq
from contweak.words import (
    MultiWord, all_words, enumerate_multinomial, multinomial_count, parse_word,
    weak_order_covers, word_to_tuple,
)


def cover_strings(text):
    return {str(c) for c in weak_order_covers(parse_word(text))}


class TestParsing:
    def test_letters_ranked_alphabetically(self):
        w = parse_word("yxyx")
        assert w.letters == (2, 1, 2, 1) and (w.d, w.n) == (2, 2)
        assert str(w) == "yxyx"

    def test_unequal_multiplicities(self):
        with pytest.raises(ValueError):
            parse_word("xxy")
        with pytest.raises(ValueError):
            parse_word("xyxy", n=3)
        with pytest.raises(ValueError):
            MultiWord((1, 1, 2, 3), 3, 1)

    def test_numeric_word(self):
        assert str(MultiWord((1, 2, 3, 1, 2, 3), 3, 2)) == "123123"


class TestEncoding:
    def test_examples(self):
        assert word_to_tuple(parse_word("xyxy"))[1, 2] == ChainFn(2, (0, 1))
        assert word_to_tuple(parse_word("xyz")).components == (ChainFn(1, (0,)),) * 3
        assert word_to_tuple(parse_word("zyx")).components == (ChainFn(1, (1,)),) * 3

    @pytest.mark.parametrize("d,n", [(3, 1), (2, 2), (3, 2), (4, 1)])
    def test_bijection_onto_clopens(self, d, n):
        images = {word_to_tuple(w) for w in all_words(d, n)}
        assert images == set(enumerate_clopens(get_algebra(f"chain:{n}"), d))


class TestCovers:
    def test_examples(self):
        assert cover_strings("xyxy") == {"yxxy", "xyyx"}
        assert cover_strings("yyxx") == set()
        assert cover_strings("xyz") == {"yxz", "xzy"}

    @pytest.mark.parametrize("d,n", [(3, 1), (2, 2), (3, 2)])
    def test_covers_map_to_covers(self, d, n):
        L = enumerate_multinomial(d, n)
        tuples = {w.letters: word_to_tuple(w) for w in L.words}
        clopens = list(tuples.values())
        for w in L.words:
            lo = tuples[w.letters]
            for c in L.covers(w):
                hi = tuples[c.letters]
                assert tuple_leq(lo, hi) and lo != hi
                between = [t for t in clopens if tuple_leq(lo, t) and tuple_leq(t, hi)]
                assert len(between) == 2


class TestOracle:
    @pytest.mark.parametrize("d,n,count", [(3, 1, 6), (2, 2, 6), (3, 2, 90)])
    def test_counts(self, d, n, count):
        assert len(all_words(d, n)) == count == multinomial_count(d, n)

    def test_size_guard(self):
        with pytest.raises(SizeError):
            enumerate_multinomial(5, 3)

    def test_permutations_order(self):
        L = enumerate_multinomial(3, 1)
        bottom, top = parse_word("abc"), parse_word("cba")
        assert all(L.leq(bottom, w) and L.leq(w, top) for w in L.words)
        assert L.join(parse_word("bac"), parse_word("acb")) == top
        assert L.meet(parse_word("bac"), parse_word("acb")) == bottom

    @pytest.mark.parametrize("d,n", [(2, 2), (3, 1), (3, 2)])
    def test_joins_and_meets_agree_with_clopens(self, d, n):
        L = enumerate_multinomial(d, n)
        for u, v in itertools.product(L.words, repeat=2):
            fu, fv = word_to_tuple(u), word_to_tuple(v)
            assert word_to_tuple(L.join(u, v)) == ld_join(fu, fv)
            assert word_to_tuple(L.meet(u, v)) == ld_meet(fu, fv)
