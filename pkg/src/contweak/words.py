"""Words with ``n`` occurrences of each of ``d`` letters, and their weak order.

The order is the reflexive-transitive closure of ``u a b v < u b a v`` for
letters ``a < b``.  :class:`MultinomialLattice` materializes it by brute
force as an oracle for the clopen-tuple encoding :func:`word_to_tuple`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from . import chain
from .algebra import chain_algebra
from .errors import SizeError
from .ld import ClopenTuple, pairs

__all__ = [
    "MultiWord", "parse_word", "word_to_tuple", "weak_order_covers", "all_words",
    "MultinomialLattice", "enumerate_multinomial", "multinomial_count", "MAX_WORDS",
]

MAX_WORDS = 100_000


@dataclass(frozen=True)
class MultiWord:
    """A word over letters ``1..d`` in which every letter occurs ``n`` times.

    ``alphabet`` only affects printing: letter ``i`` is shown as ``alphabet[i-1]``.
    """

    letters: tuple[int, ...]
    d: int
    n: int
    alphabet: str | None = field(default=None, compare=False)

    def __post_init__(self):
        letters = tuple(int(c) for c in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.d < 1 or self.n < 1:
            raise ValueError("d and n must be positive")
        if len(letters) != self.d * self.n:
            raise ValueError(f"word has length {len(letters)}, expected d*n = {self.d * self.n}")
        counts = Counter(letters)
        for letter in range(1, self.d + 1):
            if counts.get(letter, 0) != self.n:
                raise ValueError(f"letter {letter} occurs {counts.get(letter, 0)} times, expected {self.n}")
        if self.alphabet is not None and len(self.alphabet) != self.d:
            raise ValueError("alphabet must have one character per letter")

    def __str__(self):
        if self.alphabet is not None:
            return "".join(self.alphabet[c - 1] for c in self.letters)
        if self.d <= 9:
            return "".join(map(str, self.letters))
        return " ".join(map(str, self.letters))

    def with_letters(self, letters: Sequence[int]) -> "MultiWord":
        return MultiWord(tuple(letters), self.d, self.n, self.alphabet)


def parse_word(text: str, n: int | None = None) -> MultiWord:
    """Read a word such as ``"xyxy"``; its distinct characters, sorted, become letters ``1..d``."""
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    alphabet = "".join(sorted(set(text)))
    rank = {c: k + 1 for k, c in enumerate(alphabet)}
    d = len(alphabet)
    if len(text) % d:
        raise ValueError(f"{text!r}: letters do not occur equally often")
    inferred = len(text) // d
    if n is not None and n != inferred:
        raise ValueError(f"{text!r} has {inferred} occurrences per letter, expected {n}")
    return MultiWord(tuple(rank[c] for c in text), d, inferred, alphabet)


def word_to_tuple(w: MultiWord) -> ClopenTuple:
    """``f[i,j](t)`` counts the ``j``'s before the ``t``-th ``i``, for ``i < j``."""
    comps = []
    for i, j in pairs(w.d):
        seen_j = 0
        values = []
        for c in w.letters:
            if c == j:
                seen_j += 1
            elif c == i:
                values.append(seen_j)
        comps.append(chain.ChainFn(w.n, tuple(values)))
    return ClopenTuple(chain_algebra(w.n), w.d, comps)


def weak_order_covers(w: MultiWord) -> list[MultiWord]:
    """Words obtained by one swap ``a b -> b a`` of adjacent letters with ``a < b``."""
    out = []
    s = w.letters
    for k in range(len(s) - 1):
        if s[k] < s[k + 1]:
            out.append(w.with_letters(s[:k] + (s[k + 1], s[k]) + s[k + 2:]))
    return out


def multinomial_count(d: int, n: int) -> int:
    return factorial(d * n) // factorial(n) ** d


def all_words(d: int, n: int) -> list[MultiWord]:
    """Every word in lexicographic order of the letter sequence."""
    out: list[MultiWord] = []
    remaining = [n] * (d + 1)
    prefix: list[int] = []

    def rec():
        if len(prefix) == d * n:
            out.append(MultiWord(tuple(prefix), d, n))
            return
        for letter in range(1, d + 1):
            if remaining[letter]:
                remaining[letter] -= 1
                prefix.append(letter)
                rec()
                prefix.pop()
                remaining[letter] += 1

    rec()
    return out


class MultinomialLattice:
    """All words for ``(d, n)`` with the weak order computed from covers.

    Upsets are stored as integer bitsets indexed by position in :attr:`words`.
    """

    def __init__(self, d: int, n: int):
        self.d, self.n = d, n
        self.words = all_words(d, n)
        self.index = {w.letters: k for k, w in enumerate(self.words)}
        self.cover_lists = [
            [self.index[c.letters] for c in weak_order_covers(w)] for w in self.words
        ]
        # covers only increase inversions, so process words from the top down
        inversions = [self._inversions(w) for w in self.words]
        order = sorted(range(len(self.words)), key=lambda k: -inversions[k])
        self.up = [0] * len(self.words)
        for k in order:
            bits = 1 << k
            for c in self.cover_lists[k]:
                bits |= self.up[c]
            self.up[k] = bits

    @staticmethod
    def _inversions(w: MultiWord) -> int:
        s = w.letters
        return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])

    def __len__(self):
        return len(self.words)

    def _k(self, w: MultiWord) -> int:
        return self.index[w.letters]

    def leq(self, u: MultiWord, v: MultiWord) -> bool:
        return bool(self.up[self._k(u)] >> self._k(v) & 1)

    def _extremal(self, common: int, upward: bool) -> MultiWord:
        members = [k for k in range(len(self.words)) if common >> k & 1]
        for k in members:
            if upward and all(self.up[k] >> m & 1 for m in members):
                return self.words[k]
            if not upward and all(self.up[m] >> k & 1 for m in members):
                return self.words[k]
        raise ValueError("bound does not exist")

    def join(self, u: MultiWord, v: MultiWord) -> MultiWord:
        return self._extremal(self.up[self._k(u)] & self.up[self._k(v)], upward=True)

    def meet(self, u: MultiWord, v: MultiWord) -> MultiWord:
        ku, kv = self._k(u), self._k(v)
        common = 0
        for k in range(len(self.words)):
            if self.up[k] >> ku & 1 and self.up[k] >> kv & 1:
                common |= 1 << k
        return self._extremal(common, upward=False)

    def covers(self, w: MultiWord) -> list[MultiWord]:
        return [self.words[c] for c in self.cover_lists[self._k(w)]]


def enumerate_multinomial(d: int, n: int) -> MultinomialLattice:
    size = multinomial_count(d, n)
    if size > MAX_WORDS:
        raise SizeError(f"{size} words exceed the limit of {MAX_WORDS}")
    return MultinomialLattice(d, n)
