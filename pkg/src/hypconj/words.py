"""Alphabets and words.

A word is a plain tuple of letter indices into an :class:`Alphabet`. The
index order is the generator order used for shortlex comparisons, so
``(len(w), w)`` is already a shortlex sort key.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArgumentError, ParseError

Word = tuple[int, ...]

EMPTY: Word = ()


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    inverse: tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != len(self.inverse):
            raise ArgumentError("symbols and inverse table differ in length")
        if len(set(self.symbols)) != len(self.symbols):
            raise ArgumentError("duplicate letter symbol")
        for s in self.symbols:
            if len(s) != 1 or not s.isascii() or not s.isalpha():
                raise ArgumentError(f"letter symbols must be single ASCII letters, got {s!r}")
        for x, y in enumerate(self.inverse):
            if not 0 <= y < len(self.inverse) or self.inverse[y] != x:
                raise ArgumentError("inverse table is not an involution")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[str, str]]) -> "Alphabet":
        """Build ``g, G, h, H, ...`` from (generator, inverse) pairs.

        A pair with equal entries declares a self-inverse letter.
        """
        symbols: list[str] = []
        inverse: list[int] = []
        for g, ginv in pairs:
            i = len(symbols)
            if g == ginv:
                symbols.append(g)
                inverse.append(i)
            else:
                symbols += [g, ginv]
                inverse += [i + 1, i]
        return cls(tuple(symbols), tuple(inverse))

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def gen_count(self) -> int:
        """Number of generators before inverse closure (orbits of ``inverse``)."""
        return sum(1 for x, y in enumerate(self.inverse) if x <= y)

    def index(self, symbol: str) -> int:
        return self._index[symbol]


def parse_word(text: str, alphabet: Alphabet) -> Word:
    index = alphabet._index
    out = []
    for pos, ch in enumerate(text, start=1):
        try:
            out.append(index[ch])
        except KeyError:
            raise ParseError(f"unknown letter {ch!r}", position=pos) from None
    return tuple(out)


def format_word(w: Word, alphabet: Alphabet) -> str:
    return "".join(alphabet.symbols[x] for x in w)


def invert(w: Word, alphabet: Alphabet) -> Word:
    inv = alphabet.inverse
    return tuple(inv[x] for x in reversed(w))


def split_half(w: Word) -> tuple[Word, Word]:
    """Return ``(w_L, w_R)`` with ``w_L`` the first ``floor(|w|/2)`` letters."""
    l = len(w) // 2
    return w[:l], w[l:]


def half_cyclic(w: Word) -> Word:
    left, right = split_half(w)
    return right + left


def concat(words: Iterable[Word]) -> Word:
    return tuple(x for w in words for x in w)


def shortlex_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)
