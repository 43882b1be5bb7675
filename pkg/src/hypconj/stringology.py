"""Knuth-Morris-Pratt matching on letter sequences.

Matching is on raw sequences; callers pass words that are already reduced.
Every function accepts an optional ``counter`` list whose first entry is
incremented once per letter comparison, for instrumented linearity checks.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ArgumentError


def failure_function(pattern: Sequence[int], counter: list[int] | None = None) -> list[int]:
    """``f[i]`` is the length of the longest proper border of ``pattern[:i+1]``."""
    f = [0] * len(pattern)
    k = 0
    comparisons = 0
    for i in range(1, len(pattern)):
        while True:
            comparisons += 1
            if pattern[i] == pattern[k]:
                k += 1
                break
            if k == 0:
                break
            k = f[k - 1]
        f[i] = k
    if counter is not None:
        counter[0] += comparisons
    return f


def kmp_find_all(pattern: Sequence[int], text: Sequence[int], counter: list[int] | None = None) -> list[int]:
    if not pattern:
        raise ArgumentError("pattern must be non-empty")
    m = len(pattern)
    f = failure_function(pattern, counter)
    out = []
    k = 0
    comparisons = 0
    for i, c in enumerate(text):
        while True:
            comparisons += 1
            if c == pattern[k]:
                k += 1
                break
            if k == 0:
                break
            k = f[k - 1]
        if k == m:
            out.append(i - m + 1)
            k = f[k - 1]
    if counter is not None:
        counter[0] += comparisons
    return out


def primitive_root(z: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Return ``(y, l)`` with ``z == y * l`` and ``l`` maximal.

    ``|y|`` is the offset of the second occurrence of ``z`` in ``z + z``.
    """
    if not z:
        raise ArgumentError("primitive root of the empty word is undefined")
    z = tuple(z)
    j = kmp_find_all(z, z[1:] + z)[0] + 1
    return z[:j], len(z) // j


def cyclic_match(u: Sequence[int], z: Sequence[int], counter: list[int] | None = None) -> int | None:
    """Smallest ``k`` with ``u == z[k:] + z[:k]``, or ``None``."""
    if len(u) != len(z):
        return None
    if not z:
        return 0
    z = tuple(z)
    hits = kmp_find_all(u, z + z[:-1], counter)
    return hits[0] if hits else None
