"""Brute-force ground truth used to cross-check the solver.

Everything here is deliberately naive: words are multiplied by concatenation
followed by a full ``reduce``, and searches enumerate balls exhaustively.

``estimate_delta`` only inspects triangles inside a small ball, so it can
show that a configured delta is too small but it can never certify one.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .context import GroupContext
from .errors import ArgumentError, BudgetError
from .stringology import cyclic_match, primitive_root
from .words import EMPTY, Word, invert, shortlex_key

DEFAULT_BUDGET = 500_000


def ball(ctx: GroupContext, radius: int, budget: int = DEFAULT_BUDGET) -> list[Word]:
    """All normal forms of length at most ``radius``, by length then shortlex."""
    if radius < 0:
        raise ArgumentError("radius must be non-negative")
    found = {EMPTY}
    frontier = [EMPTY]
    letters = range(len(ctx.alphabet))
    for _ in range(radius):
        nxt = set()
        for g in frontier:
            for x in letters:
                h = ctx.reduce(g + (x,))
                if h not in found:
                    nxt.add(h)
        found |= nxt
        if len(found) > budget:
            raise BudgetError(f"oracle ball exceeds {budget} elements")
        frontier = list(nxt)
        if not frontier:
            break
    return sorted(found, key=shortlex_key)


@lru_cache(maxsize=16)
def _cached_ball(ctx: GroupContext, radius: int) -> tuple[Word, ...]:
    return tuple(ball(ctx, radius))


def _conj(ctx: GroupContext, w: Word, g: Word) -> Word:
    return ctx.reduce(invert(g, ctx.alphabet) + w + g)


def brute_conjugator(ctx: GroupContext, A: Sequence[Word], B: Sequence[Word], radius: int) -> Word | None:
    """Shortlex-least ``g`` of length at most ``radius`` with ``g^-1 a_i g = b_i``."""
    if len(A) != len(B):
        raise ArgumentError("lists must have equal length")
    A = [ctx.reduce(a) for a in A]
    B = [ctx.reduce(b) for b in B]
    for g in _cached_ball(ctx, radius):
        if all(_conj(ctx, a, g) == b for a, b in zip(A, B)):
            return g
    return None


def brute_centraliser(ctx: GroupContext, A: Sequence[Word], radius: int) -> list[Word]:
    A = [ctx.reduce(a) for a in A]
    return [g for g in _cached_ball(ctx, radius) if all(_conj(ctx, a, g) == a for a in A)]


def _require_free(ctx: GroupContext) -> None:
    if not ctx.is_free:
        raise ArgumentError(f"{ctx.name} is not a free group")


def _free_reduce(w: Word, inv: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == inv[x]:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _cyclic_split(w: Word, inv: Sequence[int]) -> tuple[Word, Word]:
    """``w = c * core * c^-1`` with ``core`` cyclically reduced; ``w`` freely reduced."""
    i = 0
    while 2 * i + 1 < len(w) and w[i] == inv[w[-1 - i]]:
        i += 1
    return w[:i], w[i:len(w) - i]


def free_conjugacy_oracle(ctx: GroupContext, u: Word, v: Word) -> bool:
    """Free-group conjugacy: cyclic reductions agree up to rotation."""
    _require_free(ctx)
    inv = ctx.alphabet.inverse
    cu = _cyclic_split(_free_reduce(u, inv), inv)[1]
    cv = _cyclic_split(_free_reduce(v, inv), inv)[1]
    return cyclic_match(cu, cv) is not None


def free_root(ctx: GroupContext, w: Word) -> tuple[Word, int]:
    """``(r, k)`` with ``w = r**k`` and ``r`` not a proper power; ``w`` non-trivial."""
    _require_free(ctx)
    inv = ctx.alphabet.inverse
    w = _free_reduce(w, inv)
    if not w:
        raise ArgumentError("the identity has no root")
    c, core = _cyclic_split(w, inv)
    root, k = primitive_root(core)
    return c + root + invert(c, ctx.alphabet), k


def in_free_cyclic_subgroup(ctx: GroupContext, g: Word, generators: Sequence[Word]) -> bool:
    """Membership of ``g`` in the subgroup generated by powers of a common root."""
    inv = ctx.alphabet.inverse
    g = _free_reduce(g, inv)
    gens = [h for h in (_free_reduce(x, inv) for x in generators) if h]
    if not g:
        return True
    if not gens:
        return False
    root, _ = free_root(ctx, gens[0])
    root_inv = invert(root, ctx.alphabet)
    step = 0
    for h in gens:
        r, k = free_root(ctx, h)
        if r == root:
            step = gcd(step, k)
        elif r == root_inv:
            step = gcd(step, k)
        else:
            raise ArgumentError("generators are not powers of a common root")
    r, k = free_root(ctx, g)
    if r not in (root, root_inv):
        return False
    return k % step == 0


def gromov_product(ctx: GroupContext, x: Word, y: Word, z: Word) -> Fraction:
    """``(x, y)_z = (d(x, z) + d(y, z) - d(x, y)) / 2``."""
    d = lambda p, q: len(ctx.reduce(invert(p, ctx.alphabet) + q))
    return Fraction(d(x, z) + d(y, z) - d(x, y), 2)


def _path(ctx: GroupContext, start: Word, end: Word) -> list[Word]:
    """Vertices of the normal-form geodesic from ``start`` to ``end``."""
    step = ctx.reduce(invert(start, ctx.alphabet) + end)
    return [ctx.reduce(start + step[:i]) for i in range(len(step) + 1)]


def estimate_delta(ctx: GroupContext, radius: int) -> int:
    """Largest distance between corresponding points over triangles ``(1, g, h)`` in the ball."""
    elements = ball(ctx, radius)
    worst = 0
    dist = lambda p, q: len(ctx.reduce(invert(p, ctx.alphabet) + q))
    for g in elements:
        for h in elements:
            corners = (EMPTY, g, h)
            for i in range(3):
                z, x, y = corners[i], corners[(i + 1) % 3], corners[(i + 2) % 3]
                reach = gromov_product(ctx, x, y, z)
                px, py = _path(ctx, z, x), _path(ctx, z, y)
                for t in range(int(reach) + 1):
                    worst = max(worst, dist(px[t], py[t]))
    return worst


def random_normal_form(ctx: GroupContext, length: int, rng) -> Word:
    """A uniformly drawn letter sequence, reduced and extended until it has ``length`` letters."""
    n = len(ctx.alphabet)
    w = EMPTY
    while len(w) < length:
        w = ctx.reduce(w + tuple(rng.randrange(n) for _ in range(length - len(w))))
    return w[:length]
