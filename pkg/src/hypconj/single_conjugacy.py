"""Candidate conjugators between two infinite-order elements.

Every conjugator ``g`` with ``u^g = v`` is described as ``p * y**n * s`` for a
straight word ``y``, some integer ``n`` and ``s`` from a bounded set ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import GroupContext
from .errors import ArgumentError, InconsistencyError
from .stringology import kmp_find_all, primitive_root
from .straightness import (
    Finite,
    common_long_power,
    is_long,
    is_shortlex_straight,
    reduced_half_cyclic,
    straighten_power,
    test_inf_order,
)
from .words import Word, split_half


@dataclass(frozen=True)
class ConjugatorFamily:
    p: Word
    y: Word
    S: tuple[Word, ...]

    def member(self, ctx: GroupContext, n: int, s: Word) -> Word:
        return ctx.multiply(self.p, ctx.power(self.y, n), s)


def _same_coset(ctx: GroupContext, s1: Word, s2: Word, y: Word) -> bool:
    """Whether ``s1 = y**i * s2`` for some integer ``i`` (``y`` straight)."""
    q = ctx.multiply(s1, ctx.invert(s2))
    if len(q) % len(y):
        return False
    i = len(q) // len(y)
    return q == y * i or q == ctx.invert(y * i)


def sls_centraliser(ctx: GroupContext, z: Word) -> tuple[Word, int, list[Word]]:
    """Coset representatives ``S'`` with ``C(z)`` inside ``<y> S'``, where ``z = y**l``.

    A centralising element has the form ``y**i * y1 * h`` with ``y1`` a proper
    prefix of ``y`` and ``|h| <= 2*delta``. Conjugating ``z`` by ``y1`` rotates it,
    so ``y1 * h`` centralises ``z`` exactly when ``reduce(h z h^-1)`` is the
    rotation of ``z`` by ``|y1|``; the rotations are found with KMP.
    """
    if not z:
        raise ArgumentError("z must be non-empty")
    if not is_shortlex_straight(ctx, z):
        raise ArgumentError("z must be shortlex straight")
    y, l = primitive_root(z)
    zz = z + z
    candidates = set()
    for h in ctx.ball(2 * ctx.delta):
        w = ctx.conjugate(z, ctx.invert(h))
        if len(w) != len(z):
            continue
        for k in kmp_find_all(w, zz):
            if k >= len(y):
                break
            candidates.add(ctx.multiply(y[:k], h))
    reps: list[Word] = []
    for s in sorted(candidates, key=lambda w: (len(w), w)):
        if not any(_same_coset(ctx, s, r, y) for r in reps):
            reps.append(s)
    if len(reps) > ctx.constants.V:
        raise InconsistencyError(f"|S'| = {len(reps)} exceeds V = {ctx.constants.V}")
    return y, l, reps


def eh_solve_conj(ctx: GroupContext, u: Word, v: Word) -> ConjugatorFamily | None:
    """Conjugator family for long words ``u``, ``v``; ``None`` when they are not conjugate."""
    for w, name in ((u, "u"), (v, "v")):
        if ctx.reduce(w) != w:
            raise ArgumentError(f"{name} must be shortlex reduced")
        if not is_long(ctx, w):
            raise ArgumentError(f"{name} must satisfy |{name}_C| > 2L")
    u_left, _ = split_half(u)
    v_left, _ = split_half(v)
    st = straighten_power(ctx, reduced_half_cyclic(ctx, u))
    z = st.z
    y, _ = primitive_root(z)
    if not is_shortlex_straight(ctx, y):
        raise InconsistencyError("primitive root of a shortlex straight word is not straight")

    target = ctx.power(reduced_half_cyclic(ctx, v), st.k)
    zz = z + z
    c = None
    for b in ctx.ball(6 * ctx.delta):
        w = ctx.conjugate(target, b)
        if len(w) != len(z):
            continue
        hits = kmp_find_all(w, zz)
        if hits:
            c = ctx.multiply(z[: hits[0]], ctx.invert(b))
            break
    if c is None:
        return None

    _, _, s_prime = sls_centraliser(ctx, z)
    p = ctx.multiply(u_left, st.a)
    tail = ctx.multiply(c, ctx.invert(v_left))
    S = tuple(ctx.multiply(s, tail) for s in s_prime)
    return ConjugatorFamily(p, y, S)


def conj_candidates(ctx: GroupContext, u: Word, v: Word) -> ConjugatorFamily | None:
    """Conjugator family for arbitrary infinite-order ``u``, ``v``.

    Short words are first replaced by long powers of their half-cyclic
    conjugates; when both inputs already satisfy the long criterion they are
    used directly.
    """
    u, v = ctx.reduce(u), ctx.reduce(v)
    for w in (u, v):
        if isinstance(test_inf_order(ctx, w), Finite):
            raise ArgumentError("conj_candidates needs infinite-order words")
    if is_long(ctx, u) and is_long(ctx, v):
        family = eh_solve_conj(ctx, u, v)
    else:
        _, u1, v1 = common_long_power(ctx, u, v)
        inner = eh_solve_conj(ctx, u1, v1)
        if inner is None:
            return None
        u_left, _ = split_half(u)
        v_left, _ = split_half(v)
        v_left_inv = ctx.invert(v_left)
        family = ConjugatorFamily(
            ctx.multiply(u_left, inner.p),
            inner.y,
            tuple(ctx.multiply(s, v_left_inv) for s in inner.S),
        )
    if family is not None and len(family.S) > ctx.constants.V:
        raise InconsistencyError(f"|S| = {len(family.S)} exceeds V = {ctx.constants.V}")
    return family
