"""Straightness, order testing and long powers of infinite-order elements.

The recurring test here is the *long criterion*: for a normal form ``w``,
``|reduce(w_C)| > 2L``. When it holds every positive power of
``reduce(w_C)`` labels an ``L``-local ``(1, 2*delta)``-quasigeodesic, so ``w`` has
infinite order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import GroupContext
from .errors import ArgumentError, CapReached, InconsistencyError
from .words import EMPTY, Word, split_half


@dataclass(frozen=True)
class Finite:
    order: int


@dataclass(frozen=True)
class Infinite:
    witness_power: int


OrderClass = Finite | Infinite


@dataclass(frozen=True)
class StraighteningResult:
    k: int
    a: Word
    z: Word


def reduced_half_cyclic(ctx: GroupContext, w: Word) -> Word:
    """``reduce(w_C)`` for a normal form ``w``."""
    left, right = split_half(w)
    return ctx.multiply(right, left)


def is_long(ctx: GroupContext, w: Word) -> bool:
    return len(reduced_half_cyclic(ctx, w)) > 2 * ctx.constants.L


def _require_reduced(ctx: GroupContext, u: Word, what: str = "u") -> None:
    if ctx.reduce(u) != u:
        raise ArgumentError(f"{what} must be shortlex reduced")


def is_shortlex_straight(ctx: GroupContext, u: Word, power: int | None = None) -> bool:
    """True iff ``u**k`` is shortlex reduced for every ``k <= power``.

    ``power`` defaults to the context's ``straight_check_power``. The bounded
    check is exact for free groups (``power >= 2``) and for free products of
    cyclic groups, where a word with at least two syllables is straight as
    soon as its square is reduced.
    """
    if not u:
        raise ArgumentError("the empty word is not straight")
    _require_reduced(ctx, u)
    power = power or ctx.caps.straight_check_power
    p = u
    for k in range(2, power + 1):
        p = ctx.multiply(p, u)
        if len(p) != k * len(u) or p != u * k:
            return False
    return True


def test_inf_order(ctx: GroupContext, w: Word) -> OrderClass:
    """Classify the order of ``w``.

    Scans powers of ``reduce(w_C)`` up to the torsion bound (the size of the
    ``(4*delta+2)``-ball, which bounds the order of any torsion element). At
    powers of two the long criterion is tried, which certifies infinite order
    early.
    """
    w = ctx.reduce(w)
    if not w:
        return Finite(1)
    c = ctx.constants
    wc = reduced_half_cyclic(ctx, w)
    p, n = wc, 1
    while n <= c.torsion_order_bound:
        if not p:
            return Finite(n)
        if n & (n - 1) == 0 and is_long(ctx, p):
            return Infinite(n)
        p = ctx.multiply(p, wc)
        n += 1
    # no torsion below the bound: the order is infinite, find the witness power
    n = 1
    while n <= c.M:
        n <<= 1
        if is_long(ctx, ctx.power(wc, n)):
            return Infinite(n)
    raise InconsistencyError("infinite-order element never satisfied the long criterion; delta too small?")


test_inf_order.__test__ = False  # not a pytest test


def straighten_power(ctx: GroupContext, u: Word) -> StraighteningResult:
    """Find the least ``k`` and shortlex-least short ``a`` making ``reduce(a^-1 u^k a)`` straight."""
    _require_reduced(ctx, u)
    c = ctx.constants
    if len(u) <= c.L:
        raise ArgumentError(f"straighten_power needs |u| > L = {c.L}")
    conjugators = ctx.ball(4 * ctx.delta)
    uk = EMPTY
    for k in range(1, c.V**4 + 1):
        uk = ctx.multiply(uk, u)
        for a in conjugators:
            z = ctx.conjugate(uk, a)
            if z and is_shortlex_straight(ctx, z):
                return StraighteningResult(k, a, z)
    raise InconsistencyError("no straight conjugate of a power within the bounds; delta too small?")


def common_long_power(ctx: GroupContext, u: Word, v: Word) -> tuple[int, Word, Word]:
    """Least ``n`` in ``L, 2L, 4L, ...`` making both ``reduce((u_C)^n)`` and ``reduce((v_C)^n)`` long."""
    _require_reduced(ctx, u)
    _require_reduced(ctx, v, "v")
    for w in (u, v):
        if isinstance(test_inf_order(ctx, w), Finite):
            raise ArgumentError("common_long_power needs infinite-order words")
    c = ctx.constants
    cap = ctx.power_cap()
    uc, vc = reduced_half_cyclic(ctx, u), reduced_half_cyclic(ctx, v)
    n = c.L
    while n <= cap:
        u1, v1 = ctx.power(uc, n), ctx.power(vc, n)
        if is_long(ctx, u1) and is_long(ctx, v1):
            return n, u1, v1
        n *= 2
    if ctx.caps.profile == "paper" or cap >= c.M:
        raise InconsistencyError("long criterion failed up to the power M; delta too small?")
    raise CapReached(f"long-power schedule reached the practical cap n <= {cap}")
