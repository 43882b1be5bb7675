"""Which powers ``y**n`` of a straight word conjugate ``u`` to ``v``.

For a large enough exponent ``N`` the length of ``g^(y^N)`` separates two
behaviours: either some ``y**e`` with ``0 < e <= V`` centralises ``g`` and all
conjugates stay short, or the conjugates grow linearly in ``n`` at rate
``2|y|`` up to ``3*delta``. Comparing the growth of ``u`` and ``v`` pins the
candidate exponents down to a window of at most ``6*delta + 1`` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .context import GroupContext
from .errors import ArgumentError, InconsistencyError
from .words import Word


@dataclass(frozen=True)
class BoundedCentral:
    pass


@dataclass(frozen=True)
class Escaping:
    length: int


@dataclass(frozen=True)
class Periodic:
    """``u^(y^j) = v`` iff ``j = r (mod t)``."""

    r: int
    t: int
    probes: int = field(default=0, compare=False)

    def __contains__(self, j: int) -> bool:
        return j % self.t == self.r


@dataclass(frozen=True)
class Unique:
    r: int
    probes: int = field(default=0, compare=False)

    def __contains__(self, j: int) -> bool:
        return j == self.r


@dataclass(frozen=True)
class NoPower:
    probes: int = field(default=0, compare=False)

    def __contains__(self, j: int) -> bool:
        return False


PowerConjResult = Periodic | Unique | NoPower


def _exponent(ctx: GroupContext, lengths: int, y: Word) -> int:
    return ctx.constants.V + 1 + (lengths + ctx.delta) // len(y)


def classify_large_power(ctx: GroupContext, g: Word, y: Word, n: int | None = None) -> BoundedCentral | Escaping:
    """Decide whether some power of ``y`` centralises ``g`` from the length of one conjugate."""
    if not y:
        raise ArgumentError("y must be non-empty")
    g, y = ctx.reduce(g), ctx.reduce(y)
    if n is None:
        n = _exponent(ctx, len(g), y)
    length = len(ctx.conjugate(g, ctx.power(y, n)))
    if length <= len(g) + 2 * ctx.delta:
        return BoundedCentral()
    return Escaping(length)


def test_conj_vs_sls(ctx: GroupContext, u: Word, v: Word, y: Word) -> PowerConjResult:
    if not y:
        raise ArgumentError("y must be non-empty")
    u, v, y = ctx.reduce(u), ctx.reduce(v), ctx.reduce(y)
    c = ctx.constants
    d = ctx.delta
    n = _exponent(ctx, len(u) + len(v), y)
    cu = classify_large_power(ctx, u, y, n)
    cv = classify_large_power(ctx, v, y, n)
    if type(cu) is not type(cv):
        return NoPower()

    if isinstance(cu, BoundedCentral):
        probes = 0
        yt = y
        for t in range(1, c.V + 1):
            probes += 1
            if ctx.conjugate(u, yt) == u:
                break
            yt = ctx.multiply(yt, y)
        else:
            raise InconsistencyError("no power y^e with e <= V centralises a bounded conjugate")
        yr = ()
        for r in range(t):
            probes += 1
            if ctx.conjugate(u, yr) == v:
                return Periodic(r, t, probes)
            yr = ctx.multiply(yr, y)
        return NoPower(probes)

    diff = cv.length - cu.length
    lo = -((6 * d - diff) // (2 * len(y)))  # ceil((diff - 6d) / 2|y|)
    hi = (diff + 6 * d) // (2 * len(y))
    probes = 0
    for r in range(lo, hi + 1):
        probes += 1
        if ctx.conjugate(u, ctx.power(y, r)) == v:
            return Unique(r, probes)
    return NoPower(probes)


test_conj_vs_sls.__test__ = False  # not a pytest test
