"""Conjugacy and centralisers of finite lists.

``solve_lists`` and ``centraliser_lists`` are the entry points. A list either
yields an infinite-order element (directly or as a product of consecutive
entries), in which case the problem is solved through a conjugator family of
that element, or it is conjugated to a list of short torsion elements and
handed to a bounded search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .context import GroupContext
from .errors import ArgumentError, CapReached, InconsistencyError, ParseError
from .power_conjugacy import NoPower, Periodic, Unique, test_conj_vs_sls
from .single_conjugacy import conj_candidates
from .straightness import Finite, Infinite, is_long, test_inf_order
from .words import EMPTY, Word, concat, split_half

FROM_CAPS = object()


class Status(str, Enum):
    CONJUGATE = "conjugate"
    NOT_CONJUGATE = "not_conjugate"
    UNVERIFIED = "unverified_at_cap"


@dataclass(frozen=True)
class ListOutcome:
    status: Status
    witness: Word | None = None
    route: str = ""
    detail: str = ""
    checks: tuple[str, ...] = ()

    @property
    def decided(self) -> bool:
        return self.status is not Status.UNVERIFIED

    @property
    def is_conjugate(self) -> bool:
        return self.status is Status.CONJUGATE

    def with_route(self, route: str, *checks: str) -> "ListOutcome":
        return ListOutcome(self.status, self.witness, route, self.detail, self.checks + checks)


@dataclass(frozen=True)
class ProgressionFamily:
    """Conjugators ``p * y**(R + n*T) * s`` for each ``(s, R, T)`` entry."""

    p: Word
    y: Word
    entries: tuple[tuple[Word, int, int], ...]


@dataclass(frozen=True)
class CentraliserResult:
    generators: tuple[Word, ...]
    complete: bool
    route: str = ""
    detail: str = ""
    checks: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class Shortened:
    c: Word


@dataclass(frozen=True)
class InfiniteWitness:
    """``a_j ... a_k`` (1-based, inclusive) has infinite order."""

    j: int
    k: int


def _conjugate_list(ctx: GroupContext, A: Sequence[Word], g: Word) -> list[Word]:
    return [ctx.conjugate(a, g) for a in A]


def _conjugates_to(ctx: GroupContext, A: Sequence[Word], B: Sequence[Word], g: Word) -> bool:
    return all(ctx.conjugate(a, g) == b for a, b in zip(A, B))


def _verified(ctx: GroupContext, A, B, g: Word, route: str, *checks: str) -> ListOutcome:
    if not _conjugates_to(ctx, A, B, g):
        raise InconsistencyError(f"{route}: candidate witness {ctx.format(g)!r} does not conjugate A to B")
    return ListOutcome(Status.CONJUGATE, g, route, checks=checks + ("witness verified",))


def _reduced_list(ctx: GroupContext, A: Iterable) -> list[Word]:
    return [ctx.reduce(ctx.word(a)) for a in A]


def parse_word_list(text: str, ctx: GroupContext) -> list[Word]:
    """One word per line; ``#`` starts a comment and ``1`` is the identity."""
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "1":
            words.append(EMPTY)
            continue
        try:
            words.append(ctx.word(line))
        except ParseError as exc:
            raise ParseError(exc.message, line=lineno, position=exc.position) from None
    return words


def load_word_list(path: str | Path, ctx: GroupContext) -> list[Word]:
    return parse_word_list(Path(path).read_text(), ctx)


def crt_combine(congruences: Iterable[tuple[int, int]]) -> tuple[int, int] | None:
    """Solve ``j = r_i (mod t_i)`` simultaneously; returns ``(R, T)`` with ``T = lcm(t_i)``."""
    R, T = 0, 1
    for r, t in congruences:
        if t <= 0:
            raise ArgumentError(f"modulus must be positive, got {t}")
        g = math.gcd(T, t)
        if (r - R) % g:
            return None
        step = t // g
        k = ((r - R) // g * pow(T // g, -1, step)) % step if step > 1 else 0
        R += T * k
        T *= step
        R %= T
    return R, T


def solve_infinite_case(ctx: GroupContext, A, B) -> tuple[ListOutcome, ProgressionFamily | None]:
    """All conjugators from ``A`` to ``B`` when ``A[0]`` has infinite order."""
    A, B = _reduced_list(ctx, A), _reduced_list(ctx, B)
    if len(A) != len(B) or not A:
        raise ArgumentError("lists must be non-empty and of equal length")
    route = "infinite-order"
    if not isinstance(test_inf_order(ctx, A[0]), Infinite):
        raise ArgumentError("the first entry of A must have infinite order")
    if isinstance(test_inf_order(ctx, B[0]), Finite):
        return ListOutcome(Status.NOT_CONJUGATE, route=route, detail="b1 has finite order"), None
    family = conj_candidates(ctx, A[0], B[0])
    if family is None:
        return ListOutcome(Status.NOT_CONJUGATE, route=route, detail="a1 and b1 are not conjugate"), None

    p, y = family.p, family.y
    A_p = _conjugate_list(ctx, A, p)
    entries = []
    for s in family.S:
        B_s = _conjugate_list(ctx, B, ctx.invert(s))
        congruences = []
        unique = None
        for a, b in zip(A_p, B_s):
            res = test_conj_vs_sls(ctx, a, b, y)
            if isinstance(res, NoPower):
                break
            if isinstance(res, Unique):
                unique = res.r
                break
            congruences.append((res.r, res.t))
        else:
            solution = crt_combine(congruences)
            if solution is not None:
                entries.append((s, solution[0], solution[1]))
            continue
        if unique is not None:
            g = ctx.multiply(p, ctx.power(y, unique), s)
            if _conjugates_to(ctx, A, B, g):
                entries.append((s, unique, 0))

    if not entries:
        return ListOutcome(Status.NOT_CONJUGATE, route=route, detail="no candidate survived"), None
    progression = ProgressionFamily(p, y, tuple(entries))
    s, R, _ = entries[0]
    g = ctx.multiply(p, ctx.power(y, R), s)
    return _verified(ctx, A, B, g, route), progression


def centraliser_infinite_case(ctx: GroupContext, A) -> CentraliserResult:
    A = _reduced_list(ctx, A)
    outcome, family = solve_infinite_case(ctx, A, A)
    if family is None:
        raise InconsistencyError("the identity was not found to centralise A")
    p, y = family.p, family.y
    gens: list[Word] = []
    for s, R, _ in family.entries:
        g = ctx.multiply(p, ctx.power(y, R), s)
        if g not in gens:
            gens.append(g)
    periods = {T for _, _, T in family.entries if T}
    if len(periods) > 1:
        raise InconsistencyError(f"centralising periods differ: {sorted(periods)}")
    if periods:
        (T,) = periods
        g = ctx.multiply(p, ctx.power(y, T), ctx.invert(p))
        if g not in gens:
            gens.append(g)
    for g in gens:
        if not _conjugates_to(ctx, A, A, g):
            raise InconsistencyError(f"generator {ctx.format(g)!r} does not centralise A")
    return CentraliserResult(tuple(gens), True, "infinite-order", checks=("generators centralise",))


def prefix_products(A: Sequence[Word], n: int) -> list[Word]:
    """``(a_1...a_n, a_2...a_n, ..., a_n)`` as unreduced concatenations."""
    if not 1 <= n <= len(A):
        raise ArgumentError(f"n must lie in [1, {len(A)}], got {n}")
    return [concat(A[i:n]) for i in range(n)]


def ensure_distinct(ctx: GroupContext, A, B, n: int) -> tuple[list[Word], list[Word]] | None:
    """Delete entries until the suffix products of the first ``n`` entries are nontrivial.

    Returns ``None`` when exactly one of ``a_i...a_j``, ``b_i...b_j`` is trivial,
    which rules out conjugacy.
    """
    if len(A) != len(B):
        raise ArgumentError("lists must have equal length")
    A, B = _reduced_list(ctx, A), _reduced_list(ctx, B)
    while True:
        top = min(n, len(A))
        deleted = False
        for j in range(top):
            pa = pb = EMPTY
            for i in range(j, -1, -1):
                pa = ctx.multiply(A[i], pa)
                pb = ctx.multiply(B[i], pb)
                if bool(pa) != bool(pb):
                    return None
                if not pa:
                    del A[j], B[j]
                    deleted = True
                    break
            if deleted:
                break
        if not deleted:
            return A, B


def shorten_words(ctx: GroupContext, A) -> Shortened | InfiniteWitness:
    """Find ``c`` making every ``c^-1 a_i...a_m c`` short, or an infinite-order product."""
    A = _reduced_list(ctx, A)
    m = len(A)
    c = EMPTY
    for k in range(1, m + 1):
        suffix = [EMPTY] * (k + 1)
        for j in range(k, 0, -1):
            suffix[j - 1] = ctx.multiply(A[j - 1], suffix[j])
        for j in range(1, k + 1):
            if is_long(ctx, ctx.conjugate(suffix[j - 1], c)):
                return InfiniteWitness(j, k)
        left, _ = split_half(ctx.conjugate(A[k - 1], c))
        c = ctx.multiply(c, left)

    L, d = ctx.constants.L, ctx.delta
    product = EMPTY
    for i in range(m, 0, -1):
        product = ctx.multiply(A[i - 1], product)
        if 2 * len(ctx.conjugate(product, c)) > 3 ** (m - i) * (14 * L + 2 * d + 1):
            raise InconsistencyError(f"shortened product {i} exceeds its length bound")
    return Shortened(c)


def _order_mismatch(ctx: GroupContext, A: Sequence[Word], B: Sequence[Word]) -> int | None:
    for i, (a, b) in enumerate(zip(A, B)):
        oa, ob = test_inf_order(ctx, a), test_inf_order(ctx, b)
        if isinstance(oa, Finite) != isinstance(ob, Finite) or (isinstance(oa, Finite) and oa != ob):
            return i
    return None


def test_conjugacy_exp(ctx: GroupContext, A, B, radius_cap=FROM_CAPS) -> ListOutcome:
    """Search group elements by increasing length for a conjugator.

    Orders of corresponding entries are compared first. Without a witness the
    verdict is ``NOT_CONJUGATE`` only if the theoretical radius was covered.
    """
    A, B = _reduced_list(ctx, A), _reduced_list(ctx, B)
    if len(A) != len(B):
        raise ArgumentError("lists must have equal length")
    route = "exp-search"
    bad = _order_mismatch(ctx, A, B)
    if bad is not None:
        return ListOutcome(Status.NOT_CONJUGATE, route=route, detail=f"orders of entry {bad + 1} differ",
                           checks=("order prefilter",))
    if radius_cap is FROM_CAPS:
        radius_cap = ctx.caps.conjugator_radius_cap
    mu = max((len(w) for w in A + B), default=0)
    radius, exhaustive = ctx.search_radius(radius_cap, ctx.constants.conjugator_bound(mu))
    for g in ctx.ball(radius):
        if _conjugates_to(ctx, A, B, g):
            return _verified(ctx, A, B, g, route, "order prefilter")
    if exhaustive:
        return ListOutcome(Status.NOT_CONJUGATE, route=route, detail=f"searched radius {radius}")
    return ListOutcome(Status.UNVERIFIED, route=route, detail=f"no conjugator within radius cap {radius}")


test_conjugacy_exp.__test__ = False  # not a pytest test


def _centralising_elements(ctx: GroupContext, A: list[Word], radius_cap) -> tuple[list[Word], bool, int]:
    if radius_cap is FROM_CAPS:
        radius_cap = ctx.caps.centraliser_radius_cap
    c = ctx.constants
    mu = max((len(w) for w in A), default=0)
    radius, exhaustive = ctx.search_radius(radius_cap, c.centraliser_bound(mu))
    found = [g for g in ctx.ball(radius) if _conjugates_to(ctx, A, A, g)]
    certified = (
        exhaustive
        and len(A) > c.V**4
        and len(set(A)) == len(A)
        and all(isinstance(test_inf_order(ctx, a), Finite) for a in A)
    )
    return found, certified, radius


def find_centraliser_exp(ctx: GroupContext, A, radius_cap=FROM_CAPS) -> CentraliserResult:
    """Every centralising element up to the search radius.

    Complete only for more than ``V**4`` distinct torsion elements with the full
    theoretical radius ``R*(mu + 2*delta)`` explored.
    """
    A = _reduced_list(ctx, A)
    found, certified, radius = _centralising_elements(ctx, A, radius_cap)
    return CentraliserResult(tuple(found), certified, "exp-centraliser", f"radius {radius}")


def bounded_centraliser_generators(ctx: GroupContext, A, radius_cap=FROM_CAPS) -> CentraliserResult:
    """Centralising elements up to the cap, used as a generating set.

    Stands in for the rational-structure construction of a centraliser; the
    result is flagged incomplete unless the finite-centraliser conditions hold.
    """
    A = _reduced_list(ctx, A)
    found, certified, radius = _centralising_elements(ctx, A, radius_cap)
    return CentraliserResult(tuple(found), certified, "bounded-centraliser", f"radius {radius}")


def _find_infinite_product(ctx: GroupContext, A: list[Word], B: list[Word], n: int):
    """Shared first phase: look for an infinite-order product among the first ``n`` entries.

    Returns ``("mismatch", i, j)``, ``("infinite", pa, pb, i, j)`` or
    ``("finite", c_A, c_B)``.
    """
    sa = shorten_words(ctx, A[:n])
    sb = sa if B is A else shorten_words(ctx, B[:n])
    if isinstance(sa, InfiniteWitness) or isinstance(sb, InfiniteWitness):
        w = sa if isinstance(sa, InfiniteWitness) else sb
        pa, pb = concat(A[w.j - 1:w.k]), concat(B[w.j - 1:w.k])
        ia = isinstance(test_inf_order(ctx, pa), Infinite)
        ib = ia if B is A else isinstance(test_inf_order(ctx, pb), Infinite)
        if not (ia and ib):
            return ("mismatch", w.j, w.k)
        return ("infinite", pa, pb, w.j, w.k)
    for i in range(1, n + 1):
        pa, pb = concat(A[i - 1:n]), concat(B[i - 1:n])
        ia = isinstance(test_inf_order(ctx, pa), Infinite)
        ib = ia if B is A else isinstance(test_inf_order(ctx, pb), Infinite)
        if ia or ib:
            if ia != ib:
                return ("mismatch", i, n)
            return ("infinite", pa, pb, i, n)
    return ("finite", sa.c, sb.c)


def solve_lists(ctx: GroupContext, A, B) -> ListOutcome:
    """Decide whether some ``g`` has ``g^-1 a_i g = b_i`` for all ``i``; return a witness if so."""
    A, B = _reduced_list(ctx, A), _reduced_list(ctx, B)
    if len(A) != len(B):
        raise ArgumentError("lists must have equal length")
    try:
        return _solve_lists(ctx, A, B)
    except CapReached as exc:
        return ListOutcome(Status.UNVERIFIED, route="infinite-order", detail=str(exc))


def _solve_lists(ctx: GroupContext, A: list[Word], B: list[Word]) -> ListOutcome:
    A0, B0 = A, B
    c = ctx.constants
    n = min(c.distinct_prefix_count, len(A))
    distinct = ensure_distinct(ctx, A, B, n) if A else (A, B)
    if distinct is None:
        return ListOutcome(Status.NOT_CONJUGATE, route="ensure-distinct",
                           detail="a product is trivial on one side only")
    A, B = distinct
    if not A:
        return _verified(ctx, A0, B0, EMPTY, "trivial")
    m = len(A)
    n = min(c.distinct_prefix_count, m)

    phase = _find_infinite_product(ctx, A, B, n)
    if phase[0] == "mismatch":
        return ListOutcome(Status.NOT_CONJUGATE, route="order-mismatch",
                           detail=f"product {phase[1]}..{phase[2]} has infinite order on one side only")
    if phase[0] == "infinite":
        _, pa, pb, i, j = phase
        outcome, _ = solve_infinite_case(ctx, [pa] + A, [pb] + B)
        route = f"infinite-order(product {i}..{j})"
        if outcome.is_conjugate:
            return _verified(ctx, A0, B0, outcome.witness, route)
        return outcome.with_route(route)

    _, c_a, c_b = phase
    A1 = [ctx.conjugate(ctx.reduce(w), c_a) for w in prefix_products(A, n)]
    B1 = [ctx.conjugate(ctx.reduce(w), c_b) for w in prefix_products(B, n)]
    res = test_conjugacy_exp(ctx, A1, B1)
    if not res.is_conjugate:
        return res.with_route("finite-order/" + res.route, "shorten bound")
    u = res.witness
    c_b_inv = ctx.invert(c_b)
    if m == n:
        return _verified(ctx, A0, B0, ctx.multiply(c_a, u, c_b_inv), "finite-order/short-list", "shorten bound")
    cent = find_centraliser_exp(ctx, A1)
    for w in cent.generators:
        g = ctx.multiply(c_a, w, u, c_b_inv)
        if _conjugates_to(ctx, A, B, g):
            return _verified(ctx, A0, B0, g, "finite-order/long-list", "shorten bound")
    if cent.complete:
        return ListOutcome(Status.NOT_CONJUGATE, route="finite-order/long-list")
    return ListOutcome(Status.UNVERIFIED, route="finite-order/long-list",
                       detail=f"centraliser search incomplete ({cent.detail})")


def centraliser_lists(ctx: GroupContext, A) -> CentraliserResult:
    """Generating set of the centraliser of ``A``; ``complete`` says whether it is certified."""
    A0 = _reduced_list(ctx, A)
    c = ctx.constants
    n = min(c.distinct_prefix_count, len(A0))
    A, _ = ensure_distinct(ctx, A0, A0, n) if A0 else (A0, A0)
    if not A:
        gens = tuple((x,) for x in range(len(ctx.alphabet)) if x <= ctx.alphabet.inverse[x])
        return CentraliserResult(gens, True, "trivial", "every element centralises the empty list")
    m = len(A)
    n = min(c.distinct_prefix_count, m)
    try:
        phase = _find_infinite_product(ctx, A, A, n)
        if phase[0] == "infinite":
            _, pa, _, i, j = phase
            res = centraliser_infinite_case(ctx, [pa] + A)
            gens = res.generators
            route, complete, detail = f"infinite-order(product {i}..{j})", res.complete, ""
        else:
            c_a = phase[1]
            A1 = [ctx.conjugate(ctx.reduce(w), c_a) for w in prefix_products(A, n)]
            # A1 is conjugate to itself by the identity, the first element the search would return
            c_a_inv = ctx.invert(c_a)
            if m == n:
                cent = bounded_centraliser_generators(ctx, A1)
                gens = tuple(ctx.multiply(c_a, w, c_a_inv) for w in cent.generators)
                route = "finite-order/short-list"
            else:
                cent = find_centraliser_exp(ctx, A1)
                gens = tuple(g for g in (ctx.multiply(c_a, w, c_a_inv) for w in cent.generators)
                             if _conjugates_to(ctx, A, A, g))
                route = "finite-order/long-list"
            complete, detail = cent.complete, cent.detail
    except CapReached as exc:
        return CentraliserResult((), False, "infinite-order", str(exc))
    for g in gens:
        if not _conjugates_to(ctx, A0, A0, g):
            raise InconsistencyError(f"generator {ctx.format(g)!r} does not centralise A")
    return CentraliserResult(gens, complete, route, detail, ("generators centralise",))
