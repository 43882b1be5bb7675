"""Group backends, the :class:`GroupContext` every algorithm takes, and derived constants.

Two backends are provided:

* :class:`FreeProductBackend` covers free groups and free products of cyclic
  groups (finite or infinite factors) with an exact syllable normal form.
* :class:`RewritingSystemBackend` applies a precomputed, shortlex-reducing and
  (trusted) confluent rewriting system.

Group definition files are line based; see :func:`parse_group`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ArgumentError, BudgetError, ConfigError, ParseError
from .words import EMPTY, Alphabet, Word, format_word, invert, parse_word

DEFAULT_BALL_BUDGET = 250_000


class FreeProductBackend:
    """Free product of cyclic groups; an order of 0 means an infinite cyclic factor.

    Factor ``i`` contributes the letter ``g`` (and ``G`` unless the factor has
    order 2, in which case ``g`` is self-inverse). Letters are ordered factor
    by factor, generator before inverse.
    """

    def __init__(self, orders: Sequence[int], names: Sequence[str] | None = None):
        orders = tuple(int(n) for n in orders)
        if not orders:
            raise ConfigError("a free product needs at least one factor")
        for n in orders:
            if n == 1 or n < 0:
                raise ConfigError(f"invalid cyclic factor order {n}")
        if names is None:
            names = [chr(ord("a") + i) for i in range(len(orders))]
        if len(names) != len(orders):
            raise ConfigError("number of generator names does not match number of factors")
        pairs = []
        for name, n in zip(names, orders):
            if len(name) != 1 or not name.islower():
                raise ConfigError(f"generator names must be single lowercase letters, got {name!r}")
            pairs.append((name, name) if n == 2 else (name, name.upper()))
        self.alphabet = Alphabet.from_pairs(pairs)
        self.orders = orders
        factor, step, gen_letter = [], [], []
        for f, n in enumerate(orders):
            gen_letter.append(len(factor))
            factor.append(f)
            step.append(1)
            if n != 2:
                factor.append(f)
                step.append(-1)
        self._factor = tuple(factor)
        self._step = tuple(step)
        self._gen = tuple(gen_letter)
        self.is_free = all(n == 0 for n in orders)
        self.max_finite_syllable = max([n // 2 for n in orders if n] or [1])

    @property
    def kind(self) -> str:
        return "free" if self.is_free else "free_product"

    def describe(self) -> str:
        if self.is_free:
            return f"FreeGroup({len(self.orders)})"
        return "*".join("Z" if n == 0 else f"Z{n}" for n in self.orders)

    def _syllable(self, f: int, e: int) -> Word:
        g = self._gen[f]
        n = self.orders[f]
        if n == 0:
            return (g,) * e if e > 0 else (g + 1,) * (-e)
        if n == 2:
            return (g,)
        # shortest exponent representative; ties go to the generator (it sorts first)
        return (g,) * e if e <= n - e else (g + 1,) * (n - e)

    def reduce(self, w: Word) -> Word:
        if self.is_free:
            inv = self.alphabet.inverse
            out: list[int] = []
            for x in w:
                if out and out[-1] == inv[x]:
                    out.pop()
                else:
                    out.append(x)
            return tuple(out)
        factor, step, orders = self._factor, self._step, self.orders
        fs: list[int] = []
        es: list[int] = []
        for x in w:
            f = factor[x]
            if fs and fs[-1] == f:
                e = es[-1] + step[x]
                if orders[f]:
                    e %= orders[f]
                if e:
                    es[-1] = e
                else:
                    fs.pop()
                    es.pop()
            else:
                fs.append(f)
                es.append(step[x] % orders[f] if orders[f] else step[x])
        out = []
        for f, e in zip(fs, es):
            out.extend(self._syllable(f, e))
        return tuple(out)

    def multiply(self, x: Word, y: Word) -> Word:
        """Normal form of ``x*y`` for normal forms ``x`` and ``y``.

        Only the syllables meeting at the junction are touched.
        """
        if not x:
            return y
        if not y:
            return x
        if self.is_free:
            inv = self.alphabet.inverse
            c, top = 0, min(len(x), len(y))
            while c < top and x[-1 - c] == inv[y[c]]:
                c += 1
            return x[: len(x) - c] + y[c:]
        factor, step = self._factor, self._step
        i, j = len(x), 0
        while i > 0 and j < len(y):
            f = factor[x[i - 1]]
            if factor[y[j]] != f:
                break
            i0 = i - 1
            while i0 > 0 and factor[x[i0 - 1]] == f:
                i0 -= 1
            j1 = j + 1
            while j1 < len(y) and factor[y[j1]] == f:
                j1 += 1
            e = sum(step[c] for c in x[i0:i]) + sum(step[c] for c in y[j:j1])
            if self.orders[f]:
                e %= self.orders[f]
            i, j = i0, j1
            if e:
                return x[:i] + self._syllable(f, e) + y[j:]
        return x[:i] + y[j:]


class RewritingSystemBackend:
    """Shortlex-reducing rewriting system applied to exhaustion.

    Rewriting is stack based: letters are pushed one at a time and any rule
    whose left side became a suffix is applied at once, which gives the
    leftmost-innermost strategy. The result is irreducible; it is the shortlex
    normal form only if the system is confluent, which is trusted.
    """

    kind = "rws"

    def __init__(self, alphabet: Alphabet, rules: dict[Word, Word], step_budget: int | None = None):
        self.alphabet = alphabet
        rules = dict(rules)
        for x, y in enumerate(alphabet.inverse):
            rules.setdefault((x, y), EMPTY)
        for lhs, rhs in rules.items():
            if not lhs:
                raise ConfigError("rule with empty left-hand side")
            if (len(rhs), rhs) >= (len(lhs), lhs):
                raise ConfigError(
                    f"rule {format_word(lhs, alphabet)} -> {format_word(rhs, alphabet) or '1'} "
                    "is not shortlex reducing"
                )
        self.rules = rules
        self._lengths = sorted({len(lhs) for lhs in rules})
        self.step_budget = step_budget
        self.is_free = False

    def describe(self) -> str:
        return f"RewritingSystem({len(self.rules)} rules)"

    def _rewrite(self, out: list[int], w: Word) -> Word:
        rules, lengths = self.rules, self._lengths
        pending = list(reversed(w))
        budget = self.step_budget or 100_000 + 1_000 * (len(out) + len(w))
        steps = 0
        while pending:
            out.append(pending.pop())
            n = len(out)
            for k in lengths:
                if k > n:
                    break
                rhs = rules.get(tuple(out[n - k:]))
                if rhs is not None:
                    del out[n - k:]
                    pending.extend(reversed(rhs))
                    steps += 1
                    if steps > budget:
                        raise ConfigError(
                            f"rewriting exceeded {budget} steps; the rule set is likely invalid"
                        )
                    break
        return tuple(out)

    def reduce(self, w: Word) -> Word:
        return self._rewrite([], w)

    def multiply(self, x: Word, y: Word) -> Word:
        return self._rewrite(list(x), y)


@dataclass(frozen=True)
class Caps:
    """Search limits.

    ``None`` for a radius or power cap means "use the theoretical bound"; this
    is the ``paper`` profile. The ``practical`` profile caps searches so
    that they finish at desk scale and reports anything cut short.
    """

    profile: str = "practical"
    straight_check_power: int = 4
    conjugator_radius_cap: int | None = 10
    centraliser_radius_cap: int | None = 8
    power_cap: int | None = None  # None: 64*L in the practical profile, M in the paper profile
    hard_radius: int = 16
    ball_budget: int = DEFAULT_BALL_BUDGET

    @classmethod
    def practical(cls, **overrides) -> "Caps":
        return cls(**overrides)

    @classmethod
    def paper(cls, **overrides) -> "Caps":
        base = dict(profile="paper", conjugator_radius_cap=None, centraliser_radius_cap=None)
        base.update(overrides)
        return cls(**base)


@dataclass(frozen=True)
class Constants:
    delta: int
    L: int
    V: int
    M: int
    k: int
    R: int
    torsion_order_bound: int
    distinct_prefix_count: int

    def conjugator_bound(self, mu: int) -> int | None:
        """Radius that must be searched to refute conjugacy of finite-order lists.

        ``R*(mu + 2*delta) + V**(4*V**4)``; returns ``None`` when the second term
        is too large to be worth materialising (any practical radius is below it).
        """
        exponent = 4 * self.V**4
        if exponent * self.V.bit_length() > 4096:
            return None
        return self.R * (mu + 2 * self.delta) + self.V**exponent

    def centraliser_bound(self, mu: int) -> int:
        return self.R * (mu + 2 * self.delta)


class GroupContext:
    """A group backend together with its hyperbolicity constant and search caps."""

    def __init__(self, backend, delta: int = 1, caps: Caps | None = None, name: str | None = None):
        if int(delta) < 1:
            raise ConfigError("delta must be a positive integer")
        self.backend = backend
        self.alphabet: Alphabet = backend.alphabet
        self.delta = int(delta)
        self.caps = caps or Caps()
        self.name = name or backend.describe()
        self._balls: dict[int, list[Word]] = {}

    def __repr__(self):
        return f"GroupContext({self.name}, delta={self.delta}, profile={self.caps.profile})"

    def with_caps(self, caps: Caps | None = None, **overrides) -> "GroupContext":
        new = GroupContext(self.backend, self.delta, replace(caps or self.caps, **overrides), self.name)
        new._balls = self._balls
        if "constants" in self.__dict__:
            new.__dict__["constants"] = self.__dict__["constants"]
        return new

    @property
    def is_free(self) -> bool:
        return self.backend.is_free

    # words

    def word(self, w: str | Iterable[int]) -> Word:
        if isinstance(w, str):
            return parse_word(w, self.alphabet)
        w = tuple(w)
        n = len(self.alphabet)
        for x in w:
            if not isinstance(x, int) or not 0 <= x < n:
                raise ArgumentError(f"letter {x!r} is not in the alphabet")
        return w

    def words(self, ws: Iterable[str | Iterable[int]]) -> list[Word]:
        return [self.word(w) for w in ws]

    def format(self, w: Word) -> str:
        return format_word(w, self.alphabet)

    def invert(self, w: Word) -> Word:
        return invert(w, self.alphabet)

    # group operations

    def reduce(self, w: Word) -> Word:
        return self.backend.reduce(w)

    def geodesic_length(self, w: Word) -> int:
        return len(self.backend.reduce(w))

    def multiply(self, *ws: Word) -> Word:
        """Normal form of the product of normal forms."""
        out = EMPTY
        for w in ws:
            out = self.backend.multiply(out, w)
        return out

    def conjugate(self, w: Word, g: Word) -> Word:
        """Normal form of ``g^-1 w g`` for normal forms ``w`` and ``g``."""
        m = self.backend.multiply
        return m(m(invert(g, self.alphabet), w), g)

    def power(self, w: Word, n: int) -> Word:
        """Normal form of ``w**n`` (``n`` may be negative) for a normal form ``w``."""
        if n < 0:
            w, n = invert(w, self.alphabet), -n
        result, base = EMPTY, w
        while n:
            if n & 1:
                result = self.backend.multiply(result, base)
            n >>= 1
            if n:
                base = self.backend.multiply(base, base)
        return result

    def equal(self, u: Word, v: Word) -> bool:
        return self.reduce(u) == self.reduce(v)

    # enumeration

    def ball(self, radius: int) -> list[Word]:
        """Normal forms of all elements within ``radius`` of the identity.

        Breadth-first over the Cayley graph, one layer at a time, each layer in
        shortlex order.
        """
        if radius < 0:
            raise ArgumentError("radius must be non-negative")
        if radius in self._balls:
            return self._balls[radius]
        elements: list[Word] = [EMPTY]
        seen = {EMPTY}
        layer = [EMPTY]
        letters = [(x,) for x in range(len(self.alphabet))]
        budget = self.caps.ball_budget
        for depth in range(1, radius + 1):
            nxt = []
            for g in layer:
                for x in letters:
                    h = self.backend.multiply(g, x)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            if len(seen) > budget:
                raise BudgetError(f"ball of radius {depth} has more than {budget} elements")
            nxt.sort(key=lambda w: (len(w), w))
            elements.extend(nxt)
            layer = nxt
            self._balls.setdefault(depth, list(elements))
            if not layer:
                break
        self._balls[radius] = elements
        return elements

    @cached_property
    def constants(self) -> Constants:
        return derive_constants(self)

    # cap resolution

    def power_cap(self) -> int:
        if self.caps.power_cap is not None:
            return self.caps.power_cap
        c = self.constants
        return c.M if self.caps.profile == "paper" else 64 * c.L

    def search_radius(self, cap: int | None, theoretical: int | None) -> tuple[int, bool]:
        """Resolve a search radius; returns ``(radius, reaches_theoretical_bound)``."""
        if cap is None:
            if theoretical is None or theoretical > self.caps.hard_radius:
                shown = "astronomical" if theoretical is None else str(theoretical)
                raise BudgetError(
                    f"{self.caps.profile} profile: theoretical search radius {shown} exceeds "
                    f"the hard limit {self.caps.hard_radius}; use the practical profile"
                )
            return theoretical, True
        if theoretical is not None and cap >= theoretical:
            return theoretical, True
        if cap > self.caps.hard_radius:
            raise BudgetError(f"search radius {cap} exceeds the hard limit {self.caps.hard_radius}")
        return cap, False


def derive_constants(ctx: GroupContext) -> Constants:
    d = ctx.delta
    L = 34 * d + 2
    V = len(ctx.ball(2 * d))
    k = ctx.alphabet.gen_count
    return Constants(
        delta=d,
        L=L,
        V=V,
        M=20 * d * d * V**3 * L * L,
        k=k,
        R=(2 * k + 5) ** (4 * d + 2),
        torsion_order_bound=len(ctx.ball(4 * d + 2)),
        distinct_prefix_count=V**4 + 1,
    )


def free_group(rank: int, delta: int = 1, caps: Caps | None = None) -> GroupContext:
    return GroupContext(FreeProductBackend([0] * rank), delta, caps)


def free_product(orders: Sequence[int], names: Sequence[str] | None = None, delta: int = 1,
                 caps: Caps | None = None) -> GroupContext:
    return GroupContext(FreeProductBackend(orders, names), delta, caps)


# group definition files

def _parse_letters(text: str, alphabet: Alphabet, lineno: int) -> Word:
    if text in ("", "1"):
        return EMPTY
    try:
        return parse_word(text, alphabet)
    except ParseError as exc:
        raise ParseError(str(exc), line=lineno) from None


def parse_group(text: str, caps: Caps | None = None) -> GroupContext:
    """Build a context from group-file text.

    Grammar (one directive per line, ``#`` starts a comment)::

        group free | free_product | rws
        rank N                      # free
        factors n1 n2 ...           # free_product; 0 = infinite cyclic
        generators x y ...          # optional names for free / free_product
        delta D                     # optional for free groups (default 1)
        letters a b A B ...         # rws: letter order = shortlex order
        inverses a:A b:B ...        # rws: x:x declares a self-inverse letter
        rule LHS -> RHS             # rws, repeatable; RHS may be empty or 1
        name TEXT                   # optional label
    """
    fields: dict[str, tuple[int, list[str]]] = {}
    rules: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "rule":
            lhs, arrow, rhs = rest.partition("->")
            if not arrow:
                raise ParseError("rule must have the form 'rule LHS -> RHS'", line=lineno)
            rules.append((lineno, lhs.strip(), rhs.strip()))
            continue
        if key not in {"group", "rank", "factors", "generators", "delta", "letters", "inverses", "name"}:
            raise ParseError(f"unknown directive {key!r}", line=lineno)
        if key in fields:
            raise ParseError(f"duplicate directive {key!r}", line=lineno)
        fields[key] = (lineno, rest.split())

    def get_int(key: str, default=None) -> int:
        if key not in fields:
            if default is None:
                raise ConfigError(f"missing directive {key!r}")
            return default
        lineno, vals = fields[key]
        if len(vals) != 1:
            raise ParseError(f"{key} takes exactly one integer", line=lineno)
        try:
            return int(vals[0])
        except ValueError:
            raise ParseError(f"{key} must be an integer, got {vals[0]!r}", line=lineno) from None

    if "group" not in fields:
        raise ConfigError("missing 'group' directive")
    lineno, kind_vals = fields["group"]
    kind = kind_vals[0] if kind_vals else ""
    name = " ".join(fields["name"][1]) if "name" in fields else None
    names = fields["generators"][1] if "generators" in fields else None

    if kind in ("free", "free_product"):
        if rules or "letters" in fields or "inverses" in fields:
            raise ConfigError(f"rules/letters/inverses are only valid for 'group rws'")
        if kind == "free":
            orders = [0] * get_int("rank")
            delta = get_int("delta", 1)
        else:
            if "factors" not in fields:
                raise ConfigError("missing directive 'factors'")
            flineno, vals = fields["factors"]
            try:
                orders = [int(v) for v in vals]
            except ValueError:
                raise ParseError("factors must be integers", line=flineno) from None
            delta = get_int("delta")
        try:
            backend = FreeProductBackend(orders, names)
        except ConfigError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
        return GroupContext(backend, delta, caps, name)

    if kind == "rws":
        if "letters" not in fields or "inverses" not in fields:
            raise ConfigError("'group rws' needs 'letters' and 'inverses'")
        llineno, letters = fields["letters"]
        ilineno, pairs = fields["inverses"]
        index = {s: i for i, s in enumerate(letters)}
        if len(index) != len(letters):
            raise ParseError("duplicate letter", line=llineno)
        inverse = [-1] * len(letters)
        for item in pairs:
            a, colon, b = item.partition(":")
            if not colon or a not in index or b not in index:
                raise ParseError(f"bad inverse pair {item!r}", line=ilineno)
            inverse[index[a]] = index[b]
            inverse[index[b]] = index[a]
        if -1 in inverse:
            missing = letters[inverse.index(-1)]
            raise ParseError(f"no inverse declared for {missing!r}", line=ilineno)
        try:
            alphabet = Alphabet(tuple(letters), tuple(inverse))
        except ArgumentError as exc:
            raise ParseError(str(exc), line=llineno) from None
        table: dict[Word, Word] = {}
        for rl, lhs, rhs in rules:
            table[_parse_letters(lhs, alphabet, rl)] = _parse_letters(rhs, alphabet, rl)
        return GroupContext(RewritingSystemBackend(alphabet, table), get_int("delta"), caps, name)

    raise ParseError(f"unknown group kind {kind!r}", line=lineno)


def load_group(path: str | Path, caps: Caps | None = None) -> GroupContext:
    p = Path(path)
    ctx = parse_group(p.read_text(), caps)
    if ctx.name == ctx.backend.describe():
        ctx.name = p.stem
    return ctx
