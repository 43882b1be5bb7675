import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hypconj import oracle
from hypconj.context import Caps, free_group, free_product, load_group, parse_group
from hypconj.errors import BudgetError, ConfigError, ParseError

from conftest import GROUPS


def test_reduce_examples(F2, Z23):
    assert F2.format(F2.reduce(F2.word("abB"))) == "a"
    assert F2.reduce(F2.word("aA")) == ()
    assert Z23.format(Z23.reduce(Z23.word("yy"))) == "Y"
    assert F2.geodesic_length(F2.word("abB")) == 1
    assert F2.geodesic_length(()) == 0
    assert Z23.geodesic_length(Z23.word("yy")) == 1


def test_alphabet_order(F2, Z23):
    assert F2.alphabet.symbols == ("a", "A", "b", "B")
    assert Z23.alphabet.symbols == ("x", "y", "Y")


def test_constants_free_group(F2):
    c = F2.constants
    assert (c.delta, c.L, c.V) == (1, 36, 17)
    assert c.V == len(oracle.ball(F2, 2)) == 1 + 4 + 12
    assert c.M == 20 * 17**3 * 36**2 == 127_344_960
    assert c.R == 9**6
    assert c.torsion_order_bound == len(oracle.ball(F2, 6))
    assert c.distinct_prefix_count == 17**4 + 1


def test_constants_modular_group(Z23):
    c = Z23.constants
    assert c.V == len(oracle.ball(Z23, 2)) == 8
    assert c.M == 20 * 8**3 * 36**2
    assert c.torsion_order_bound == len(oracle.ball(Z23, 6)) == 50


alphabet3 = st.lists(st.integers(0, 2), max_size=20).map(tuple)
alphabet4 = st.lists(st.integers(0, 3), max_size=20).map(tuple)


Z = free_product([2, 3], ["x", "y"])
Z_RWS = load_group(GROUPS / "z2z3_rws.grp")


@given(alphabet3)
def test_reduce_idempotent_and_multiply(w):
    r = Z.reduce(w)
    assert Z.reduce(r) == r
    half = len(w) // 2
    assert Z.multiply(Z.reduce(w[:half]), Z.reduce(w[half:])) == r


@given(alphabet4, st.integers(-5, 5))
def test_power_matches_concatenation(w, n):
    F = free_group(2)
    w = F.reduce(w)
    base = w if n >= 0 else F.invert(w)
    assert F.power(w, n) == F.reduce(base * abs(n))


@settings(max_examples=60)
@given(alphabet3)
def test_rewriting_backend_agrees(w):
    assert Z_RWS.reduce(w) == Z.reduce(w)
    half = len(w) // 2
    assert Z_RWS.multiply(Z_RWS.reduce(w[:half]), Z_RWS.reduce(w[half:])) == Z.reduce(w)


def test_free_rws_agrees(F2, F2_rws):
    assert F2_rws.alphabet.symbols == F2.alphabet.symbols
    for w in itertools.product(range(4), repeat=5):
        assert F2_rws.reduce(w) == F2.reduce(w)


def test_ball_matches_oracle(F2, Z23):
    for ctx in (F2, Z23):
        for r in range(4):
            assert ctx.ball(r) == oracle.ball(ctx, r)


def test_ball_budget():
    F = free_group(2, caps=Caps(ball_budget=100))
    with pytest.raises(BudgetError):
        F.ball(5)


def test_parse_group_errors():
    with pytest.raises(ParseError, match="line 2"):
        parse_group("group free\nbogus 3\n")
    with pytest.raises(ConfigError):
        parse_group("group free_product\nfactors 2 3\n")  # delta required
    with pytest.raises(ParseError, match="line 3"):
        parse_group("group rws\nletters a A\ninverses a:B\ndelta 1\n")
    with pytest.raises(ConfigError):
        parse_group("group rws\nletters a A\ninverses a:A\nrule a -> aa\ndelta 1\n")


def test_parse_group_variants():
    g = parse_group("group free\nrank 3\n")
    assert g.delta == 1 and len(g.alphabet) == 6
    z = parse_group("group free_product\nfactors 0 4\ngenerators s t\ndelta 2\n")
    assert z.delta == 2
    assert z.format(z.reduce(z.word("ttt"))) == "T"


def test_search_radius_profiles(F2):
    paper = F2.with_caps(Caps.paper())
    with pytest.raises(BudgetError):
        paper.search_radius(None, None)
    assert F2.search_radius(4, 100) == (4, False)
    assert F2.search_radius(10, 3) == (3, True)
