import random

import pytest
from hypothesis import given, strategies as st

from hypconj.errors import ArgumentError, ParseError
from hypconj.list_solver import (
    InfiniteWitness,
    Shortened,
    Status,
    bounded_centraliser_generators,
    centraliser_infinite_case,
    centraliser_lists,
    crt_combine,
    ensure_distinct,
    find_centraliser_exp,
    parse_word_list,
    prefix_products,
    shorten_words,
    solve_infinite_case,
    solve_lists,
    test_conjugacy_exp,
)
from hypconj.oracle import brute_centraliser, brute_conjugator, in_free_cyclic_subgroup, random_normal_form

from conftest import W


def fmt(ctx, ws):
    return sorted(ctx.format(w) for w in ws)


def test_crt_examples():
    assert crt_combine([(1, 2), (2, 3)]) == (5, 6)
    assert crt_combine([(0, 2), (1, 2)]) is None
    assert crt_combine([(1, 3)]) == (1, 3)
    assert crt_combine([]) == (0, 1)
    with pytest.raises(ArgumentError):
        crt_combine([(0, 0)])


@given(st.lists(st.tuples(st.integers(0, 16), st.integers(1, 17)), min_size=1, max_size=4))
def test_crt_matches_scan(system):
    system = [(r % t, t) for r, t in system]
    from math import lcm

    T = lcm(*(t for _, t in system))
    hits = [j for j in range(T) if all(j % t == r for r, t in system)]
    res = crt_combine(system)
    if hits:
        assert res == (hits[0], T) and len(hits) == 1
    else:
        assert res is None


def test_solve_infinite_case_examples(F2):
    out, fam = solve_infinite_case(F2, W(F2, "ab", "a"), W(F2, "ba", "a"))
    assert out.status is Status.CONJUGATE
    assert [F2.conjugate(a, out.witness) for a in W(F2, "ab", "a")] == W(F2, "ba", "a")
    out, fam = solve_infinite_case(F2, W(F2, "ab", "a"), W(F2, "ba", "b"))
    assert out.status is Status.NOT_CONJUGATE and fam is None
    assert brute_conjugator(F2, W(F2, "ab", "a"), W(F2, "ba", "b"), 6) is None
    out, _ = solve_infinite_case(F2, W(F2, "ab"), W(F2, "ab"))
    assert out.status is Status.CONJUGATE
    assert F2.conjugate(F2.word("ab"), out.witness) == F2.word("ab")


def test_centraliser_infinite_examples(F2):
    res = centraliser_infinite_case(F2, W(F2, "ab"))
    assert res.complete
    ab = F2.word("ab")
    assert in_free_cyclic_subgroup(F2, ab, res.generators)
    for g in res.generators:
        assert in_free_cyclic_subgroup(F2, g, [ab])
    res = centraliser_infinite_case(F2, W(F2, "ab", "ba"))
    for g in brute_centraliser(F2, W(F2, "ab", "ba"), 6):
        assert g == () or in_free_cyclic_subgroup(F2, g, res.generators)
    with pytest.raises(ArgumentError):
        centraliser_infinite_case(F2, [()])


def test_prefix_products(F2):
    a, b, c = F2.word("a"), F2.word("b"), F2.word("A")
    assert prefix_products([a, b], 2) == [a + b, b]
    assert prefix_products([a], 1) == [a]
    assert prefix_products([a, b, c], 2) == [a + b, b]
    with pytest.raises(ArgumentError):
        prefix_products([a], 2)


def test_ensure_distinct_examples(F2):
    assert ensure_distinct(F2, W(F2, "a", "A", "b"), W(F2, "b", "B", "b"), 3) == (W(F2, "a", "b"), W(F2, "b", "b"))
    assert ensure_distinct(F2, W(F2, "a", "A"), W(F2, "a", "b"), 2) is None
    assert ensure_distinct(F2, W(F2, "a"), W(F2, "b"), 1) == (W(F2, "a"), W(F2, "b"))
    with pytest.raises(ArgumentError):
        ensure_distinct(F2, W(F2, "a"), [], 1)


def test_shorten_examples(F2, Z23):
    assert shorten_words(F2, [F2.power(F2.word("ab"), 40)]) == InfiniteWitness(1, 1)
    L = Z23.constants.L
    for A in (W(Z23, "x"), W(Z23, "x", "yxY")):
        res = shorten_words(Z23, A)
        assert isinstance(res, Shortened)
        m = len(A)
        for i in range(m):
            prod = Z23.reduce(sum(A[i:], ()))
            assert 2 * len(Z23.conjugate(prod, res.c)) <= 3 ** (m - 1 - i) * (14 * L + 3)


def test_conjugacy_exp_examples(Z23):
    out = test_conjugacy_exp(Z23, W(Z23, "x"), W(Z23, "yxY"))
    assert out.status is Status.CONJUGATE and Z23.format(out.witness) == "Y"
    assert test_conjugacy_exp(Z23, W(Z23, "x"), W(Z23, "y")).status is Status.NOT_CONJUGATE
    out = test_conjugacy_exp(Z23, W(Z23, "x"), W(Z23, "x"))
    assert out.witness == ()


def test_conjugacy_exp_unverified(Z23):
    # same orders, not conjugate: only the theoretical radius could refute it
    out = test_conjugacy_exp(Z23, W(Z23, "y"), W(Z23, "Y"), radius_cap=3)
    assert out.status is Status.UNVERIFIED


def test_centraliser_exp_examples(F2, Z23):
    res = find_centraliser_exp(Z23, W(Z23, "x"), 4)
    assert fmt(Z23, res.generators) == ["", "x"] and not res.complete
    assert fmt(Z23, bounded_centraliser_generators(Z23, W(Z23, "x"), 4).generators) == ["", "x"]
    res = bounded_centraliser_generators(F2, W(F2, "a"), 3)
    assert fmt(F2, res.generators) == sorted(["", "a", "A", "aa", "AA", "aaa", "AAA"])
    assert list(bounded_centraliser_generators(F2, [], 3).generators) == F2.ball(3)


def test_solve_lists_examples(F2, Z23):
    A, B = W(F2, "ab", "a"), W(F2, "ba", "a")
    out = solve_lists(F2, A, B)
    assert out.is_conjugate and [F2.conjugate(a, out.witness) for a in A] == B
    out = solve_lists(Z23, W(Z23, "x"), W(Z23, "yxY"))
    assert out.is_conjugate and Z23.conjugate(Z23.word("x"), out.witness) == Z23.reduce(Z23.word("yxY"))
    assert solve_lists(Z23, W(Z23, "x"), W(Z23, "y")).status is Status.NOT_CONJUGATE
    assert solve_lists(F2, [], []).witness == ()
    with pytest.raises(ArgumentError):
        solve_lists(F2, W(F2, "a"), [])


def test_solve_lists_trivial_entries(F2):
    out = solve_lists(F2, W(F2, "", "ab"), W(F2, "", "ba"))
    assert out.is_conjugate
    assert solve_lists(F2, W(F2, "", "ab"), W(F2, "a", "ba")).status is Status.NOT_CONJUGATE


def test_centraliser_lists_examples(F2, Z23):
    res = centraliser_lists(F2, W(F2, "ab"))
    assert res.complete and in_free_cyclic_subgroup(F2, F2.word("ab"), res.generators)
    res = centraliser_lists(Z23, W(Z23, "x"))
    assert fmt(Z23, res.generators) == ["", "x"]
    res = centraliser_lists(F2, W(F2, "a", "b"))
    assert set(res.generators) <= {()}
    assert brute_centraliser(F2, W(F2, "a", "b"), 6) == [()]


@pytest.mark.parametrize("group", ["F2", "Z23"])
def test_roundtrip(group, request):
    ctx = request.getfixturevalue(group)
    rng = random.Random(5)
    for _ in range(25):
        A = [random_normal_form(ctx, rng.randint(0, 10), rng) for _ in range(rng.randint(1, 5))]
        g = random_normal_form(ctx, rng.randint(0, 5), rng)
        B = [ctx.conjugate(a, g) for a in A]
        out = solve_lists(ctx, A, B)
        assert out.is_conjugate
        assert [ctx.conjugate(a, out.witness) for a in A] == B


def test_word_list_parsing(F2):
    assert parse_word_list("# header\na\n1\n\nbA  # trailing\n", F2) == [(0,), (), (2, 1)]
    with pytest.raises(ParseError, match="line 2, position 2"):
        parse_word_list("a\naz\n", F2)
