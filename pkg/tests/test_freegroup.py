import random

import pytest
from hypothesis import given, strategies as st

from pmmonoid.freegroup import (IDENTITY, FreeWord, artin_action, descending_product, endo_compose, free_reduce,
                                identity_endo, kill, tau, tau_inverse)

letters = st.lists(st.tuples(st.integers(1, 4), st.sampled_from((1, -1))), max_size=30)


def test_parse_and_print_roundtrip():
    w = FreeWord.parse("x1 x2^-1 x3")
    assert str(w) == "x1 x2^-1 x3"
    assert FreeWord.parse(str(w)) == w
    assert FreeWord.parse("") == IDENTITY


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        FreeWord.parse("y1")
    with pytest.raises(ValueError):
        FreeWord.parse("x5", n=4)


def test_unreduced_word_rejected():
    with pytest.raises(ValueError):
        FreeWord(((1, 1), (1, -1)))


def test_free_reduce_cancels_nested_pairs():
    assert free_reduce([(1, 1), (2, 1), (2, -1), (1, -1)]) == IDENTITY
    assert free_reduce([(1, 1), (2, 1), (2, -1), (3, 1)]) == FreeWord(((1, 1), (3, 1)))
    with pytest.raises(ValueError):
        free_reduce([(1, 2)])


@given(letters, letters)
def test_reduction_is_a_homomorphism(a, b):
    assert free_reduce(a + b) == free_reduce(a) * free_reduce(b)


@given(letters)
def test_inverse_cancels(a):
    w = free_reduce(a)
    assert w * w.inverse() == IDENTITY
    assert w.inverse() * w == IDENTITY


def test_kill_drops_generators():
    w = FreeWord.parse("x1 x2 x1^-1 x3")
    assert str(kill(w, {1, 3})) == "x3"
    assert kill(w, {1, 2, 3}) == w


def test_tau_and_inverse():
    for n in (2, 3, 4):
        for k in range(1, n):
            assert endo_compose(tau(k, n), tau_inverse(k, n)) == identity_endo(n)
            assert endo_compose(tau_inverse(k, n), tau(k, n)) == identity_endo(n)
    assert str(tau(1, 2).image(1)) == "x1^-1 x2 x1"
    assert str(tau(1, 2).image(2)) == "x1"
    assert str(tau_inverse(1, 2).image(2)) == "x2 x1 x2^-1"


def test_tau_range_checked():
    with pytest.raises(ValueError):
        tau(3, 3)


@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from((1, -1))), max_size=8),
       st.lists(st.tuples(st.integers(1, 3), st.sampled_from((1, -1))), max_size=8))
def test_artin_action_is_multiplicative(a, b):
    assert artin_action(a + b, 4) == endo_compose(artin_action(a, 4), artin_action(b, 4))


def test_braid_relations_hold_in_artin_action():
    n = 4
    assert artin_action([(1, 1), (2, 1), (1, 1)], n) == artin_action([(2, 1), (1, 1), (2, 1)], n)
    assert artin_action([(1, 1), (3, 1)], n) == artin_action([(3, 1), (1, 1)], n)
    assert artin_action([(1, 1)], n) != artin_action([(2, 1)], n)


def test_descending_product_fixed():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(2, 5)
        w = [(rng.randrange(1, n), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
        assert artin_action(w, n)(descending_product(n)) == descending_product(n)
    assert str(descending_product(3)) == "x3 x2 x1"
