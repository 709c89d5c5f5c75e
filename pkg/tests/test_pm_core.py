import random

import pytest

from pmmonoid import pm_core
from pmmonoid.pm_core import (OrderedSetPartition, Permutation, PMElement, StandardComposition, enumerate_rn,
                              ordered_bell, partition_product, rn_product, standardize_partition, stirling2)

P = OrderedSetPartition.of


def test_permutation_composition_right_factor_first():
    a = Permutation((2, 3, 1))
    b = Permutation((2, 1, 3))
    assert (a * b).images == (3, 2, 1)      # a(b(1)) = a(2) = 3
    assert (a * a.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_partition_validation():
    with pytest.raises(ValueError):
        OrderedSetPartition((frozenset({1}), frozenset({1, 2})))
    with pytest.raises(ValueError):
        OrderedSetPartition((frozenset({1}), frozenset({3})))
    with pytest.raises(ValueError):
        OrderedSetPartition((frozenset(), frozenset({1})))


def test_partition_product_second_factor_outer():
    assert partition_product(P({1}, {2, 3}), P({2, 3}, {1})) == P({2, 3}, {1})
    assert partition_product(P({1, 2}, {3}), P({1, 3}, {2})) == P({1}, {3}, {2})
    full = OrderedSetPartition.full(3)
    p = P({3}, {1, 2})
    assert partition_product(full, p) == p and partition_product(p, full) == p


def test_rn_products_by_hand():
    s1 = PMElement.s(3, 1)
    e1 = PMElement.e(StandardComposition(3, (1,)))
    assert s1 * e1 == PMElement(Permutation((2, 1, 3)), P({1}, {2, 3}))
    assert e1 * s1 == PMElement(Permutation((2, 1, 3)), P({2}, {1, 3}))
    assert e1 * e1 == e1


def test_star_is_an_involution_and_a_regular_inverse():
    for a in enumerate_rn(3):
        assert a.star().star() == a
        assert a * a.star() * a == a
        assert a.star() * a * a.star() == a.star()


def test_idempotents_do_not_commute():
    """Inverses are not unique: both e and f are inverses of e, and star reverses no products."""
    ident = Permutation.identity(2)
    e, f = PMElement(ident, P({1}, {2})), PMElement(ident, P({2}, {1}))
    assert e * f == f and f * e == e
    assert e * f * e == e and f * e * f == f
    assert (e * f).star() != f.star() * e.star()


def test_associativity_and_unit():
    els = enumerate_rn(3)
    rng = random.Random(1)
    u = PMElement.unit(3)
    for _ in range(500):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * u == a == u * a


def test_counts():
    assert [ordered_bell(n) for n in range(1, 6)] == [1, 3, 13, 75, 541]
    assert stirling2(4, 2) == 7
    assert [pm_core.rn_count_stirling(n) for n in range(1, 6)] == [1, 6, 78, 1800, 64920]
    assert [pm_core.rn_count_multinomial(n) for n in range(1, 6)] == [1, 6, 78, 1800, 64920]


def test_enumeration_order_and_guard():
    els = enumerate_rn(2)
    assert [a.to_json() for a in els][:3] == [
        {"n": 2, "perm": [1, 2], "partition": [[1, 2]]},
        {"n": 2, "perm": [1, 2], "partition": [[1], [2]]},
        {"n": 2, "perm": [1, 2], "partition": [[2], [1]]},
    ]
    assert len(set(enumerate_rn(3))) == 78
    with pytest.raises(ValueError):
        enumerate_rn(7)


def test_json_roundtrip():
    for a in enumerate_rn(3):
        assert PMElement.from_json(a.to_json()) == a
    with pytest.raises(ValueError):
        PMElement.from_json({"n": 4, "perm": [1, 2, 3], "partition": [[1, 2, 3]]})


def test_standard_compositions():
    comps = pm_core.standard_compositions(3)
    assert [c.cuts for c in comps] == [(), (1,), (2,), (1, 2)]
    assert StandardComposition(4, (1, 3)).partition() == P({1}, {2, 3}, {4})
    assert str(StandardComposition(4, (1, 3))) == "e[1,3]"
    with pytest.raises(ValueError):
        StandardComposition(3, (2, 1))


def test_standardization():
    w, q = standardize_partition(P({3}, {1, 2}))
    assert w.images == (2, 3, 1)
    assert q.cuts == (1,)
    assert P({3}, {1, 2}).image(w) == q.partition()


def test_matrix_tuple_roundtrip():
    for a in enumerate_rn(3):
        assert pm_core.from_matrix_tuple(pm_core.to_matrix_tuple(a)) == a


def test_bicrossed_product_matches_rn_product():
    els = enumerate_rn(3)
    for a in els[::5]:
        for b in els[::7]:
            perm, part = pm_core.bicrossed_product((a.perm, a.partition), (b.perm, b.partition))
            assert PMElement(perm, part) == rn_product(a, b)


def test_matched_pair_exhaustive_and_sampled():
    rep = pm_core.matched_pair_check(3)
    assert rep.ok and sum(rep.checks.values()) == 3002
    assert pm_core.matched_pair_check(4, samples=500, seed=3).ok
