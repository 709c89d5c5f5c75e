import random

import pytest

from pmmonoid import presentation
from pmmonoid.pm_core import OrderedSetPartition, Permutation, PMElement, enumerate_rn
from pmmonoid.presentation import (RelationError, all_instances, bounded_congruence, check_relation, eval_word,
                                   instantiate_relation, normal_form, perm_to_word, sample_re5)
from pmmonoid.words import E, S, format_word, parse_word


def ev(text, n=3):
    return eval_word(parse_word(text, n).letters, n)


def test_eval_word_basics():
    assert ev("") == PMElement.unit(3)
    assert ev("e[]") == PMElement.unit(3)
    assert ev("s1 s1") == PMElement.unit(3)
    assert ev("e[1] s1") == PMElement(Permutation((2, 1, 3)), OrderedSetPartition.of({2}, {1, 3}))


def test_perm_to_word_spells_the_permutation():
    assert format_word(perm_to_word(Permutation((3, 1, 2)))) == "s2 s1"
    assert perm_to_word(Permutation.identity(4)) == ()
    for a in enumerate_rn(4)[::75]:
        assert presentation.perm_of(perm_to_word(a.perm), 4) == a.perm


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_normal_forms_evaluate_back(n):
    for a in enumerate_rn(n):
        assert eval_word(normal_form(a), n) == a


def test_normal_form_example():
    assert format_word(normal_form(ev("e[1] s1 s2 e[2]"))) == "s1 s2 e[2]"


def test_instance_counts():
    counts = {s: [len(list(all_instances(s, n))) for n in (1, 2, 3, 4)] for s in ("re1", "re2", "re3", "re4")}
    assert counts == {"re1": [0, 1, 2, 3], "re2": [0, 0, 0, 2], "re3": [0, 0, 1, 2], "re4": [0, 1, 4, 12]}


def test_all_small_instances_hold():
    for n in (2, 3, 4):
        for schema in ("re1", "re2", "re3", "re4"):
            assert all(check_relation(i, n) for i in all_instances(schema, n))
        assert all(check_relation(i, n) for i in presentation.re5_instances(n, 2))


def test_sampled_re5_hold():
    rng = random.Random(0)
    for _ in range(500):
        n = rng.randint(2, 5)
        inst = sample_re5(n, rng)
        assert check_relation(inst, n), inst


def test_re5_instance_for_worked_identity():
    inst = instantiate_relation("re5", {"k": (2,), "middle": (2, 1, 2), "l": (1,)}, 3)
    assert format_word(inst.lhs) == "e[2] s2 s1 s2 e[1]"
    assert format_word(inst.rhs) == "s2 s1 e[1] s1 s2 s2 s1 s2"
    assert check_relation(inst, 3)


def test_worked_identity_as_printed_is_false():
    """The printed conjugating word s1 s2 gives a different partition; s2 s1 is right."""
    lhs = ev("e[2] s2 s1 s2 e[1]")
    assert lhs == PMElement(Permutation((3, 2, 1)), OrderedSetPartition.of({1}, {2, 3}))
    assert ev("s1 s2 e[1] s2 s1 s2 s1 s2") == PMElement(Permutation((3, 2, 1)), OrderedSetPartition.of({2}, {1, 3}))
    assert ev("s2 s1 e[1] s1 s2 s2 s1 s2") == lhs


@pytest.mark.parametrize("schema, params, message", [
    ("re2", {"i": 1, "j": 2}, "|i-j| >= 2"),
    ("re3", {"i": 2}, "out of range"),
    ("re4", {"i": 1, "cuts": (1,)}, "not inside a block"),
    ("re5", {"k": (), "middle": (1,), "l": ()}, "inside a block"),
    ("re9", {}, "unknown schema"),
])
def test_side_conditions_enforced(schema, params, message):
    with pytest.raises(RelationError, match=message):
        instantiate_relation(schema, params, 3)


def test_bounded_congruence_small():
    rep = bounded_congruence(2, 3)
    assert (rep.words, rep.classes, rep.fibers, rep.split_fibers, rep.merged_classes) == (127, 6, 6, 0, 0)
    assert rep.ok


def test_relation_pairs_are_sound():
    for lhs, rhs in presentation.relation_pairs(3, 4):
        assert eval_word(lhs, 3) == eval_word(rhs, 3)


def test_alphabet_excludes_unit_idempotent():
    assert E() not in presentation.alphabet(3)
    assert S(1) in presentation.alphabet(3)
