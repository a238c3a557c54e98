from itertools import permutations

import pytest

from injcolor import (
    FamilyConstructionError,
    SeparatingFamily,
    build_separating_family,
    family_size_bound,
    verify_separating_family,
)


def test_size_bound_values():
    assert family_size_bound(2, 2) == 8  # ceil(4e ln 2)
    assert family_size_bound(5, 2) == 18  # ceil(4e ln 5) = ceil(17.4996)
    assert family_size_bound(12, 3) == 61  # ceil(9e ln 12)


def test_build_examples():
    fam = build_separating_family(2, 2, 0)
    assert len(fam.sets) <= 8
    assert verify_separating_family(fam)

    fam5 = build_separating_family(5, 2, 0)
    assert len(fam5.sets) <= 18

    fam12 = build_separating_family(12, 3, 0)
    assert len(fam12.sets) <= 61
    assert verify_separating_family(fam12)


def test_verify_examples():
    yes = SeparatingFamily(2, 2, (frozenset({1}), frozenset({2})))
    assert verify_separating_family(yes)
    no = SeparatingFamily(2, 2, (frozenset({1, 2}),))
    assert not verify_separating_family(no)
    empty = SeparatingFamily(3, 2, ())
    assert not verify_separating_family(empty)


def test_shorter_tuples_also_separated():
    # the r-tuple check implies separation of all shorter tuples
    fam = build_separating_family(6, 3, 2)
    for length in (2, 3):
        for tup in permutations(range(1, 7), length):
            a1, rest = tup[0], set(tup[1:])
            assert any(a1 in p and not (rest & p) for p in fam.sets)


def test_deterministic_and_seed_sensitive():
    a = build_separating_family(9, 2, 123)
    b = build_separating_family(9, 2, 123)
    assert a == b
    c = build_separating_family(9, 2, 124)
    assert a != c  # overwhelmingly likely for distinct seeds


def test_universe_padding_when_r_exceeds_k():
    fam = build_separating_family(2, 4, 0)
    assert fam.k == 4  # padded up to r
    assert verify_separating_family(fam)
    assert len(fam.sets) <= family_size_bound(4, 4)


def test_rejects_tiny_r():
    with pytest.raises(ValueError):
        build_separating_family(5, 1, 0)


def test_duplicates_are_retained():
    fam = build_separating_family(2, 2, 1)
    assert len(fam.sets) == family_size_bound(2, 2)  # duplicates not collapsed
