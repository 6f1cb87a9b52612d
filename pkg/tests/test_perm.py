import random

import pytest

from cosetposets.perm import (
    Permutation,
    all_cycles_of_length,
    cycle_string,
    extend_degree,
    parse_permutation,
    parse_permutation_list,
)


def test_involution_squares_to_identity():
    t = Permutation.from_cycles([(1, 2)], 2)
    assert (t * t).is_identity()


def test_compose_applies_left_factor_first():
    # (1,2,3) then (1,2): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
    p = parse_permutation("(1,2,3)", 3)
    q = parse_permutation("(1,2)", 3)
    r = p * q
    assert [r(i) for i in (1, 2, 3)] == [1, 3, 2]
    assert r == parse_permutation("(2,3)", 3)


def test_random_inverse_law():
    rng = random.Random(9)
    for _ in range(20):
        images = list(range(9))
        rng.shuffle(images)
        p = Permutation(images)
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_sign_values():
    assert Permutation.identity(6).sign() == 1
    assert parse_permutation("(1,2)", 6).sign() == -1
    assert parse_permutation("(1,2)(3,4)(5,6)", 6).sign() == -1


def test_sign_is_multiplicative():
    rng = random.Random(17)
    for _ in range(30):
        a, b = list(range(7)), list(range(7))
        rng.shuffle(a)
        rng.shuffle(b)
        p, q = Permutation(a), Permutation(b)
        assert (p * q).sign() == p.sign() * q.sign()


def test_conjugation_exponent_notation():
    p = parse_permutation("(1,2)", 3)
    g = parse_permutation("(2,3)", 3)
    assert p ** g == parse_permutation("(1,3)", 3)


def test_integer_powers_and_order():
    c = parse_permutation("(1,2,3,4,5)", 5)
    assert c ** 5 == Permutation.identity(5)
    assert c ** -1 == c.inverse()
    assert c.order() == 5
    assert parse_permutation("(1,2)(3,4,5)", 5).order() == 6


def test_cycle_string_round_trip():
    for text in ["()", "(1,2)", "(1,2,3)(4,5)", "(2,6)(3,5)"]:
        p = parse_permutation(text, 6)
        assert parse_permutation(cycle_string(p), 6) == p
    assert cycle_string(Permutation.identity(4)) == "()"


def test_parse_is_whitespace_insensitive():
    assert parse_permutation(" ( 1 , 2 ) ( 3 , 4 ) ", 4) == parse_permutation("(1,2)(3,4)", 4)


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_permutation("(1,2", 4)
    with pytest.raises(ValueError):
        parse_permutation("(1,2))", 4)
    with pytest.raises(ValueError):
        parse_permutation("(1,5)", 4)


def test_parse_list_splits_on_top_level_commas():
    perms = parse_permutation_list("(1,2,3)(4,5), (1,2)")
    assert len(perms) == 2
    assert perms[0].degree == perms[1].degree == 5
    assert perms[1] == parse_permutation("(1,2)", 5)


def test_cycle_type_and_fixed_points():
    p = parse_permutation("(1,2,3,4)(5,6)", 7)
    assert p.cycle_type() == (4, 2)
    assert p.fixed_points() == (7,)


def test_extend_degree_fixes_new_points():
    p = parse_permutation("(1,2)", 2)
    q = extend_degree(p, 5)
    assert q.degree == 5
    assert q.fixed_points() == (3, 4, 5)


def test_all_cycles_of_length_counts():
    # 8! distinct 9-cycles on 9 points, anchored at the smallest point
    assert sum(1 for _ in all_cycles_of_length(range(1, 6), 5)) == 24
    assert sum(1 for _ in all_cycles_of_length(range(1, 5), 3)) == 8
