import math
import sys

import pytest
from hypothesis import given

from conftest import tournaments
from oracles import min_duo_oracle
from monopath.duo import (
    DIGIT_CAP,
    Duo,
    Embedding,
    ExactInteger,
    PatternTournament,
    SymbolicPower,
    SymbolicTower,
    check_embedding,
    decimal_digits,
    duo_construct,
    exp_tower,
    min_duo,
    set_key,
    theorem_bound,
    verify_duo,
)
from monopath.enumgen import random_instance, random_pattern
from monopath.errors import NotFoundWithinCap, VertexOutOfRange
from monopath.model import ColouredTournament
from monopath.ramsey import t1_pattern
from monopath.reach import forbidding_edges


def test_duo_rejects_overlap():
    with pytest.raises(ValueError):
        Duo({0, 1}, {1})


def test_set_key_order():
    order = sorted([(), (0,), (0, 1), (0, 2), (1,)], key=set_key)
    assert order == [(0, 1), (0, 2), (0,), (1,), ()]


def test_verify_examples(mono_c3, rainbow_c3):
    assert verify_duo(mono_c3, Duo({0}, ()))
    assert not verify_duo(rainbow_c3, Duo({0}, ()))
    assert verify_duo(ColouredTournament(0, 1, ()), Duo((), ()))
    assert not verify_duo(mono_c3, Duo((), ()))
    with pytest.raises(VertexOutOfRange):
        verify_duo(mono_c3, Duo({4}, ()))


def test_min_duo_examples(mono_c3, rainbow_c3):
    assert min_duo(ColouredTournament(0, 0, ())) == (0, Duo((), ()))
    assert min_duo(mono_c3) == (1, Duo({0}, ()))
    # every singleton fails; {0, 1} precedes {0} in the tie-break order
    size, d = min_duo(rainbow_c3)
    assert size == 2 and d == Duo({0, 1}, ())
    assert all(not verify_duo(rainbow_c3, Duo(K, S)) for K, S in [({v}, ()) for v in range(3)] + [((), {v}) for v in range(3)])
    assert verify_duo(rainbow_c3, Duo({0}, {2}))


def test_min_duo_cap(rainbow_c3):
    with pytest.raises(NotFoundWithinCap):
        min_duo(rainbow_c3, size_cap=1)
    assert min_duo(rainbow_c3, size_cap=2)[0] == 2


@given(tournaments(max_n=5, max_k=3))
def test_min_duo_matches_brute_force(T):
    size, d = min_duo(T)
    assert verify_duo(T, d)
    o_size, K, S = min_duo_oracle(T)
    assert (size, d) == (o_size, Duo(K, S))


def test_min_duo_deterministic():
    T = random_instance(14, 3, 5)
    assert min_duo(T) == min_duo(T)


# embed-or-duo ------------------------------------------------------------------------


def test_pattern_validation():
    with pytest.raises(ValueError):
        PatternTournament(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        PatternTournament(2, [(0, 1), (1, 0)])
    P = PatternTournament(2, [(1, 0)])
    assert P.has_arc(1, 0) and not P.has_arc(0, 1)


def test_construct_examples(mono_c3, rainbow_transitive):
    one = PatternTournament(1, ())
    assert duo_construct(mono_c3, one) == Embedding(one, (0,))
    back = PatternTournament(2, [(1, 0)])
    assert duo_construct(mono_c3, back) == Duo({0}, ())
    res = duo_construct(rainbow_transitive, back)
    assert res == Duo({0}, ()) and verify_duo(rainbow_transitive, res)
    empty = PatternTournament(0, ())
    assert duo_construct(mono_c3, empty) == Embedding(empty, ())


def test_construct_embeds_into_forbidding_arcs(rainbow_transitive):
    P = PatternTournament(3, [(0, 1), (0, 2), (1, 2)])
    res = duo_construct(rainbow_transitive, P)
    assert res == Embedding(P, (0, 1, 2)) and check_embedding(rainbow_transitive, res)


def test_construct_soundness_random():
    for seed in range(300):
        T = random_instance(5 + seed % 40, 1 + seed % 4, seed)
        P = random_pattern(1 + seed % 6, seed + 10_000)
        res = duo_construct(T, P)
        if isinstance(res, Duo):
            assert verify_duo(T, res) and res.size < P.m
        else:
            assert check_embedding(T, res)
            forb = forbidding_edges(T)
            assert all((res.images[i], res.images[j]) in forb for i, j in P.arcs())


def test_construct_t1_never_embeds_with_one_colour():
    P = t1_pattern()
    for seed in range(100):
        T = random_instance(1 + seed % 60, 1, seed)
        res = duo_construct(T, P)
        assert isinstance(res, Duo) and res.size <= 4 and verify_duo(T, res)


def test_construct_deterministic():
    T, P = random_instance(30, 2, 1), random_pattern(5, 2)
    assert duo_construct(T, P) == duo_construct(T, P)


# bounds -------------------------------------------------------------------------------


def test_bound_examples():
    assert theorem_bound(1, "finite") == ExactInteger(1)
    b = theorem_bound(2, "finite")
    assert isinstance(b, ExactInteger) and b.value == 2**125000
    assert b.digits == math.floor(125000 * math.log10(2)) + 1 == 37629
    assert theorem_bound(1, "general") == SymbolicTower(1, 10)
    assert [exp_tower(1, h) for h in range(5)] == [ExactInteger(v) for v in (1, 2, 4, 16, 65536)]
    assert exp_tower(1, 5).digits == 19729
    assert exp_tower(1, 6) == SymbolicTower(1, 6)


def test_bound_symbolic_when_too_large():
    assert theorem_bound(20, "finite") == SymbolicPower(20, 1_250_000)
    assert theorem_bound(3, "general") == SymbolicTower(3, 10)
    with pytest.raises(ValueError):
        theorem_bound(0)


def test_decimal_digits_matches_str():
    old = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        for x in [1, 9, 10, 99, 100, 10**50 - 1, 10**50, 3**1000, 2**125000]:
            assert decimal_digits(x) == len(str(x))
    finally:
        sys.set_int_max_str_digits(old)
    assert DIGIT_CAP == 10**6
