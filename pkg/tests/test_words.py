import random

import pytest
from hypothesis import given, settings, strategies as st

from whlab.words import (GroupRingElement, GroupWord, commutator, fox_derivative,
                         fox_fundamental_check, free_reduce, word_inv, word_mul)

x = GroupWord.gen(0)
y = GroupWord.gen(1)


def test_free_reduction_cancels():
    # x·x⁻¹·y -> y
    assert free_reduce(((0, 1), (0, -1), (1, 1))) == ((1, 1),)
    assert GroupWord(((0, 1), (0, -1))) == GroupWord.identity()


def test_inverse_antihomomorphism():
    assert word_inv(x * y) == y.inverse() * x.inverse()


def test_mul_cancellation():
    assert word_mul(x * y, y.inverse()) == x


def test_invalid_letters():
    with pytest.raises(ValueError):
        GroupWord(((0, 2),))
    with pytest.raises(ValueError):
        GroupWord(((-1, 1),))


words = st.lists(st.tuples(st.integers(0, 2), st.sampled_from((1, -1))), max_size=12)


@given(words, words)
@settings(max_examples=60, deadline=None)
def test_group_laws(u_letters, v_letters):
    u = GroupWord(u_letters)
    v = GroupWord(v_letters)
    assert word_mul(u, word_inv(u)) == GroupWord.identity()
    assert word_inv(word_mul(u, v)) == word_mul(word_inv(v), word_inv(u))


def test_fox_base_cases():
    assert fox_derivative(x * y, 0) == GroupRingElement({GroupWord.identity(): 1})
    assert fox_derivative(x.inverse(), 0) == GroupRingElement({x.inverse(): -1})
    assert fox_derivative(y, 0) == GroupRingElement()


def test_fox_commutator_by_hand():
    # ∂(xyx⁻¹y⁻¹)/∂x = 1 − xyx⁻¹, by the product rule applied stepwise
    d = fox_derivative(commutator(x, y), 0)
    expected = GroupRingElement({GroupWord.identity(): 1, x * y * x.inverse(): -1})
    assert d == expected


def test_fox_unknown_generator():
    with pytest.raises(ValueError):
        fox_derivative(x, -1)


def test_fundamental_identity_200_random_words():
    rng = random.Random(11)
    for _ in range(200):
        letters = [(rng.randrange(3), rng.choice((1, -1)))
                   for _ in range(rng.randrange(0, 13))]
        assert fox_fundamental_check(GroupWord(letters), 3)


@given(words, words)
@settings(max_examples=60, deadline=None)
def test_product_rule(u_letters, v_letters):
    u = GroupWord(u_letters)
    v = GroupWord(v_letters)
    for g in range(3):
        lhs = fox_derivative(word_mul(u, v), g)
        rhs = fox_derivative(u, g) + u * fox_derivative(v, g)
        assert lhs == rhs
