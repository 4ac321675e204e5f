import random
from fractions import Fraction

import pytest

from whlab.errors import CapMismatch, CharacteristicError
from whlab.fields import GF, QQ
from whlab.series import (TruncatedSeries, render_series, series_exp, series_inverse,
                          series_log, series_mul)


def X(field, n, cap, i=0):
    return TruncatedSeries.letter(field, n, cap, i)


def one(field, n, cap):
    return TruncatedSeries.one(field, n, cap)


def random_series(rng, field, n, cap, max_deg=None, terms=5):
    max_deg = cap if max_deg is None else max_deg
    coeffs = {}
    for _ in range(terms):
        d = rng.randrange(0, max_deg + 1)
        mono = tuple(rng.randrange(n) for _ in range(d))
        coeffs[mono] = field.of(rng.randrange(-3, 4))
    return TruncatedSeries(field, n, cap, coeffs)


def test_product_expansion_by_hand():
    # (1+X)(1+Y) at N=2 -> 1 + X + Y + XY
    a = one(QQ, 2, 2) + X(QQ, 2, 2, 0)
    b = one(QQ, 2, 2) + X(QQ, 2, 2, 1)
    assert series_mul(a, b).coeffs == {
        (): Fraction(1), (0,): Fraction(1), (1,): Fraction(1), (0, 1): Fraction(1)}


def test_unit_law_random():
    rng = random.Random(1)
    for _ in range(20):
        a = random_series(rng, QQ, 2, 4)
        assert series_mul(a, one(QQ, 2, 4)) == a
        assert series_mul(one(QQ, 2, 4), a) == a


def test_noncommutativity_witness():
    x = X(QQ, 2, 2, 0)
    y = X(QQ, 2, 2, 1)
    assert series_mul(x, y) != series_mul(y, x)


def test_exp_paper_example():
    e = series_exp(X(QQ, 1, 3))
    assert e.coeffs == {(): Fraction(1), (0,): Fraction(1),
                       (0, 0): Fraction(1, 2), (0, 0, 0): Fraction(1, 6)}


def test_log_exp_roundtrip():
    for cap in range(1, 7):
        x = X(QQ, 2, cap, 0) + X(QQ, 2, cap, 1).scale(Fraction(1, 3))
        assert series_log(series_exp(x)) == x


def test_inverse_geometric():
    a = one(QQ, 1, 2) + X(QQ, 1, 2)
    inv = series_inverse(a)
    assert inv.coeffs == {(): Fraction(1), (0,): Fraction(-1), (0, 0): Fraction(1)}
    assert series_mul(a, inv) == one(QQ, 1, 2)


def test_exp_times_exp_neg_is_one():
    rng = random.Random(2)
    for _ in range(10):
        a = random_series(rng, QQ, 2, 5, terms=4)
        a = a - TruncatedSeries(QQ, 2, 5, {(): a.constant_term()})  # kill constant
        assert series_mul(series_exp(a), series_exp(-a)) == one(QQ, 2, 5)


def test_ring_axioms_random_triples():
    rng = random.Random(3)
    for field in (QQ, GF(5)):
        for _ in range(100):
            a = random_series(rng, field, 2, 4, max_deg=2, terms=3)
            b = random_series(rng, field, 2, 4, max_deg=2, terms=3)
            c = random_series(rng, field, 2, 4, max_deg=2, terms=3)
            assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
            assert series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c)
            assert series_mul(a + b, c) == series_mul(a, c) + series_mul(b, c)


def test_cap_and_alphabet_mismatch():
    with pytest.raises(CapMismatch):
        series_mul(one(QQ, 1, 2), one(QQ, 1, 3))
    with pytest.raises(CapMismatch):
        series_mul(one(QQ, 1, 2), one(QQ, 2, 2))


def test_exp_rejected_in_char_p_at_large_cap():
    with pytest.raises(CharacteristicError):
        series_exp(X(GF(2), 1, 2))
    with pytest.raises(CharacteristicError):
        series_log(one(GF(3), 1, 3) + X(GF(3), 1, 3))
    # below the characteristic both are fine
    e = series_exp(X(GF(5), 1, 4))
    assert series_log(e) == X(GF(5), 1, 4)


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        series_exp(one(QQ, 1, 3))
    with pytest.raises(ValueError):
        series_inverse(X(QQ, 1, 3))


def test_canonical_rendering():
    s = TruncatedSeries(QQ, 1, 2, {(): 1, (0,): 1, (0, 0): Fraction(1, 2)})
    assert render_series(s) == "1 + X0 + 1/2*X0.X0"
    assert render_series(TruncatedSeries.zero(QQ, 1, 2)) == "0"
    t = TruncatedSeries(QQ, 2, 2, {(1,): -1, (0,): 2})
    assert render_series(t) == "2*X0 - X1"
