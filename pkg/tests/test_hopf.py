"""Tensor Hopf algebra: shuffle/deconcatenation, duality, Magnus embedding."""

import itertools
import random
from fractions import Fraction

import pytest

from whlab.errors import CapMismatch
from whlab.fields import GF, QQ
from whlab.hopf import (TensorElement, antipode, antipode_convolution, coproduct_square,
                        counit, deconcatenate, infiltration, magnus_embed, pairing,
                        pairing_tensor2, primitive_defect, series_coproduct, shuffle)
from whlab.series import TruncatedSeries, series_mul
from whlab.words import GroupWord


def W(field, n, mono):
    return TensorElement.word(field, n, mono)


def shuffle_by_enumeration(field, n, u, v):
    """Independent oracle: sum over position subsets where u lands."""
    total = {}
    k, l = len(u), len(v)
    for positions in itertools.combinations(range(k + l), k):
        merged = [None] * (k + l)
        ui = iter(u)
        for p in positions:
            merged[p] = next(ui)
        vi = iter(v)
        for i in range(k + l):
            if merged[i] is None:
                merged[i] = next(vi)
        m = tuple(merged)
        total[m] = total.get(m, 0) + 1
    return TensorElement(field, n, total)


def test_paper_shuffle_examples():
    # ab ∘ xy: six interleavings, all coefficient 1
    letters = "abxy"
    out = shuffle(W(QQ, 4, (0, 1)), W(QQ, 4, (2, 3)))
    assert out.render(letters) == "abxy + axby + axyb + xaby + xayb + xyab"
    # aaa ∘ aa = 10·aaaaa; over F2 it reduces to 0 and over F3 to 1
    assert shuffle(W(QQ, 1, (0,) * 3), W(QQ, 1, (0,) * 2)).coeffs == {(0,) * 5: Fraction(10)}
    assert shuffle(W(GF(2), 1, (0,) * 3), W(GF(2), 1, (0,) * 2)).coeffs == {}
    assert shuffle(W(GF(3), 1, (0,) * 3), W(GF(3), 1, (0,) * 2)).coeffs == {(0,) * 5: 1}


def test_shuffle_unit_and_commutativity():
    u = W(QQ, 2, (0, 1, 0))
    unit = TensorElement.unit(QQ, 2)
    assert shuffle(u, unit) == u
    assert shuffle(unit, u) == u
    rng = random.Random(5)
    for _ in range(30):
        a = tuple(rng.randrange(2) for _ in range(rng.randrange(0, 4)))
        b = tuple(rng.randrange(2) for _ in range(rng.randrange(0, 4)))
        assert shuffle(W(QQ, 2, a), W(QQ, 2, b)) == shuffle(W(QQ, 2, b), W(QQ, 2, a))


def test_shuffle_matches_direct_enumeration():
    rng = random.Random(6)
    for _ in range(40):
        total = rng.randrange(0, 8)
        k = rng.randrange(0, total + 1)
        u = tuple(rng.randrange(3) for _ in range(k))
        v = tuple(rng.randrange(3) for _ in range(total - k))
        assert shuffle(W(QQ, 3, u), W(QQ, 3, v)) == shuffle_by_enumeration(QQ, 3, u, v)


def test_alphabet_mismatch():
    with pytest.raises(CapMismatch):
        shuffle(W(QQ, 2, (0,)), W(QQ, 3, (0,)))


def test_deconcatenation_examples():
    d = deconcatenate(W(QQ, 2, (0, 1)))
    assert d == {((), (0, 1)): Fraction(1), ((0,), (1,)): Fraction(1), ((0, 1), ()): Fraction(1)}
    assert deconcatenate(TensorElement.unit(QQ, 2)) == {((), ()): Fraction(1)}
    d1 = deconcatenate(W(QQ, 2, (0,)))
    assert d1 == {((), (0,)): Fraction(1), ((0,), ()): Fraction(1)}


def random_element(rng, field, n, max_deg, terms=4):
    coeffs = {}
    for _ in range(terms):
        d = rng.randrange(0, max_deg + 1)
        coeffs[tuple(rng.randrange(n) for _ in range(d))] = field.of(rng.randrange(-3, 4))
    return TensorElement(field, n, coeffs)


def test_hopf_axioms_on_random_elements():
    rng = random.Random(7)
    for field in (QQ, GF(2)):
        for _ in range(100):
            a = random_element(rng, field, 2, 5)
            left, right = coproduct_square(a)
            assert left == right  # coassociativity
            # counit laws
            d = deconcatenate(a)
            left_counit = {}
            right_counit = {}
            for (u, v), c in d.items():
                if not u:
                    left_counit[v] = field.add(left_counit.get(v, field.zero), c)
                if not v:
                    right_counit[u] = field.add(right_counit.get(u, field.zero), c)
            strip = lambda m: {k: x for k, x in m.items() if not field.is_zero(x)}
            assert strip(left_counit) == a.coeffs
            assert strip(right_counit) == a.coeffs
            # antipode convolution law
            conv = antipode_convolution(a)
            assert conv == TensorElement(field, 2, {(): counit(a)})


def test_primitives_are_exactly_degree_one():
    assert primitive_defect(W(QQ, 2, (0,))) == {}
    assert primitive_defect(W(QQ, 2, (1,))) == {}
    for mono in ((0, 0), (0, 1), (1, 0, 1)):
        assert primitive_defect(W(QQ, 2, mono)) != {}
    mixed = W(QQ, 2, (0,)) + W(QQ, 2, (1,)).scale(3)
    assert primitive_defect(mixed) == {}
    # a degree-1 + degree-2 mix is not primitive
    assert primitive_defect(mixed + W(QQ, 2, (0, 1))) != {}


def test_antipode_reverses_with_sign():
    a = antipode(W(QQ, 2, (0, 1, 1)))
    assert a.coeffs == {(1, 1, 0): Fraction(-1)}


# -- Magnus embedding ---------------------------------------------------------

x = GroupWord.gen(0)
y = GroupWord.gen(1)


def test_magnus_char0_exp_convention():
    s = magnus_embed(x, QQ, 2, 2)
    assert s.coeffs == {(): Fraction(1), (0,): Fraction(1), (0, 0): Fraction(1, 2)}


def test_magnus_charp_inverse_series():
    s = magnus_embed(x.inverse(), GF(2), 2, 2)
    assert s.coeffs == {(): 1, (0,): 1, (0, 0): 1}


def test_magnus_commutator_char0():
    s = magnus_embed(x * y * x.inverse() * y.inverse(), QQ, 2, 2)
    assert s.coeffs == {(): Fraction(1), (0, 1): Fraction(1), (1, 0): Fraction(-1)}


def test_magnus_identity():
    for field in (QQ, GF(3)):
        assert magnus_embed(GroupWord.identity(), field, 2, 3) == \
            TruncatedSeries.one(field, 2, 3)


def test_magnus_homomorphism_100_random_pairs():
    rng = random.Random(8)
    for field in (QQ, GF(2)):
        for _ in range(100):
            u = GroupWord([(rng.randrange(2), rng.choice((1, -1)))
                           for _ in range(rng.randrange(0, 9))])
            v = GroupWord([(rng.randrange(2), rng.choice((1, -1)))
                           for _ in range(rng.randrange(0, 9))])
            lhs = magnus_embed(u * v, field, 2, 4)
            rhs = series_mul(magnus_embed(u, field, 2, 4), magnus_embed(v, field, 2, 4))
            assert lhs == rhs


# -- duality pairing ----------------------------------------------------------


def test_pairing_dual_basis():
    f = TruncatedSeries.letter(QQ, 2, 3, 0)
    assert pairing(W(QQ, 2, (0,)), f) == 1
    g = TruncatedSeries(QQ, 2, 3, {(1, 0): 1})
    assert pairing(W(QQ, 2, (0, 1)), g) == 0


def test_pairing_coproduct_duality_instance():
    # ⟨Δ(e0 e1), X0 ⊗ X1⟩ = ⟨e0 e1, X0·X1⟩ = 1
    a = W(QQ, 2, (0, 1))
    d = deconcatenate(a)
    f_pairs = {((0,), (1,)): QQ.of(1)}
    assert pairing_tensor2(d, f_pairs, QQ) == 1
    prod = series_mul(TruncatedSeries.letter(QQ, 2, 2, 0), TruncatedSeries.letter(QQ, 2, 2, 1))
    assert pairing(a, prod) == 1


def test_pairing_word_dispatch():
    # pairing against a group word goes through the Magnus image
    val = pairing(W(QQ, 1, (0, 0)), x)
    assert val == Fraction(1, 2)  # coefficient of X² in exp(X)


def test_deconcat_dual_to_concatenation_random():
    rng = random.Random(9)
    for field in (QQ, GF(3)):
        for _ in range(60):
            a = random_element(rng, field, 2, 4, terms=3)
            u = random_element_series(rng, field, 2, 4)
            v = random_element_series(rng, field, 2, 4)
            lhs = pairing_tensor2(deconcatenate(a),
                                  {(mu, mv): field.mul(cu, cv)
                                   for mu, cu in u.coeffs.items()
                                   for mv, cv in v.coeffs.items()}, field)
            rhs = pairing(a, series_mul(u, v))
            assert lhs == rhs


def random_element_series(rng, field, n, cap, terms=3):
    coeffs = {}
    for _ in range(terms):
        d = rng.randrange(0, cap + 1)
        coeffs[tuple(rng.randrange(n) for _ in range(d))] = field.of(rng.randrange(-3, 4))
    return TruncatedSeries(field, n, cap, coeffs)


def test_shuffle_dual_to_unshuffle_coproduct_random():
    # the shuffle product pairs with the primitive-letters coproduct in
    # every characteristic
    rng = random.Random(10)
    for field in (QQ, GF(2)):
        for _ in range(60):
            a = random_element(rng, field, 2, 2, terms=2)
            b = random_element(rng, field, 2, 2, terms=2)
            fs = random_element_series(rng, field, 2, 4)
            lhs = pairing(shuffle(a, b), fs)
            pairs_ab = {(mu, mv): field.mul(cu, cv)
                        for mu, cu in a.coeffs.items() for mv, cv in b.coeffs.items()}
            rhs = pairing_tensor2(pairs_ab, series_coproduct(fs, "primitive"), field)
            assert lhs == rhs
    # in characteristic 0 the magnus convention coincides with primitive
    fs = random_element_series(random.Random(1), QQ, 2, 4)
    assert series_coproduct(fs) == series_coproduct(fs, "primitive")


def test_infiltration_dual_to_grouplike_coproduct_random():
    # the pointwise function product pairs with Δ(X) = X⊗1 + 1⊗X + X⊗X
    rng = random.Random(12)
    field = GF(2)
    for _ in range(60):
        a = random_element(rng, field, 2, 2, terms=2)
        b = random_element(rng, field, 2, 2, terms=2)
        fs = random_element_series(rng, field, 2, 4)
        lhs = pairing(infiltration(a, b), fs)
        pairs_ab = {(mu, mv): field.mul(cu, cv)
                    for mu, cu in a.coeffs.items() for mv, cv in b.coeffs.items()}
        rhs = pairing_tensor2(pairs_ab, series_coproduct(fs, "magnus"), field)
        assert lhs == rhs


def test_infiltration_is_pointwise_evaluation():
    # (e_u · e_v)(w) = e_u(w)·e_v(w) on Magnus images, exactly
    rng = random.Random(13)
    field = GF(2)
    for _ in range(40):
        u = tuple(rng.randrange(2) for _ in range(rng.randrange(0, 3)))
        v = tuple(rng.randrange(2) for _ in range(rng.randrange(0, 3)))
        w = GroupWord([(rng.randrange(2), rng.choice((1, -1)))
                       for _ in range(rng.randrange(0, 6))])
        img = magnus_embed(w, field, 2, 6)
        lhs = pairing(infiltration(W(field, 2, u), W(field, 2, v)), img)
        rhs = field.mul(pairing(W(field, 2, u), img), pairing(W(field, 2, v), img))
        assert lhs == rhs


def test_magnus_images_are_grouplike():
    # Δ_series(magnus(w)) = magnus(w) ⊗ magnus(w) in both characteristics
    rng = random.Random(14)
    for field in (QQ, GF(2)):
        for _ in range(25):
            w = GroupWord([(rng.randrange(2), rng.choice((1, -1)))
                           for _ in range(rng.randrange(0, 6))])
            img = magnus_embed(w, field, 2, 3)
            delta = series_coproduct(img, "magnus")
            expected = {(mu, mv): field.mul(cu, cv)
                        for mu, cu in img.coeffs.items()
                        for mv, cv in img.coeffs.items()}
            expected = {k: v for k, v in expected.items() if not field.is_zero(v)}
            assert delta == expected
