import glob
import os

import pytest
from hypothesis import given, settings, strategies as st

from whlab.errors import ParseError
from whlab.fields import GF, QQ
from whlab.presentations import (Presentation, parse_presentation, parse_word,
                                 render_presentation)
from whlab.words import GroupWord

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")


def test_commutator_sugar():
    p = parse_presentation("gens: x y\nrels: r1 = [x,y]")
    (_, w), = p.relators
    xg, yg = GroupWord.gen(0), GroupWord.gen(1)
    assert w == xg * yg * xg.inverse() * yg.inverse()


def test_trivial_group_presentation():
    p = parse_presentation("gens: x\nrels: r1 = x")
    assert p.generators == ("x",)
    assert p.relators[0][1] == GroupWord.gen(0)
    assert p.field == QQ and p.trunc == 4


def test_undeclared_generator_reports_position():
    with pytest.raises(ParseError) as ei:
        parse_presentation("gens: x\nrels: r1 = z")
    assert "undeclared generator z" in str(ei.value)
    assert ei.value.line == 2


def test_duplicate_labels_and_gens():
    with pytest.raises(ParseError):
        parse_presentation("gens: x\nrels: r = x ; r = x")
    with pytest.raises(ParseError):
        parse_presentation("gens: x x")


def test_field_and_trunc_lines():
    p = parse_presentation("gens: x\nfield: F5\ntrunc: 7")
    assert p.field == GF(5)
    assert p.trunc == 7
    with pytest.raises(ParseError):
        parse_presentation("gens: x\nfield: R")


def test_exponents_and_stars():
    p1 = parse_presentation("gens: x y\nrels: r = x^2*y^-1")
    p2 = parse_presentation("gens: x y\nrels: r = x x y^-1")
    assert p1.relators[0][1] == p2.relators[0][1]


def test_syntax_error_position():
    with pytest.raises(ParseError) as ei:
        parse_presentation("gens: x\nrels: r = [x")
    assert ei.value.line == 2


def test_corpus_round_trip():
    paths = sorted(glob.glob(os.path.join(CORPUS, "*.pres")))
    assert len(paths) >= 5
    for path in paths:
        with open(path) as fh:
            p = parse_presentation(fh.read())
        assert parse_presentation(render_presentation(p)) == p


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 3))
    gens = tuple(f"g{i}" for i in range(n))
    relators = []
    for k in range(draw(st.integers(0, 3))):
        letters = draw(st.lists(
            st.tuples(st.integers(0, n - 1), st.sampled_from((1, -1))), max_size=6))
        relators.append((f"r{k}", GroupWord(letters)))
    field = draw(st.sampled_from([QQ, GF(2), GF(3)]))
    trunc = draw(st.integers(1, 6))
    return Presentation(gens, tuple(relators), field, trunc)


@given(presentations())
@settings(max_examples=50, deadline=None)
def test_random_round_trip(p):
    assert parse_presentation(render_presentation(p)) == p
