from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesing.algebra import parse_polynomial as P
from curvesing.classify import (Atom, Composition, Tower, classify, germ_has_type, is_equivalent,
                                model_germ, normalize, parse_type, type_to_string)
from curvesing.errors import PolynomialSyntaxError
from curvesing.resolve import milnor_number

T = parse_type


def test_parse_and_print():
    t = T("(B_{3,2}^2)^{B_{3,2}}oB_{2,5}")
    assert isinstance(t, Composition)
    assert type_to_string(t) == "(B_{3,2}^2)^{B_{3,2}}oB_{2,5}"
    assert T("A_{49}") == Atom(50, 2)
    assert T("B_{2,3}\\circ B_{4,4}") == T("B_{2,3}oB_{4,4}")
    assert T("(B_{2,2}^2)^{2B_{2,2}}") == Tower(Atom(2, 2), 2, ((2, Atom(2, 2)),))


@pytest.mark.parametrize("text", ["B_{2}", "B_{2,3", "(B_{2,2}^1)^{B_{2,2}}", "C_{2,3}", ""])
def test_parse_errors(text):
    with pytest.raises((PolynomialSyntaxError, ValueError)):
        T(text)


def test_normalize_orientation():
    assert normalize(Atom(2, 5)) == Atom(5, 2)
    assert type_to_string(normalize(T("B_{2,23}oB_{23,2}"))) == "B_{23,2}oB_{2,23}"


def test_exchange_rule():
    assert is_equivalent(T("(B_{2,1}^2)^{B_{3,2}}"), T("B_{7,2}"))
    assert normalize(T("(B_{1,1}^2)^{(B_{2,1}^2)^{B_{1,2}}}")) == Atom(7, 2)
    assert type_to_string(normalize(
        T("B_{24,2}oB_{2,1}o(B_{2,1}^2)^{B_{12,2}}"))) == "B_{16,2}oB_{2,1}o(B_{2,1}^2)^{B_{20,2}}"


@pytest.mark.parametrize("text,expected", [
    ("y^2-x^3", "B_{3,2}"),
    ("(x^3+y^2)^2+x^3*y^3", "(B_{3,2}^2)^{B_{3,2}}"),
    ("x*y", "B_{2,2}"),
    ("y^3-x^5", "B_{5,3}"),
    ("y*(y^2-x^5)", "B_{6,1}oB_{5,2}"),
])
def test_classify_examples(text, expected):
    assert is_equivalent(classify(P(text)), T(expected))


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("m", range(2, 9))
def test_brieskorn(n, m):
    t = classify(P(f"x^{n}+y^{m}"))
    assert t == Atom(max(n, m), min(n, m))
    assert milnor_number(P(f"x^{n}+y^{m}")) == (n - 1) * (m - 1)


def test_equivalence_distinguishes():
    assert not is_equivalent(T("B_{5,2}"), T("B_{7,2}"))
    assert not is_equivalent(T("B_{3,3}"), T("B_{3,2}"))
    assert T("B_{4,4}") == normalize(T("B_{2,2}oB_{2,2}"))


@pytest.mark.parametrize("text", [
    "B_{50,2}", "B_{43,2}oB_{2,3}", "(B_{5,3}^2)^{B_{10,2}}", "(B_{3,2}^2)^{B_{5,2}}o(B_{2,3}^2)^{B_{5,2}}",
    "B_{25,4}", "(B_{2,2}^4)^{2B_{2,4}}",
])
def test_model_germs(text):
    t = T(text)
    f = model_germ(t)
    assert germ_has_type(f, t)


atoms = st.builds(Atom, st.integers(1, 7), st.integers(1, 7))


@st.composite
def types(draw):
    pieces = draw(st.lists(atoms, min_size=1, max_size=3, unique_by=lambda a: a.slope))
    if draw(st.booleans()):
        n, m = draw(st.sampled_from([(2, 1), (3, 2), (2, 3), (1, 1)]))
        r = draw(st.integers(1, 2))
        base = Atom(n * r, m * r)
        if base.slope not in {p.slope for p in pieces}:
            e = 2
            kid = Atom(draw(st.integers(1, 9)), e)
            pieces.append(Tower(base, e, ((r, kid),)))
    pieces.sort(key=lambda p: p.slope, reverse=True)
    return pieces[0] if len(pieces) == 1 else Composition(tuple(pieces))


@settings(max_examples=80, deadline=None)
@given(types())
def test_normalize_idempotent_and_printable(t):
    n = normalize(t)
    assert normalize(n) == n
    assert T(type_to_string(n)) == n


@settings(max_examples=30, deadline=None)
@given(types())
def test_model_round_trip(t):
    f = model_germ(t)
    assert normalize(classify(f)) == normalize(t)
