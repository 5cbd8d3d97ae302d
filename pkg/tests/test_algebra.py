from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesing.algebra import (Polynomial, UPoly, adjoin_root, factor_over, parse_polynomial,
                               rationals, resultant_y, squarefree_factor)
from curvesing.errors import ExtensionDepthExceeded, PolynomialSyntaxError

P = parse_polynomial
x, y = sympy.symbols("x y")


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j
               for (i, j), c in p.terms.items())


def U(*coeffs):
    return UPoly([Fraction(c) for c in coeffs])


def test_parse_and_print():
    f = P("x^2*y - 3/2*x + y^3")
    assert f.terms == {(2, 1): 1, (1, 0): Fraction(-3, 2), (0, 3): 1}
    assert P(f.to_string()) == f
    assert P("(x+y)^2") == P("x^2+2*x*y+y^2")
    assert P("2*(x - y)*3") == P("6*x-6*y")


@pytest.mark.parametrize("text", ["y^2-", "x**", "(x+y", "x^y", "z+1", "", "2(x-y)"])
def test_parse_errors_carry_position(text):
    with pytest.raises(PolynomialSyntaxError) as info:
        P(text)
    assert info.value.position >= 0


def test_squarefree_and_factor():
    assert squarefree_factor(U(1, 2, 1)) == [(U(1, 1), 2)]
    facs = factor_over(rationals(), U(-1, 0, 0, 0, 1))
    assert sorted(f.degree for f, _ in facs) == [1, 1, 2]


def test_extension_arithmetic():
    tower, r = adjoin_root(rationals(), U(-2, 0, 1))
    assert r * r == 2
    assert (r + 1) * (r - 1) == 1
    assert (1 / (r + 1)) * (r + 1) == 1
    # x^2 - 2 splits over the extension
    assert sorted(f.degree for f, _ in factor_over(tower, U(-2, 0, 1))) == [1, 1]


def test_linear_minpoly_needs_no_extension():
    tower, r = adjoin_root(rationals(), U(-3, 1))
    assert tower.level == 0 and r == 3


def test_depth_limit():
    t1, _ = adjoin_root(rationals(1), U(-2, 0, 1))
    with pytest.raises(ExtensionDepthExceeded):
        adjoin_root(t1, U(-3, 0, 1))
    t1, _ = adjoin_root(rationals(2), U(-2, 0, 1))
    t2, s = adjoin_root(t1, U(-3, 0, 1))
    assert t2.level == 2 and s * s == 3


def test_resultant_example():
    r = resultant_y(P("y-x^2"), P("y^2-x^3"))
    assert r.order() == 3


coef = st.integers(-3, 3)
small = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coef, max_size=6)


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_ring_operations_match_sympy(a, b):
    f = Polynomial({k: Fraction(v) for k, v in a.items()})
    g = Polynomial({k: Fraction(v) for k, v in b.items()})
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f + g) - to_sympy(f) - to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f.diff_x()) - sympy.diff(to_sympy(f), x)) == 0


@settings(max_examples=40, deadline=None)
@given(small.filter(lambda d: any(j for (i, j), v in d.items() if v)),
       small.filter(lambda d: any(j for (i, j), v in d.items() if v)))
def test_resultant_matches_sympy(a, b):
    f = Polynomial({k: Fraction(v) for k, v in a.items()})
    g = Polynomial({k: Fraction(v) for k, v in b.items()})
    if f.degree_y() < 1 or g.degree_y() < 1:
        return
    ours = resultant_y(f, g)
    theirs = sympy.resultant(sympy.Poly(to_sympy(f), y), sympy.Poly(to_sympy(g), y))
    ours_expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** k
                    for k, c in enumerate(ours.coeffs))
    # sign conventions differ between implementations
    assert sympy.expand(ours_expr - theirs) == 0 or sympy.expand(ours_expr + theirs) == 0
