from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvesing.algebra import parse_polynomial as P
from curvesing.fan import (FACE, INSERTED, Subdivision, canonical_subdivision, cone_charts, det,
                           dual_newton_diagram, insert_between)


def test_cusp_fan():
    s = canonical_subdivision(dual_newton_diagram(P("y^2-x^3")))
    assert s.vertices == ((1, 0), (1, 1), (2, 3), (1, 2), (0, 1))
    assert s.markers[2] == FACE and s.markers[1] == s.markers[3] == INSERTED
    assert s.self_intersections() == [-3, -1, -2]
    assert s.is_regular()


def test_order_is_checked():
    with pytest.raises(ValueError):
        Subdivision(((0, 1), (1, 0)), ("axis", "axis"))


def test_charts_are_unimodular():
    s = canonical_subdivision(dual_newton_diagram(P("y^7+x^2*y^3+x^11")))
    for (a, c), (b, d) in cone_charts(s):
        assert a * d - b * c == 1


def hj(n, q):
    # n/q = c1 - 1/(c2 - ...)
    out = []
    while q:
        c = -(-n // q)
        out.append(c)
        n, q = q, c * q - n
    return out


@given(st.integers(2, 80).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_insertion_follows_continued_fraction(nq):
    n, q = nq
    if gcd(n, q) != 1:
        return
    u, w = (1, 0), (q, n)
    inserted = insert_between(u, w)
    s = Subdivision((u, *inserted, w), ("axis",) + (INSERTED,) * len(inserted) + (FACE,))
    assert s.is_regular()
    assert [-c for c in s.self_intersections()] == hj(n, n - q)
