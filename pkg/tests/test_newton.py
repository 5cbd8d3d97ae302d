import pytest

from curvesing.algebra import parse_polynomial as P
from curvesing.errors import NotApplicable
from curvesing.newton import (d_of, face_of, multiplicity_tangent_cone, newton_boundary,
                              newton_number_mu, tangent_profile)


def test_cusp_face():
    nb = newton_boundary(P("y^2-x^3"))
    assert nb.convenient
    (face,) = nb.faces
    assert face.weight == (2, 3) and face.d_value == 6
    assert face.endpoints == ((0, 2), (3, 0))
    assert face.is_nondegenerate()


def test_faces_ordered_from_y_axis():
    nb = newton_boundary(P("y^5+x*y^2+x^7"))
    assert [f.weight for f in nb.faces] == [(3, 1), (1, 3)]
    assert nb.vertices == ((0, 5), (1, 2), (7, 0))


def test_degenerate_face():
    (face,) = newton_boundary(P("(y^2-x^3)^2+x^7")).faces
    assert not face.is_nondegenerate()
    assert face.multiplicities == [2]


def test_d_and_face_of():
    f = P("y^3+x^2*y+x^5")
    assert d_of((1, 1), f) == 3
    assert face_of((3, 1), f) == (0, 3)
    assert face_of((1, 1), f).endpoints == ((0, 3), (2, 1))
    assert face_of((1, 3), f).weight == (1, 3)
    with pytest.raises(ValueError):
        d_of((2, 4), f)


def test_tangent_cone():
    assert tangent_profile(P("y^2*(y-x)^3+x^9")) == (5, [3, 2])
    m, lines = multiplicity_tangent_cone(P("y^2-2*x^2+x^5"))
    assert m == 2 and len(lines) == 2
    assert all(nu == 1 for _, nu in lines)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("m", range(2, 9))
def test_brieskorn_newton_number(n, m):
    assert newton_number_mu(P(f"x^{n}+y^{m}")) == (n - 1) * (m - 1)


def test_non_convenient_rejected():
    with pytest.raises(NotApplicable):
        newton_number_mu(P("x*y^2+x^5"))
