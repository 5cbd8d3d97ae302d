"""Newton polygons, face functions and the Kouchnirenko number.

Faces are listed from the ``y`` axis towards the ``x`` axis, so the slope
``b/a`` of the weight vectors increases along the list; this is the same
order the dual Newton diagram uses.

For a face with weight ``P = (a, b)`` and lattice length ``L`` the lattice
points are ``(i1 + b*k, j1 - a*k)`` for ``k = 0..L``.  The reduced face
polynomial is ``phi(T) = sum_k c_k T^(L-k)``; its roots are the values
``-gamma`` in the factorization ``f_P = c x^r y^s prod (y^a + gamma x^b)^nu``,
and also the ``v``-coordinates of the points where the strict transform
meets the divisor of ``P`` in the chart ``x = u^a v^c, y = u^b v^d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from .algebra import (FieldTower, Polynomial, UPoly, adjoin_root, factor_over,
                      squarefree_factor)
from .errors import NotApplicable

Point = Tuple[int, int]


@dataclass(frozen=True)
class Face:
    """A compact edge of the Newton boundary."""

    endpoints: Tuple[Point, Point]
    weight: Tuple[int, int]
    d_value: int
    length: int
    reduced: UPoly
    factors: Tuple[Tuple[UPoly, int], ...]
    prefactor: Tuple[int, int]

    @property
    def width(self) -> int:
        return self.endpoints[1][0] - self.endpoints[0][0]

    @property
    def height(self) -> int:
        return self.endpoints[0][1] - self.endpoints[1][1]

    @property
    def roots(self) -> List[Tuple[object, int]]:
        """``(gamma, nu)`` for the roots lying in the coefficient field.

        Roots that need an extension are only available through
        :attr:`factors` (irreducible factors of the reduced polynomial).
        """
        out = []
        for fac, nu in self.factors:
            if fac.degree == 1:
                out.append((fac.coeffs[0] / fac.coeffs[1], nu))
        return out

    @property
    def multiplicities(self) -> List[int]:
        """Root multiplicities, one entry per root counted over the closure."""
        out: List[int] = []
        for fac, nu in self.factors:
            out.extend([nu] * fac.degree)
        return sorted(out, reverse=True)

    def is_nondegenerate(self) -> bool:
        return all(nu == 1 for _, nu in self.factors)

    def points(self) -> List[Point]:
        (i1, j1), _ = self.endpoints
        a, b = self.weight
        return [(i1 + b * k, j1 - a * k) for k in range(self.length + 1)]

    def face_function(self, f: Polynomial) -> Polynomial:
        return Polynomial({p: f.coefficient(*p) for p in self.points()})


@dataclass(frozen=True)
class NewtonPolygon:
    support: Tuple[Point, ...]
    vertices: Tuple[Point, ...]
    faces: Tuple[Face, ...]
    convenient: bool

    @property
    def weights(self) -> List[Tuple[int, int]]:
        return [face.weight for face in self.faces]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def boundary_vertices(points) -> List[Point]:
    """Vertices of the compact Newton boundary, ordered by increasing ``i``."""
    lowest = {}
    for i, j in points:
        if i not in lowest or j < lowest[i]:
            lowest[i] = j
    pts = sorted(lowest.items())
    hull: List[Point] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    # stop at the first point of minimal height
    jmin = min(j for _, j in hull)
    out = []
    for p in hull:
        out.append(p)
        if p[1] == jmin:
            break
    return out


def make_face(f: Polynomial, p1: Point, p2: Point, tower: Optional[FieldTower] = None) -> Face:
    """Build the face of ``f`` between two boundary vertices."""
    (i1, j1), (i2, j2) = p1, p2
    di, dj = i2 - i1, j1 - j2
    L = gcd(di, dj)
    a, b = dj // L, di // L
    coeffs = [0] * (L + 1)
    for k in range(L + 1):
        coeffs[L - k] = f.coefficient(i1 + b * k, j1 - a * k)
    phi = UPoly(coeffs)
    if tower is None:
        tower = f.tower()
    factors = tuple(factor_over(tower, phi))
    return Face(endpoints=(p1, p2), weight=(a, b), d_value=a * i1 + b * j1, length=L,
                reduced=phi, factors=factors, prefactor=(i1, j2))


def newton_boundary(f: Polynomial, tower: Optional[FieldTower] = None) -> NewtonPolygon:
    """Compact faces of the Newton polygon of ``f`` at the origin."""
    if f.is_zero():
        raise ValueError("Newton boundary of the zero polynomial")
    support = tuple(sorted(f.terms))
    verts = boundary_vertices(support)
    faces = tuple(make_face(f, verts[k], verts[k + 1], tower) for k in range(len(verts) - 1))
    convenient = any(i == 0 for i, _ in support) and any(j == 0 for _, j in support)
    return NewtonPolygon(support=support, vertices=tuple(verts), faces=faces, convenient=convenient)


def d_of(P: Tuple[int, int], f: Polynomial) -> int:
    """Minimum of ``P . (i, j)`` over the support of ``f``."""
    a, b = P
    if a < 0 or b < 0 or gcd(a, b) != 1:
        raise ValueError(f"{P} is not a primitive non-negative vector")
    if f.is_zero():
        raise ValueError("d_of the zero polynomial")
    return min(a * i + b * j for i, j in f.terms)


def face_of(P: Tuple[int, int], f: Polynomial):
    """The face ``Delta(P; f)``, or the vertex when the minimum is attained once."""
    d = d_of(P, f)
    a, b = P
    mins = sorted(p for p in f.terms if a * p[0] + b * p[1] == d)
    if len(mins) == 1:
        return mins[0]
    if a == 0 or b == 0:
        # the minimum lies on a non-compact edge
        return tuple(mins)
    return make_face(f, mins[0], mins[-1])


def is_nondegenerate(f: Polynomial, face: Face) -> bool:
    """True when every root of the reduced face polynomial is simple."""
    return face.is_nondegenerate()


def is_weighted_homogeneous(g: Polynomial, P: Tuple[int, int]) -> bool:
    vals = {P[0] * i + P[1] * j for i, j in g.terms}
    return len(vals) <= 1


# ---------------------------------------------------------------------------
# tangent cone

def _tangent_split(f: Polynomial):
    m = f.order()
    if m < 1:
        raise ValueError("germ does not vanish at the origin")
    h = f.homogeneous_part(m)
    # h = sum_k h_k x^(m-k) y^k
    hk = [h.coefficient(m - k, k) for k in range(m + 1)]
    s = next(k for k in range(m + 1) if hk[k] != 0)
    top = max(k for k in range(m + 1) if hk[k] != 0)
    r = m - top
    rest = UPoly(hk[s:top + 1])  # in t = y/x
    return m, r, s, rest


def tangent_profile(f: Polynomial) -> Tuple[int, List[int]]:
    """Multiplicity and the multiset of tangent line multiplicities.

    No extension of the coefficient field is needed: lines are counted
    through the squarefree decomposition of the tangent cone.
    """
    m, r, s, rest = _tangent_split(f)
    mults = []
    if r:
        mults.append(r)
    if s:
        mults.append(s)
    if rest.degree > 0:
        for fac, nu in squarefree_factor(rest):
            mults.extend([nu] * fac.degree)
    return m, sorted(mults, reverse=True)


def multiplicity_tangent_cone(f: Polynomial, tower: Optional[FieldTower] = None):
    """Multiplicity at the origin and the linear factors of the tangent cone.

    Linear forms are returned as polynomials ``y - rho*x`` (plus ``x`` and
    ``y`` themselves).  Irrational slopes are obtained by adjoining roots,
    which raises :class:`~curvesing.errors.ExtensionDepthExceeded` when the
    configured tower is too shallow.
    """
    m, r, s, rest = _tangent_split(f)
    if tower is None:
        tower = f.tower()
    X, Y = Polynomial.x(), Polynomial.y()
    out = []
    if r:
        out.append((X, r))
    if s:
        out.append((Y, s))
    if rest.degree > 0:
        for fac, nu in factor_over(tower, rest):
            for rho in _split_roots(tower, fac):
                out.append((Y - X * rho, nu))
    return m, out


def _split_roots(tower: FieldTower, fac: UPoly) -> list:
    roots = []
    remaining = fac
    t = tower
    while remaining.degree > 0:
        t, rho = adjoin_root(t, remaining.monic())
        roots.append(rho)
        lin = UPoly([-rho, 1])
        remaining = UPoly([t.coerce(c) for c in remaining.coeffs]) // lin
    return roots


# ---------------------------------------------------------------------------
# Kouchnirenko

def newton_number_mu(f: Polynomial) -> int:
    """Milnor number of a convenient germ with non-degenerate boundary.

    ``mu = 2V - a - b + 1`` where ``V`` is the area under the boundary and
    ``a``, ``b`` are its intercepts with the axes.
    """
    if f.coefficient(0, 0) != 0:
        raise NotApplicable("germ does not pass through the origin")
    poly = newton_boundary(f)
    if not poly.convenient:
        raise NotApplicable("Newton polygon is not convenient")
    if not all(face.is_nondegenerate() for face in poly.faces):
        raise NotApplicable("germ is degenerate on its Newton boundary")
    verts = list(poly.vertices)
    b = verts[0][1]
    a = verts[-1][0]
    # shoelace over (0,0) -> (a,0) -> ... -> (0,b)
    ring = [(0, 0)] + verts[::-1]
    area2 = 0
    for k in range(len(ring)):
        x1, y1 = ring[k]
        x2, y2 = ring[(k + 1) % len(ring)]
        area2 += x1 * y2 - x2 * y1
    return abs(area2) - a - b + 1
