"""Dual Newton diagrams and their canonical regular subdivisions.

Vectors are ordered by increasing slope ``b/a`` from ``E1 = (1, 0)`` to
``E2 = (0, 1)`` and every determinant is taken as ``det(P_i, P_{i+1})``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from .algebra import Polynomial
from .newton import newton_boundary

Vector = Tuple[int, int]
E1: Vector = (1, 0)
E2: Vector = (0, 1)

FACE, INSERTED, AXIS = "face", "inserted", "axis"


def det(p: Vector, q: Vector) -> int:
    return p[0] * q[1] - p[1] * q[0]


@dataclass(frozen=True)
class Subdivision:
    """Ordered primitive vectors of a fan in the positive quadrant."""

    vertices: Tuple[Vector, ...]
    markers: Tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.markers):
            raise ValueError("one marker per vertex is required")
        for v in self.vertices:
            if v[0] < 0 or v[1] < 0 or gcd(*v) != 1:
                raise ValueError(f"{v} is not a primitive non-negative vector")
        for p, q in zip(self.vertices, self.vertices[1:]):
            if det(p, q) <= 0:
                raise ValueError(f"vectors {p}, {q} are not in increasing slope order")

    def is_regular(self) -> bool:
        return all(det(p, q) == 1 for p, q in zip(self.vertices, self.vertices[1:]))

    def interior(self) -> List[Vector]:
        return list(self.vertices[1:-1])

    def self_intersections(self) -> List[int]:
        """``-c_i`` with ``P_{i-1} + P_{i+1} = c_i P_i`` for interior vertices."""
        out = []
        vs = self.vertices
        for k in range(1, len(vs) - 1):
            sx, sy = vs[k - 1][0] + vs[k + 1][0], vs[k - 1][1] + vs[k + 1][1]
            px, py = vs[k]
            c = sx // px if px else sy // py
            if (c * px, c * py) != (sx, sy):
                raise ValueError("subdivision is not regular")
            out.append(-c)
        return out


def dual_newton_diagram(f: Polynomial) -> Subdivision:
    """``E1``, the face weight vectors in slope order, then ``E2``."""
    weights = newton_boundary(f).weights
    verts = (E1,) + tuple(weights) + (E2,)
    markers = (AXIS,) + (FACE,) * len(weights) + (AXIS,)
    return Subdivision(verts, markers)


def _bezout_partner(u: Vector) -> Vector:
    """Some integer vector ``p`` with ``det(u, p) == 1``."""
    a, b = u
    # extended Euclid: s*a + t*b == 1, then p = (-t, s)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r != 1:
        raise ValueError(f"{u} is not primitive")
    return (-old_t, old_s)


def insert_between(u: Vector, w: Vector) -> List[Vector]:
    """Vectors on the lattice hull boundary strictly inside ``Cone(u, w)``.

    Each step takes the first lattice point of the line ``det(u, .) = 1``
    inside the cone; this walks the Hirzebruch-Jung continued fraction.
    """
    out: List[Vector] = []
    n = det(u, w)
    if n <= 0:
        raise ValueError("cone is not positively oriented")
    while n > 1:
        p = _bezout_partner(u)
        num = -det(p, w)
        t = -((-num) // n)  # ceil(num / n)
        v = (p[0] + t * u[0], p[1] + t * u[1])
        out.append(v)
        u = v
        n = det(u, w)
    return out


def canonical_subdivision(s: Subdivision) -> Subdivision:
    """The unique minimal regular refinement of ``s``."""
    verts: List[Vector] = [s.vertices[0]]
    marks: List[str] = [s.markers[0]]
    for k in range(1, len(s.vertices)):
        for v in insert_between(s.vertices[k - 1], s.vertices[k]):
            verts.append(v)
            marks.append(INSERTED)
        verts.append(s.vertices[k])
        marks.append(s.markers[k])
    return Subdivision(tuple(verts), tuple(marks))


def cone_charts(s: Subdivision) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Unimodular matrices whose columns are consecutive vertices."""
    if not s.is_regular():
        raise ValueError("subdivision is not regular")
    vs = s.vertices
    return [((p[0], q[0]), (p[1], q[1])) for p, q in zip(vs, vs[1:])]
