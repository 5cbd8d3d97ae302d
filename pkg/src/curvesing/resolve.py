"""Iterated toric modifications and the weighted dual graph.

One *stage* takes a germ ``h`` together with the multiplicity ``M`` of the
divisor ``{u = 0}`` it lives on (``M = 0`` at the start), applies the toric
modification of the canonical regular subdivision of its dual Newton
diagram, and looks at every root of every face function:

* a simple root is a smooth branch meeting the new divisor transversely;
* a root of multiplicity ``nu >= 2`` gives a new germ at that point, in
  translated coordinates ``(u, w)`` with ``u = 0`` the divisor.

Before a stage the admissible normalization loop replaces ``w`` by
``w + c*u^k`` while the first face is a single multiple root of a factor
linear in ``w``.  At the first stage the symmetric change of ``x`` is also
allowed, since no divisor is present yet.

Conjugate roots (an irreducible factor of degree ``> 1``) are handled once,
after adjoining one root, and the resulting subtree is replicated.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebra import (FieldElement, Polynomial, UPoly, adjoin_root, format_scalar,
                      rationals, resultant_y, shift_first, shift_second,
                      substitute_monomial)
from .errors import CommonComponent, MaxDepthExceeded, NonReducedInput
from .fan import E1, E2, FACE, INSERTED, Subdivision, canonical_subdivision
from .newton import NewtonPolygon, d_of, newton_boundary

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

DEFAULT_MAX_DEPTH = 16
_MAX_NORMALIZATION_STEPS = 400


@dataclass(frozen=True)
class EngineConfig:
    max_depth: int = DEFAULT_MAX_DEPTH
    tower_depth_limit: int = 2


# ---------------------------------------------------------------------------
# stage results

@dataclass
class SmoothBranch:
    face_index: int
    factor: UPoly
    count: int

    def label(self, k: int) -> str:
        return _root_label(self.factor, k)


@dataclass
class DegeneratePoint:
    face_index: int
    factor: UPoly
    multiplicity: int
    count: int
    root: object
    germ: Polynomial
    exceptional: int
    chart: Matrix
    stage: Optional["StageResult"] = None

    def label(self, k: int) -> str:
        return _root_label(self.factor, k)


Outcome = Union[SmoothBranch, DegeneratePoint]


@dataclass
class StageResult:
    """Everything one toric modification produces for one germ."""

    stage: int
    germ: Polynomial
    exceptional: int
    polygon: NewtonPolygon
    subdivision: Subdivision
    multiplicities: List[int]
    face_vertex: List[int]
    outcomes: List[Outcome]
    axis_branches: List[str]
    changes: List[Tuple[str, object, int]] = field(default_factory=list)

    @property
    def divisors(self) -> List[Tuple[Tuple[int, int], int]]:
        """(weight, multiplicity) for each new divisor, in fan order."""
        return list(zip(self.subdivision.interior(), self.multiplicities))

    @property
    def degenerate_points(self) -> List[DegeneratePoint]:
        return [o for o in self.outcomes if isinstance(o, DegeneratePoint)]


def _root_label(factor: UPoly, k: int) -> str:
    if factor.degree == 1:
        return "v=" + format_scalar(-factor.coeffs[0] / factor.coeffs[1])
    return f"v=root{k}({factor.to_string('v')})"


def _tower_for(h: Polynomial, cfg: EngineConfig):
    towers = h.towers()
    if towers:
        return max(towers, key=lambda t: t.level)
    return rationals(cfg.tower_depth_limit)


# ---------------------------------------------------------------------------
# admissible normalization

def _single_multiple_root(face, axis: int) -> Optional[object]:
    # the face must be a power of one binomial, with no factor of the axis variable
    if len(face.factors) != 1 or face.prefactor[axis] != 0:
        return None
    fac, nu = face.factors[0]
    if fac.degree != 1 or nu < 2:
        return None
    return -fac.coeffs[0] / fac.coeffs[1]


def normalize_germ(h: Polynomial, first_axis_free: bool = False):
    """Apply admissible triangular changes until the boundary is honest.

    Returns the new germ and the list of changes ``(axis, c, k)`` applied,
    where ``axis`` is ``"second"`` for ``w -> w + c*u^k`` and ``"first"`` for
    ``u -> u + c*w^k`` (only when ``first_axis_free``).
    """
    changes = []
    for _ in range(_MAX_NORMALIZATION_STEPS):
        faces = newton_boundary(h).faces
        if not faces:
            return h, changes
        first = faces[0]
        rho = _single_multiple_root(first, 1) if first.weight[0] == 1 else None
        if rho is not None:
            k = first.weight[1]
            h = shift_second(h, rho, k)
            changes.append(("second", rho, k))
            continue
        if first_axis_free:
            last = faces[-1]
            rho = _single_multiple_root(last, 0) if last.weight[1] == 1 else None
            if rho is not None:
                # face is a power of (y^a - rho*x), so x -> x + y^a/rho
                k = last.weight[0]
                c = 1 / rho if not isinstance(rho, FieldElement) else rho.inverse()
                h = shift_first(h, c, k)
                changes.append(("first", c, k))
                continue
        return h, changes
    raise MaxDepthExceeded("admissible normalization did not stabilize")


# ---------------------------------------------------------------------------
# one stage

def _axis_power(h: Polynomial, axis: int) -> int:
    return min(e[axis] for e in h.terms)


def make_convenient(h: Polynomial, stage: int = 0):
    """Remove coordinate-axis components by a change that keeps the type.

    ``w -> w + u^N`` (and at the first stage also ``u -> u + w^N``) with
    ``N`` one more than the relevant slope of the boundary, so the axis
    branch becomes a separate face that the old faces do not see.
    """
    changes = []
    if stage == 0 and _axis_power(h, 0) == 1:
        faces = newton_boundary(h).faces
        if faces:
            A, B = faces[0].weight
            N = A // B + 1
            h = shift_first(h, 1, N)
            changes.append(("first", Fraction(1), N))
    if _axis_power(h, 1) == 1:
        faces = newton_boundary(h).faces
        if faces:
            A, B = faces[-1].weight
            N = B // A + 1
            h = shift_second(h, 1, N)
            changes.append(("second", Fraction(1), N))
    return h, changes


def toric_stage(germ: Polynomial, exceptional_exponent: int = 0, stage: int = 0,
                cfg: EngineConfig = EngineConfig(), convenient: bool = False) -> StageResult:
    """Run one toric modification on ``germ``.

    ``exceptional_exponent`` is the multiplicity of the divisor ``u = 0``
    through the origin (zero for the initial germ).  With ``convenient``
    the axis components are first moved off the axes (used for naming).
    """
    if germ.coefficient(0, 0) != 0:
        raise ValueError("germ does not vanish at the origin")
    h, changes = normalize_germ(germ, first_axis_free=(stage == 0))
    if convenient and max(_axis_power(h, 0), _axis_power(h, 1)) == 1:
        h, more = make_convenient(h, stage)
        changes += more
    M = exceptional_exponent
    axis = []
    px, py = _axis_power(h, 0), _axis_power(h, 1)
    if px >= 2 or py >= 2:
        raise NonReducedInput("a coordinate axis is a multiple component")
    if px == 1:
        axis.append("first")
    if py == 1:
        axis.append("second")
    if stage > 0 and px:
        raise ValueError("divisor u = 0 must not be a component of the germ")
    polygon = newton_boundary(h, _tower_for(h, cfg))
    if polygon.faces:
        base = Subdivision((E1,) + tuple(polygon.weights) + (E2,),
                           ("axis",) + (FACE,) * len(polygon.faces) + ("axis",))
    else:
        # normal crossing at the origin: blow up the point once
        base = Subdivision((E1, (1, 1), E2), ("axis", INSERTED, "axis"))
    sub = canonical_subdivision(base)
    verts = sub.vertices
    mults = [q[0] * M + d_of(q, h) for q in sub.interior()]
    face_vertex = []
    k = 1
    for face in polygon.faces:
        while verts[k] != face.weight:
            k += 1
        face_vertex.append(k)
    outcomes: List[Outcome] = []
    for fi, face in enumerate(polygon.faces):
        vi = face_vertex[fi]
        P, Q = verts[vi], verts[vi + 1]
        chart = ((P[0], Q[0]), (P[1], Q[1]))
        g = None
        for fac, nu in face.factors:
            if nu == 1:
                outcomes.append(SmoothBranch(fi, fac, fac.degree))
                continue
            if g is None:
                _, _, g = substitute_monomial(h, chart)
            tower = _tower_for(h, cfg)
            if fac.degree == 1:
                root = -fac.coeffs[0] / fac.coeffs[1]
            else:
                _, root = adjoin_root(tower, fac)
            child = shift_second(g, root, 0)
            outcomes.append(DegeneratePoint(fi, fac, nu, fac.degree, root, child,
                                            mults[vi - 1], chart))
    return StageResult(stage=stage, germ=h, exceptional=M, polygon=polygon, subdivision=sub,
                       multiplicities=mults, face_vertex=face_vertex, outcomes=outcomes,
                       axis_branches=axis, changes=changes)


def _check_reduced(f: Polynomial) -> None:
    if any(isinstance(c, FieldElement) for c in f.terms.values()):
        return
    import sympy

    x, y = sympy.symbols("x y")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j
               for (i, j), c in f.terms.items())
    _, factors = sympy.sqf_list(expr, x, y)
    for fac, mult in factors:
        if mult >= 2 and fac.subs({x: 0, y: 0}) == 0:
            raise NonReducedInput(f"factor {fac} appears with multiplicity {mult}")


def run_stages(f: Polynomial, cfg: EngineConfig = EngineConfig()) -> StageResult:
    """Resolve ``f`` completely and return the tree of stage results."""
    if f.is_zero():
        raise ValueError("cannot resolve the zero polynomial")
    if f.coefficient(0, 0) != 0:
        raise ValueError("germ does not pass through the origin")
    _check_reduced(f)

    def go(h: Polynomial, M: int, stage: int) -> StageResult:
        if stage >= cfg.max_depth:
            raise MaxDepthExceeded(f"resolution needs more than {cfg.max_depth} stages")
        res = toric_stage(h, M, stage, cfg)
        for pt in res.degenerate_points:
            pt.stage = go(pt.germ, pt.exceptional, stage + 1)
        return res

    return go(f, 0, 0)


# ---------------------------------------------------------------------------
# graphs

@dataclass
class DivisorNode:
    id: int
    stage: int
    weight: Tuple[int, int]
    multiplicity: int
    self_intersection: int
    kind: str


@dataclass
class Arrow:
    node: int
    point: str
    label: str
    multiplicity: int = 1
    contact: int = 1


@dataclass
class ResolutionGraph:
    nodes: List[DivisorNode]
    edges: List[Tuple[int, int]]
    arrows: List[Arrow]

    @property
    def branch_count(self) -> int:
        return len(self.arrows)

    def node(self, nid: int) -> DivisorNode:
        for n in self.nodes:
            if n.id == nid:
                return n
        raise KeyError(nid)

    def neighbors(self, nid: int) -> List[int]:
        out = []
        for a, b in self.edges:
            if a == nid:
                out.append(b)
            elif b == nid:
                out.append(a)
        return out

    def arrow_count(self, nid: int) -> int:
        return sum(1 for a in self.arrows if a.node == nid)

    def degree(self, nid: int) -> int:
        return len(self.neighbors(nid)) + self.arrow_count(nid)

    def is_tree(self) -> bool:
        if not self.nodes:
            return True
        if len(self.edges) != len(self.nodes) - 1:
            return False
        seen = {self.nodes[0].id}
        stack = [self.nodes[0].id]
        while stack:
            n = stack.pop()
            for m in self.neighbors(n):
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        return len(seen) == len(self.nodes)

    def to_dict(self) -> dict:
        return {
            "nodes": [{"id": n.id, "stage": n.stage, "weight": list(n.weight),
                       "mult": n.multiplicity, "self_int": n.self_intersection}
                      for n in self.nodes],
            "edges": [[a, b] for a, b in self.edges],
            "arrows": [{"node": a.node, "point": a.point, "label": a.label} for a in self.arrows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        order = sorted(self.nodes, key=lambda n: (n.stage, n.weight, n.id))
        lines = ["graph resolution {", "  node [shape=circle];"]
        for n in order:
            lines.append(f'  n{n.id} [label="m={n.multiplicity}", xlabel="{n.self_intersection}"];')
        for a, b in sorted(tuple(sorted(e)) for e in self.edges):
            lines.append(f"  n{a} -- n{b};")
        for k, a in enumerate(sorted(self.arrows, key=lambda a: (a.node, a.point))):
            lines.append(f'  b{k} [shape=point, label=""];')
            lines.append(f'  n{a.node} -- b{k} [style=dashed, label="{a.label}"];')
        lines.append("}")
        return "\n".join(lines)


def graph_from_stages(root: StageResult) -> ResolutionGraph:
    nodes: List[DivisorNode] = []
    edges: List[Tuple[int, int]] = []
    arrows: List[Arrow] = []
    counter = [0]

    def new_node(stage, weight, mult, self_int, kind) -> int:
        nid = counter[0]
        counter[0] += 1
        nodes.append(DivisorNode(nid, stage, weight, mult, self_int, kind))
        return nid

    def build(res: StageResult, parent: Optional[int]) -> None:
        sub = res.subdivision
        selfs = sub.self_intersections()
        ids = []
        for k, (q, m) in enumerate(zip(sub.interior(), res.multiplicities)):
            kind = sub.markers[k + 1]
            ids.append(new_node(res.stage, q, m, selfs[k], kind))
        for a, b in zip(ids, ids[1:]):
            edges.append((a, b))
        if parent is not None:
            edges.append((parent, ids[0]))
            first = sub.vertices[1]
            by_id = {n.id: n for n in nodes}
            by_id[parent].self_intersection -= first[0]
        for ax in res.axis_branches:
            target = ids[0] if ax == "first" else ids[-1]
            name = "x=0" if res.stage == 0 else "u=0"
            if ax == "second":
                name = "y=0" if res.stage == 0 else "w=0"
            arrows.append(Arrow(target, name, name))
        for out in res.outcomes:
            nid = ids[res.face_vertex[out.face_index] - 1]
            if isinstance(out, SmoothBranch):
                for k in range(out.count):
                    lab = out.label(k)
                    arrows.append(Arrow(nid, lab, lab))
            else:
                for _ in range(out.count):
                    build(out.stage, nid)

    build(root, None)
    return ResolutionGraph(nodes, edges, arrows)


def _smooth_graph(f: Polynomial) -> ResolutionGraph:
    node = DivisorNode(0, 0, (1, 1), 1, -1, INSERTED)
    return ResolutionGraph([node], [], [Arrow(0, "smooth", "smooth")])


def resolve(f: Polynomial, cfg: EngineConfig = EngineConfig()) -> ResolutionGraph:
    """Weighted dual graph of a good resolution of the germ ``f`` at the origin.

    A smooth germ gives one blown-up point carrying one arrow.
    """
    if f.is_zero() or f.coefficient(0, 0) != 0:
        raise ValueError("germ must vanish at the origin and be non-zero")
    if f.order() == 1:
        return _smooth_graph(f)
    return graph_from_stages(run_stages(f, cfg))


def acampo_mu(g: ResolutionGraph) -> int:
    """Milnor number from the multiplicities of a good resolution graph."""
    if not g.nodes:
        raise ValueError("empty resolution graph")
    if not g.is_tree():
        raise ValueError("resolution graph is not a tree")
    total = 0
    for n in g.nodes:
        total += n.multiplicity * (2 - g.degree(n.id))
    return 1 - total


def milnor_number(f: Polynomial, cfg: EngineConfig = EngineConfig()) -> int:
    return acampo_mu(resolve(f, cfg))


# ---------------------------------------------------------------------------
# intersection multiplicity

def _sympy_gcd(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    if any(isinstance(c, FieldElement) for c in list(f.terms.values()) + list(g.terms.values())):
        return None
    import sympy

    x, y = sympy.symbols("x y")

    def to_expr(p):
        return sum(sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j
                   for (i, j), c in p.terms.items())

    h = sympy.Poly(sympy.gcd(to_expr(f), to_expr(g)), x, y)
    return Polynomial({m: Fraction(int(c.p), int(c.q)) for m, c in zip(h.monoms(), h.coeffs())})


def _sympy_resultant_order(f: Polynomial, g: Polynomial) -> Optional[int]:
    """Order at ``x = 0`` of ``Res_y(f, g)`` (-1 when it vanishes), or None
    when a coefficient lies in an extension."""
    if any(isinstance(c, FieldElement) for c in list(f.terms.values()) + list(g.terms.values())):
        return None
    import sympy

    x, y = sympy.symbols("x y")

    def to_poly(p):
        return sympy.Poly({(j, i): sympy.Rational(c.numerator, c.denominator)
                           for (i, j), c in p.terms.items()}, y, x, domain="QQ")

    r = sympy.Poly(sympy.resultant(to_poly(f), to_poly(g), y), x)
    if r.is_zero:
        return -1
    return min(m[0] for m in r.monoms())


def _divide_exact(f: Polynomial, h: Polynomial) -> Polynomial:
    import sympy

    x, y = sympy.symbols("x y")

    def to_expr(p):
        return sum(sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j
                   for (i, j), c in p.terms.items())

    q = sympy.Poly(sympy.cancel(to_expr(f) / to_expr(h)), x, y)
    return Polynomial({m: Fraction(int(c.p), int(c.q)) for m, c in zip(q.monoms(), q.coeffs())})


def _shears():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def intersection_multiplicity(f: Polynomial, g: Polynomial) -> int:
    """Local intersection number of ``f = 0`` and ``g = 0`` at the origin.

    After a shear ``x -> x + k*y`` (``k = 0, 1, -1, 2, ...``) chosen so that
    the line ``x = 0`` meets the two curves in no other common point and not
    both leading coefficients in ``y`` vanish there, the answer is the
    vanishing order at ``x = 0`` of ``Res_y(f, g)``.
    """
    if f.coefficient(0, 0) != 0 or g.coefficient(0, 0) != 0:
        return 0
    res = None
    for k in _shears():
        if abs(k) > 50:
            break
        F = shift_first(f, k, 1) if k else f
        G = shift_first(g, k, 1) if k else g
        if F.degree_y() < 1 or G.degree_y() < 1:
            continue
        f0, g0 = F.restrict_x0(), G.restrict_x0()
        if f0.is_zero() or g0.is_zero():
            continue
        from .algebra import upoly_gcd
        common = upoly_gcd(f0, g0)
        if common.degree != common.order():
            continue  # another common point on the line x = 0
        lf = F.y_coefficients()[-1]
        lg = G.y_coefficients()[-1]
        if lf(0) == 0 and lg(0) == 0:
            continue
        order = _sympy_resultant_order(F, G)
        if order is None:
            res = resultant_y(F, G)
            order = -1 if res.is_zero() else res.order()
        if order < 0:
            return _without_common_factor(f, g)
        return order
    # every line x = -k*y meets a common component away from the origin
    return _without_common_factor(f, g)


def _without_common_factor(f: Polynomial, g: Polynomial) -> int:
    h = _sympy_gcd(f, g)
    if h is None or h.coefficient(0, 0) == 0:
        raise CommonComponent("the curves share a component through the origin")
    if h.total_degree() == 0:
        raise CommonComponent("no admissible shear found")
    return intersection_multiplicity(_divide_exact(f, h), _divide_exact(g, h))


# ---------------------------------------------------------------------------
# minimal good resolution and canonical form

def minimize(g: ResolutionGraph) -> ResolutionGraph:
    """Contract (-1)-curves meeting at most two other components.

    Arrows count as components.  The last remaining divisor is never
    contracted, so a smooth germ keeps one node.
    """
    nodes = {n.id: DivisorNode(n.id, n.stage, n.weight, n.multiplicity, n.self_intersection, n.kind)
             for n in g.nodes}
    adj: Dict[int, set] = {nid: set() for nid in nodes}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    arrows = [Arrow(a.node, a.point, a.label, a.multiplicity, a.contact) for a in g.arrows]
    changed = True
    while changed and len(nodes) > 1:
        changed = False
        for nid in sorted(nodes):
            node = nodes[nid]
            mine = [a for a in arrows if a.node == nid]
            if node.self_intersection != -1 or len(adj[nid]) + len(mine) > 2:
                continue
            nbrs = sorted(adj[nid])
            if not nbrs:
                continue
            for m in nbrs:
                nodes[m].self_intersection += 1
                adj[m].discard(nid)
            if len(nbrs) == 2:
                adj[nbrs[0]].add(nbrs[1])
                adj[nbrs[1]].add(nbrs[0])
            for a in mine:
                a.node = nbrs[0]
            del nodes[nid]
            del adj[nid]
            changed = True
            break
    edges = sorted({tuple(sorted((a, b))) for a in adj for b in adj[a]})
    return ResolutionGraph(sorted(nodes.values(), key=lambda n: n.id), edges, arrows)


def canonical_encoding(g: ResolutionGraph) -> str:
    """Isomorphism-invariant string for a labelled tree.

    Labels are (multiplicity, self-intersection, number of arrows); the
    tree is rooted at its center and encoded bottom-up with sorted children.
    """
    if not g.nodes:
        return "()"
    ids = [n.id for n in g.nodes]
    nbr = {i: g.neighbors(i) for i in ids}
    label = {n.id: f"{n.multiplicity},{n.self_intersection},{g.arrow_count(n.id)}" for n in g.nodes}
    # peel leaves to find the center
    deg = {i: len(nbr[i]) for i in ids}
    layer = [i for i in ids if deg[i] <= 1]
    remaining = len(ids)
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            removed.add(leaf)
            for m in nbr[leaf]:
                if m not in removed:
                    deg[m] -= 1
                    if deg[m] == 1:
                        nxt.append(m)
        layer = nxt
    centers = [i for i in ids if i not in removed]

    def enc(v, parent):
        kids = sorted(enc(c, v) for c in nbr[v] if c != parent)
        return "(" + label[v] + "".join(kids) + ")"

    return min(enc(c, None) for c in centers)
