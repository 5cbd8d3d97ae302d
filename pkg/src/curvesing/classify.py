"""Names for singularity types: ``B_{n,m}``, towers and compositions.

``Atom(n, m)`` is the class of ``x^n + y^m``: a face block of width ``n``
and height ``m``.  ``Tower(Atom(n, m), e, children)`` is a face block of
``r = gcd(n, m)`` roots of multiplicity ``e`` (so its extents are
``(n*e, m*e)``) whose toric children have the listed types.  Children are
written in the coordinates of the exceptional divisor: ``u`` along the
divisor, ``w`` across it, so every child has height ``e``.

Compositions list their blocks flat first (slope ``m/n`` ascending).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import Polynomial
from .errors import ModelConstructionFailed, PolynomialSyntaxError
from .resolve import (DegeneratePoint, EngineConfig, ResolutionGraph, SmoothBranch,
                      canonical_encoding, minimize, resolve, toric_stage)


@dataclass(frozen=True)
class Atom:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("atom indices must be positive")

    @property
    def roots(self) -> int:
        return gcd(self.n, self.m)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.m, self.n)

    def transpose(self) -> "Atom":
        return Atom(self.m, self.n)


@dataclass(frozen=True)
class Tower:
    base: Atom
    e: int
    children: Tuple[Tuple[int, "TypeExpr"], ...]

    def __post_init__(self):
        if self.e < 2:
            raise ValueError("tower exponent must be at least 2")
        if not self.children:
            raise ValueError("tower superscript must be non-empty")
        if any(k < 1 for k, _ in self.children):
            raise ValueError("superscript counts must be positive")

    @property
    def slope(self) -> Fraction:
        return self.base.slope


@dataclass(frozen=True)
class Composition:
    pieces: Tuple[Union[Atom, Tower], ...]


TypeExpr = Union[Atom, Tower, Composition]
Piece = Union[Atom, Tower]


def pieces_of(t: TypeExpr) -> List[Piece]:
    if isinstance(t, Composition):
        out: List[Piece] = []
        for p in t.pieces:
            out.extend(pieces_of(p))
        return out
    return [t]


def _compose(pieces: Sequence[Piece]) -> TypeExpr:
    if len(pieces) == 1:
        return pieces[0]
    return Composition(tuple(pieces))


# ---------------------------------------------------------------------------
# printing

def type_to_string(t: TypeExpr) -> str:
    if isinstance(t, Atom):
        return f"B_{{{t.n},{t.m}}}"
    if isinstance(t, Tower):
        parts = []
        for k, child in t.children:
            s = type_to_string(child)
            if isinstance(child, Composition):
                s = f"({s})"
            parts.append(s if k == 1 else f"{k}{s}")
        return f"({type_to_string(t.base)}^{t.e})^{{{'+'.join(parts)}}}"
    return "o".join(type_to_string(p) for p in t.pieces)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(\\circ|∘|o)|(A_)|(E_)|(\{B\}_|B_)|(.))")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("o", None, start))
        elif m.group(3):
            out.append(("A", None, start))
        elif m.group(4):
            out.append(("E", None, start))
        elif m.group(5):
            out.append(("B", None, start))
        else:
            ch = m.group(6)
            if ch.isspace():
                pos = m.end()
                continue
            out.append((ch, None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _TypeParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, off: int = 0):
        return self.toks[min(self.i + off, len(self.toks) - 1)]

    def take(self, kind: Optional[str] = None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1] if tok[0] == "int" else tok[0])
            raise PolynomialSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> TypeExpr:
        t = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            raise PolynomialSyntaxError(f"unexpected {tok[0]!r}", tok[2])
        return t

    def expr(self) -> TypeExpr:
        pieces = pieces_of(self.term())
        while self.peek()[0] == "o":
            self.take()
            pieces.extend(pieces_of(self.term()))
        return _compose(pieces)

    def _index_pair(self) -> Tuple[int, int]:
        self.take("{")
        n = self.take("int")[1]
        self.take(",")
        m = self.take("int")[1]
        self.take("}")
        return n, m

    def _single_index(self) -> int:
        if self.peek()[0] == "{":
            self.take()
            k = self.take("int")[1]
            self.take("}")
            return k
        return self.take("int")[1]

    def atom(self) -> Atom:
        kind = self.peek()[0]
        if kind == "B":
            self.take()
            return Atom(*self._index_pair())
        if kind == "A":
            self.take()
            return Atom(self._single_index() + 1, 2)
        if kind == "E":
            tok = self.take()
            k = self._single_index()
            if k != 6:
                raise PolynomialSyntaxError(f"unknown class E_{k}", tok[2])
            return Atom(3, 4)
        tok = self.peek()
        raise PolynomialSyntaxError(f"expected a class name, found {tok[0]!r}", tok[2])

    def term(self) -> TypeExpr:
        if self.peek()[0] != "(":
            return self.atom()
        self.take("(")
        if self.peek()[0] in ("B", "A", "E") and self._tower_ahead():
            base = self.atom()
            self.take("^")
            e = self.take("int")[1]
            self.take(")")
            return Tower(base, e, self.superscript())
        inner = self.expr()
        self.take(")")
        return inner

    def _tower_ahead(self) -> bool:
        # atom followed by '^'
        j = self.i + 1
        depth = 0
        while j < len(self.toks):
            k = self.toks[j][0]
            if k == "{":
                depth += 1
            elif k == "}":
                depth -= 1
                if depth == 0:
                    return self.toks[j + 1][0] == "^"
            elif k == "int" and depth == 0 and self.toks[j - 1][0] == "A":
                return self.toks[j + 1][0] == "^"
            elif depth == 0 and k not in ("int",):
                return False
            j += 1
        return False

    def superscript(self) -> Tuple[Tuple[int, TypeExpr], ...]:
        self.take("^")
        self.take("{")
        save = self.i
        try:
            self.take("(")
            items = self.summands()
            self.take(")")
            self.take("}")
        except PolynomialSyntaxError:
            self.i = save
            items = self.summands()
            self.take("}")
        return _group_children(items)

    def summands(self) -> List[Tuple[int, TypeExpr]]:
        items = [self.summand()]
        while self.peek()[0] == "+":
            self.take()
            items.append(self.summand())
        return items

    def summand(self) -> Tuple[int, TypeExpr]:
        k = 1
        if self.peek()[0] == "int":
            k = self.take()[1]
            if k < 1:
                raise PolynomialSyntaxError("count must be positive", self.peek()[2])
        return k, self.expr()


def parse_type(text: str) -> TypeExpr:
    """Parse ``B_{n,m}``, ``A_n``, towers ``(B_{n,m}^e)^{k1 T1 + ...}`` and ``o``."""
    return _TypeParser(text).parse()


def _group_children(items) -> Tuple[Tuple[int, TypeExpr], ...]:
    counts: Dict[TypeExpr, int] = {}
    for k, t in items:
        counts[t] = counts.get(t, 0) + k
    return tuple(sorted(((k, t) for t, k in counts.items()),
                        key=lambda kt: (_bases(pieces_of(kt[1])), type_to_string(kt[1]), kt[0]),
                        reverse=True))


# ---------------------------------------------------------------------------
# normal form

def _merge(pieces: Sequence[Piece]) -> List[Piece]:
    atoms: Dict[Fraction, Atom] = {}
    towers: Dict[Tuple[Fraction, int], Tower] = {}
    for p in pieces:
        if isinstance(p, Atom):
            old = atoms.get(p.slope)
            atoms[p.slope] = p if old is None else Atom(old.n + p.n, old.m + p.m)
        else:
            key = (p.slope, p.e)
            old = towers.get(key)
            if old is None:
                towers[key] = p
            else:
                towers[key] = Tower(Atom(old.base.n + p.base.n, old.base.m + p.base.m), p.e,
                                    _group_children(list(old.children) + list(p.children)))
    out: List[Piece] = list(atoms.values()) + list(towers.values())
    out.sort(key=lambda p: (p.slope, 0 if isinstance(p, Atom) else 1,
                            0 if isinstance(p, Atom) else p.e, type_to_string(p)))
    return out


def _norm_children(t: TypeExpr) -> TypeExpr:
    """Normal form inside a divisor frame: no transposition."""
    out = []
    for p in _merge(pieces_of(t)):
        if isinstance(p, Tower):
            p = Tower(p.base, p.e, _group_children([(k, _norm_children(c)) for k, c in p.children]))
        out.append(p)
    if len(out) == 1 and isinstance(out[0], Tower) and out[0].base.m == 1 \
            and out[0].children[0][0] == 1:
        # a lone point of multiplicity e on a face of weight (1, B) is removed
        # by w -> w + c*u^B; the child polygon is sheared onto the new axes
        B = out[0].base.n
        return _norm_children(_compose([_shear(q, B) for q in pieces_of(out[0].children[0][1])]))
    return _compose(out)


def _shear(p: Piece, B: int) -> Piece:
    if isinstance(p, Atom):
        return Atom(p.n + B * p.m, p.m)
    return Tower(Atom(p.base.n + B * p.base.m, p.base.m), p.e, p.children)


def _transpose(pieces: Sequence[Piece]) -> List[Piece]:
    out = []
    for p in reversed(pieces):
        if isinstance(p, Atom):
            out.append(p.transpose())
        else:
            out.append(Tower(p.base.transpose(), p.e, p.children))
    return out


def _bases(pieces: Sequence[Piece]):
    return [(p.n, p.m) if isinstance(p, Atom) else (p.base.n, p.base.m) for p in pieces]


def _exchange_rule(pieces: List[Piece]) -> List[Piece]:
    """``B_{k2,2} o B_{2,1} o (B_{2,1}^2)^{B_{k1,2}}``: keep ``k1 + 4 >= k2``."""
    if len(pieces) != 3:
        return pieces
    a, b, t = pieces
    if not (isinstance(a, Atom) and a.m == 2 and b == Atom(2, 1) and isinstance(t, Tower)):
        return pieces
    if t.base != Atom(2, 1) or t.e != 2 or len(t.children) != 1:
        return pieces
    k, child = t.children[0]
    if k != 1 or not isinstance(child, Atom) or child.m != 2:
        return pieces
    k1, k2 = child.n, a.n
    if k1 + 4 >= k2:
        return pieces
    return _merge([Atom(k1 + 4, 2), b, Tower(t.base, 2, ((1, Atom(k2 - 4, 2)),))])


def normalize(t: TypeExpr) -> TypeExpr:
    """Canonical spelling: merged blocks, sorted, oriented, exchange rule applied."""
    inner = _norm_children(t)
    if isinstance(inner, Tower) and inner.base.n == 1:
        inner = _norm_children(_compose(_transpose([inner])))
    pieces = pieces_of(inner)
    flipped = _merge(_transpose(pieces))
    cands = [pieces, flipped]
    best = max(cands, key=lambda ps: (_bases(ps), type_to_string(_compose(ps))))
    best = _exchange_rule(list(best))
    return _compose(best)


# ---------------------------------------------------------------------------
# naming a germ

def _name(h: Polynomial, M: int, stage: int, cfg: EngineConfig) -> TypeExpr:
    res = toric_stage(h, M, stage, cfg, convenient=True)
    faces = res.polygon.faces
    if not faces:
        # two transverse smooth branches
        return Atom(2, 2)
    pieces: List[Piece] = []
    for fi, face in enumerate(faces):
        A, B = face.weight
        simple = sum(o.count for o in res.outcomes
                     if isinstance(o, SmoothBranch) and o.face_index == fi)
        if simple:
            pieces.append(Atom(B * simple, A * simple))
        by_e: Dict[int, List[DegeneratePoint]] = {}
        for o in res.outcomes:
            if isinstance(o, DegeneratePoint) and o.face_index == fi:
                by_e.setdefault(o.multiplicity, []).append(o)
        for e in sorted(by_e):
            pts = by_e[e]
            r = sum(p.count for p in pts)
            kids = [(p.count, _name(p.germ, p.exceptional, stage + 1, cfg)) for p in pts]
            pieces.append(Tower(Atom(B * r, A * r), e, _group_children(kids)))
    return _compose(pieces)


def type_from_resolution(f: Polynomial, cfg: EngineConfig = EngineConfig()) -> TypeExpr:
    """Type read off the toric resolution of ``f``, before normalization."""
    if f.is_zero() or f.coefficient(0, 0) != 0:
        raise ValueError("germ must vanish at the origin and be non-zero")
    from .resolve import _check_reduced

    _check_reduced(f)
    return _name(f, 0, 0, cfg)


def classify(f: Polynomial, cfg: EngineConfig = EngineConfig()) -> TypeExpr:
    return normalize(type_from_resolution(f, cfg))


# ---------------------------------------------------------------------------
# model germs

@dataclass
class _Root:
    gamma: int
    nu: int
    child: Optional[TypeExpr]


@dataclass
class _Face:
    A: int
    B: int
    roots: List[_Root]
    start: Tuple[int, int] = (0, 0)
    end: Tuple[int, int] = (0, 0)
    chart: Tuple[int, int] = (0, 1)

    @property
    def L(self) -> int:
        return sum(r.nu for r in self.roots)

    @property
    def d(self) -> int:
        return self.A * self.start[0] + self.B * self.start[1]


def _binom(b: int, l: int) -> Fraction:
    out = Fraction(1)
    for t in range(l):
        out = out * (b - t) / (t + 1)
    return out


def _child_coeffs(f: Polynomial, face: _Face, rho, kmax: int, lmax: int) -> Dict[Tuple[int, int], Fraction]:
    """Coefficients ``(k, l)`` (``k <= kmax``, ``l <= lmax``) of the germ of ``f``
    at ``v = rho`` on the divisor of ``face``, divided by the face monomial."""
    A, B = face.A, face.B
    c, dd = face.chart
    m0 = c * face.end[0] + dd * face.end[1]
    out: Dict[Tuple[int, int], Fraction] = {}
    for (i, j), coef in f.terms.items():
        a = A * i + B * j - face.d
        if a > kmax:
            continue
        if a < 0:
            raise ModelConstructionFailed("a term lies below the Newton boundary")
        b = c * i + dd * j - m0
        for l in range(lmax + 1):
            val = coef * _binom(b, l) * Fraction(rho) ** (b - l)
            if val:
                out[(a, l)] = out.get((a, l), 0) + val
    return {k: v for k, v in out.items() if v}


def _chart_for(A: int, B: int) -> Tuple[int, int]:
    for c in range(A):
        if (1 + B * c) % A == 0:
            return c, (1 + B * c) // A
    raise AssertionError("unreachable")


def _factor(face: _Face, gamma: int, power: int) -> Polynomial:
    return (Polynomial.monomial(0, face.A) + Polynomial.monomial(face.B, 0, gamma)) ** power


def _basis_term(face: _Face, j: int, k: int, l: int) -> Polynomial:
    """P-homogeneous term of level ``d + k`` whose germ at root ``j`` is ``u^k w^l * unit``."""
    root = face.roots[j]
    prod = _factor(face, root.gamma, l)
    for i, other in enumerate(face.roots):
        if i != j:
            prod = prod * _factor(face, other.gamma, other.nu)
    A, B = face.A, face.B
    nf = l + face.L - root.nu
    lo, hi = face.start[0], face.start[0] + B * (root.nu - l)
    target = face.d + k - A * B * nf
    centre = Fraction(lo + hi, 2)
    best = None
    for alpha in range(lo, hi + 1):
        if (target - A * alpha) % B == 0:
            if best is None or abs(alpha - centre) < abs(best - centre):
                best = alpha
    beta = (target - A * best) // B
    if beta < 0:
        raise ModelConstructionFailed("no admissible position for a perturbation term")
    return Polynomial.monomial(best, beta) * prod


def _faces_for(t: TypeExpr) -> List[_Face]:
    groups: Dict[Fraction, List[Piece]] = {}
    for p in pieces_of(t):
        groups.setdefault(p.slope, []).append(p)
    faces = []
    for slope in sorted(groups, reverse=True):
        A, B = slope.numerator, slope.denominator
        roots: List[_Root] = []
        for p in groups[slope]:
            if isinstance(p, Atom):
                roots.extend(_Root(0, 1, None) for _ in range(p.roots))
            else:
                kids = [c for k, c in p.children for _ in range(k)]
                if len(kids) != p.base.roots:
                    raise ModelConstructionFailed(
                        f"{type_to_string(p)}: superscript has {len(kids)} entries "
                        f"for {p.base.roots} points")
                roots.extend(_Root(0, p.e, c) for c in kids)
        for g, r in enumerate(roots, start=1):
            r.gamma = g
        faces.append(_Face(A, B, roots, chart=_chart_for(A, B)))
    return faces


def _build(t: TypeExpr) -> Polynomial:
    faces = _faces_for(t)
    height = sum(f.A * f.L for f in faces)
    pos = (0, height)
    terms: Dict[Tuple[int, int], Fraction] = {}
    scale = Fraction(1)
    for face in faces:
        face.start = pos
        pos = (pos[0] + face.B * face.L, pos[1] - face.A * face.L)
        face.end = pos
        if all(r.nu == 1 for r in face.roots) and len(face.roots) > 0 and face.L > 1 \
                and not any(r.child for r in face.roots):
            # binomial face: distinct roots of T^L + 1
            terms[face.start] = scale
            terms[face.end] = scale
            continue
        poly = Polynomial.constant(1)
        for r in face.roots:
            poly = poly * _factor(face, r.gamma, r.nu)
        for (i, j), c in poly.terms.items():
            terms[(i + face.start[0], j + face.end[1])] = c * scale
        scale = terms[face.end]
    f = Polynomial(terms)
    towers = [(face, j) for face in faces for j, r in enumerate(face.roots) if r.child is not None]
    if not towers:
        return f
    targets = {}
    for face, j in towers:
        root = face.roots[j]
        H = _build(root.child)
        e = root.nu
        col0 = {l for (k, l) in H.terms if k == 0}
        if not col0 or min(col0) != e:
            raise ModelConstructionFailed(
                f"child {type_to_string(root.child)} has height {min(col0) if col0 else 0}, "
                f"expected {e}")
        kw = max([k for (k, l) in H.terms if l < e] + [1])
        rho = -root.gamma
        s0 = _child_coeffs(f, face, rho, 0, 2 * e - 1)
        unit = [s0.get((0, e + l), Fraction(0)) for l in range(e)]
        lead = H.coefficient(0, e)
        tgt = {}
        for k in range(1, kw + 1):
            for l in range(e):
                val = sum(unit[l - lp] * H.coefficient(k, lp) for lp in range(l + 1)) / lead
                tgt[(k, l)] = val
        targets[(id(face), j)] = (kw, tgt)
    for _ in range(12):
        changed = False
        for face, j in towers:
            kw, tgt = targets[(id(face), j)]
            e = face.roots[j].nu
            rho = -face.roots[j].gamma
            cur = _child_coeffs(f, face, rho, kw, e - 1)
            for k in range(1, kw + 1):
                for l in range(e):
                    delta = tgt[(k, l)] - cur.get((k, l), 0)
                    if not delta:
                        continue
                    T = _basis_term(face, j, k, l)
                    img = _child_coeffs(T, face, rho, kw, e - 1)
                    c = delta / img[(k, l)]
                    f = f + T * c
                    for key, v in img.items():
                        cur[key] = cur.get(key, 0) + c * v
                    changed = True
        if not changed:
            return f
    raise ModelConstructionFailed("perturbation terms did not settle")


def model_germ(t: TypeExpr, cfg: EngineConfig = EngineConfig()) -> Polynomial:
    """A polynomial germ of type ``t``, checked by resolving it again."""
    f = _build(t)
    got = classify(f, cfg)
    if normalize(got) != normalize(t):
        raise ModelConstructionFailed(
            f"model resolves to {type_to_string(normalize(got))}, not {type_to_string(normalize(t))}")
    return f


# ---------------------------------------------------------------------------
# equivalence

def graph_signature(g: ResolutionGraph) -> Tuple[str, int]:
    return canonical_encoding(minimize(g)), g.branch_count


_SIGNATURES: Dict[Tuple[str, EngineConfig], Tuple[str, int]] = {}


def type_signature(t: TypeExpr, cfg: EngineConfig = EngineConfig()) -> Tuple[str, int]:
    key = (type_to_string(normalize(t)), cfg)
    if key not in _SIGNATURES:
        _SIGNATURES[key] = graph_signature(resolve(model_germ(t, cfg), cfg))
    return _SIGNATURES[key]


def is_equivalent(s: TypeExpr, t: TypeExpr, cfg: EngineConfig = EngineConfig()) -> bool:
    """Same minimal good resolution graph (and branch count) for the two models."""
    if normalize(s) == normalize(t):
        return True
    return type_signature(s, cfg) == type_signature(t, cfg)


def germ_has_type(f: Polynomial, t: TypeExpr, cfg: EngineConfig = EngineConfig()) -> bool:
    """Compare the resolution of ``f`` with the model of ``t``."""
    return graph_signature(resolve(f, cfg)) == type_signature(t, cfg)
