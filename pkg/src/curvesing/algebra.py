r"""Exact coefficient arithmetic and sparse bivariate polynomials.

Coefficients live in a bounded tower of simple algebraic extensions of
:math:`\mathbb{Q}`.  At the bottom of the tower plain :class:`fractions.Fraction`
values are used; one level up an element is a coefficient vector over the
level below, reduced modulo a monic minimal polynomial.

Univariate helpers work on plain lists of coefficients (lowest degree first)
and only use the ring operators, so the same code serves every level.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ExtensionDepthExceeded, PolynomialSyntaxError

Exponent = Tuple[int, int]


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, lowest degree first)

def _f(v):
    return Fraction(v) if isinstance(v, int) else v


def _trim(c: List) -> List:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a: Sequence, b: Sequence) -> List:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _psub(a: Sequence, b: Sequence) -> List:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _pmul(a: Sequence, b: Sequence) -> List:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return _trim(out)


def _pscale(a: Sequence, c) -> List:
    if c == 0:
        return []
    return _trim([ai * c for ai in a])


def _pdivmod(a: Sequence, b: Sequence) -> Tuple[List, List]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    _trim(r)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    lead = _f(b[-1])
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        c = c / lead
        q[k] = c
        for j in range(db + 1):
            r[k + j] = r[k + j] - c * b[j]
    return _trim(q), _trim(r[:db] if db > 0 else [])


def _pmonic(a: Sequence) -> List:
    a = _trim(list(a))
    if not a:
        return a
    lead = _f(a[-1])
    if lead == 1:
        return [_f(c) for c in a]
    return [c / lead for c in a]


def _pgcd(a: Sequence, b: Sequence) -> List:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pxgcd(a: Sequence, b: Sequence) -> Tuple[List, List, List]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
        t0, t1 = t1, _psub(t0, _pmul(q, t1))
    if not r0:
        return [], s0, t0
    lead = _f(r0[-1])
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def _pderiv(a: Sequence) -> List:
    return _trim([a[i] * i for i in range(1, len(a))])


def _peval(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pcompose(a: Sequence, b: Sequence) -> List:
    """Return ``a(b(t))``."""
    out: List = []
    for c in reversed(a):
        out = _padd(_pmul(out, b), [c] if c != 0 else [])
    return out


# ---------------------------------------------------------------------------
# field tower

class FieldTower:
    """A chain of simple algebraic extensions over the rationals.

    ``FieldTower()`` is :math:`\\mathbb{Q}` itself.  Extensions are created
    with :func:`adjoin_root`; each one keeps a pointer to the tower below.
    Towers compare by identity.
    """

    def __init__(self, depth_limit: int = 2, base: Optional["FieldTower"] = None,
                 minpoly: Optional[Sequence] = None):
        if depth_limit < 1 and base is None:
            raise ValueError("depth_limit must be positive")
        self.depth_limit = depth_limit if base is None else base.depth_limit
        self.base = base
        self.minpoly: Tuple = tuple(minpoly) if minpoly is not None else ()
        self.level = 0 if base is None else base.level + 1
        if base is not None:
            if len(self.minpoly) < 3 or self.minpoly[-1] != 1:
                raise ValueError("minimal polynomial must be monic of degree >= 2")
            self.degree = len(self.minpoly) - 1
            self.generator = FieldElement(self, [0, 1] + [0] * (self.degree - 2))
        else:
            self.degree = 1
            self.generator = None

    @property
    def extensions(self) -> List[Tuple]:
        """Minimal polynomials from the bottom of the tower upwards."""
        out = []
        t = self
        while t.base is not None:
            out.append(t.minpoly)
            t = t.base
        return out[::-1]

    @property
    def total_degree(self) -> int:
        t, d = self, 1
        while t.base is not None:
            d *= t.degree
            t = t.base
        return d

    def root(self) -> "FieldTower":
        t = self
        while t.base is not None:
            t = t.base
        return t

    def is_above(self, other: "FieldTower") -> bool:
        t = self
        while t is not None:
            if t is other:
                return True
            t = t.base
        return False

    def coerce(self, value):
        """Embed ``value`` (a rational or an element of a lower tower) here."""
        if self.base is None:
            if isinstance(value, FieldElement):
                if value.tower.level == 0:
                    return value.constant()
                raise TypeError("element does not belong to the rationals")
            return Fraction(value)
        if isinstance(value, FieldElement):
            if value.tower is self:
                return value
            if not self.is_above(value.tower):
                raise TypeError("element belongs to an unrelated tower")
        return FieldElement(self, [self.base.coerce(value)] + [0] * (self.degree - 1))

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def __repr__(self):
        if self.base is None:
            return "QQ"
        mp = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.minpoly) if c != 0)
        return f"{self.base!r}[r{self.level}]/({mp})"


def rationals(depth_limit: int = 2) -> FieldTower:
    return FieldTower(depth_limit=depth_limit)


def _level(value) -> int:
    return value.tower.level if isinstance(value, FieldElement) else 0


class FieldElement:
    """An element of an algebraic extension, stored in the power basis.

    ``coeffs`` holds ``degree`` values from the tower below.  Arithmetic is
    exact; inversion uses the extended Euclidean algorithm modulo the
    minimal polynomial.
    """

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs: Sequence):
        if tower.base is None:
            raise TypeError("use Fraction for rational values")
        c = list(coeffs)
        if len(c) > tower.degree:
            c = _pdivmod(c, list(tower.minpoly))[1]
        c = c + [0] * (tower.degree - len(c))
        self.tower = tower
        self.coeffs = tuple(tower.base.coerce(v) for v in c)

    # -- structure
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def constant(self):
        if not self.is_constant():
            raise ValueError("element is not in the base field")
        return self.coeffs[0]

    def coordinates(self) -> List[Fraction]:
        """Flattened rational coordinates, length equal to the tower degree."""
        out: List[Fraction] = []
        for c in self.coeffs:
            if isinstance(c, FieldElement):
                out.extend(c.coordinates())
            else:
                out.append(Fraction(c))
        return out

    def _pair(self, other):
        if isinstance(other, FieldElement):
            if other.tower is self.tower:
                return self, other
            if self.tower.is_above(other.tower):
                return self, self.tower.coerce(other)
            if other.tower.is_above(self.tower):
                return other.tower.coerce(self), other
            raise TypeError("elements of unrelated towers")
        if isinstance(other, (int, Fraction)):
            return self, self.tower.coerce(other)
        return None, None

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.tower, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.tower, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.tower, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.tower, [y - x for x, y in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.tower.zero()
            return FieldElement(self.tower, [x * other for x in self.coeffs])
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        prod = _pmul(list(a.coeffs), list(b.coeffs))
        return FieldElement(a.tower, _pdivmod(prod, list(a.tower.minpoly))[1] if len(prod) > a.tower.degree else prod)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self == 0:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = _pxgcd(_trim(list(self.coeffs)), list(self.tower.minpoly))
        if len(g) != 1:
            raise ZeroDivisionError("element is a zero divisor; minimal polynomial is reducible")
        return FieldElement(self.tower, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.tower, [x / other for x in self.coeffs])
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and self.is_constant()
        if isinstance(other, FieldElement):
            try:
                a, b = self._pair(other)
            except TypeError:
                return False
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self):
        return not self == 0

    def __repr__(self):
        return format_scalar(self)


def format_scalar(c) -> str:
    """Exact text for a coefficient: ``p``, ``p/q`` or a power-basis sum."""
    if isinstance(c, FieldElement):
        if c.is_constant():
            return format_scalar(c.coeffs[0])
        name = f"r{c.tower.level}"
        parts = []
        for k, v in enumerate(c.coeffs):
            if v == 0:
                continue
            mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            s = format_scalar(v)
            if not mono:
                parts.append(s)
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"({s})*{mono}")
        return "(" + "+".join(parts) + ")"
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def scalar_key(c) -> Tuple[Fraction, ...]:
    """Deterministic sort key for a coefficient."""
    if isinstance(c, FieldElement):
        return tuple(c.coordinates())
    return (Fraction(c),)


# ---------------------------------------------------------------------------
# univariate polynomials

class UPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_trim([_f(c) for c in coeffs]))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def order(self) -> int:
        """Vanishing order at 0 (``-1`` for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return -1

    def __add__(self, other):
        return UPoly(_padd(self.coeffs, _as_coeffs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return UPoly(_psub(self.coeffs, _as_coeffs(other)))

    def __rsub__(self, other):
        return UPoly(_psub(_as_coeffs(other), self.coeffs))

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        return UPoly(_pmul(self.coeffs, _as_coeffs(other)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        q, r = _pdivmod(self.coeffs, _as_coeffs(other))
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UPoly":
        return UPoly(_pmonic(self.coeffs))

    def derivative(self) -> "UPoly":
        return UPoly(_pderiv(self.coeffs))

    def __call__(self, x):
        return _peval(self.coeffs, x)

    def compose(self, other: "UPoly") -> "UPoly":
        return UPoly(_pcompose(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == tuple(_trim([other]))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return (self.degree, tuple(scalar_key(c) for c in self.coeffs))

    def to_string(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            out.append(_term_text(c, _mono_text(((var, k),)), bool(out)))
        return "".join(out)

    def __repr__(self):
        return f"UPoly({self.to_string()})"


def _as_coeffs(other) -> Tuple:
    if isinstance(other, UPoly):
        return other.coeffs
    return tuple(_trim([other]))


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    return UPoly(_pgcd(a.coeffs, b.coeffs))


def squarefree_factor(u: UPoly) -> List[Tuple[UPoly, int]]:
    """Yun's squarefree decomposition.

    Returns monic, pairwise coprime, squarefree factors with their
    multiplicities; ``u`` equals its leading coefficient times the product.
    """
    if u.is_zero():
        raise ValueError("squarefree_factor of the zero polynomial")
    if u.degree == 0:
        return []
    du = u.derivative()
    a = upoly_gcd(u, du)
    b = u.exact_div(a)
    c = du.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = upoly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def _factor_rational(u: UPoly) -> List[UPoly]:
    """Irreducible monic factors over the rationals of a squarefree ``u``."""
    import sympy

    t = sympy.Symbol("t")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in
                       (Fraction(v) for v in reversed(u.coeffs))], t, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for fac, _mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append(UPoly(coeffs).monic())
    return out


def _lift_upoly(u: UPoly, tower: FieldTower) -> UPoly:
    return UPoly([tower.coerce(c) for c in u.coeffs])


def factor_over(tower: FieldTower, u: UPoly) -> List[Tuple[UPoly, int]]:
    """Factor ``u`` into monic irreducibles over ``tower``.

    The rational level uses sympy; each extension level uses the norm
    (resultant) method of Trager on top of the level below.
    """
    out = []
    for part, mult in squarefree_factor(u):
        for fac in _factor_squarefree(tower, part):
            out.append((fac, mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    return out


def _factor_squarefree(tower: FieldTower, u: UPoly) -> List[UPoly]:
    if u.degree <= 1:
        return [u.monic()] if u.degree == 1 else []
    if tower.base is None:
        return _factor_rational(UPoly([tower.coerce(c) for c in u.coeffs]))
    u = _lift_upoly(u, tower).monic()
    theta = tower.generator
    base = tower.base
    minpoly = Polynomial({(0, k): c for k, c in enumerate(tower.minpoly) if c != 0})
    for s in (0, 1, -1, 2, -2, 3, -3, 4, 5, 6, 7):
        # bivariate G(t, theta) = u(t - s*theta), coefficients over the base
        shifted = UPoly([-s * theta, 1])
        g = u.compose(shifted)
        terms: Dict[Exponent, object] = {}
        for i, c in enumerate(g.coeffs):
            c = tower.coerce(c)
            for k, ck in enumerate(c.coeffs):
                if ck != 0:
                    terms[(i, k)] = ck
        norm = resultant_y(minpoly, Polynomial(terms))
        if norm.degree == u.degree * tower.degree and upoly_gcd(norm, norm.derivative()).degree == 0:
            break
    else:  # pragma: no cover - a suitable shift always exists in characteristic 0
        raise ArithmeticError("no squarefree norm found")
    factors = []
    remaining = u
    back = UPoly([s * theta, 1])
    for nf in _factor_squarefree(base, norm):
        cand = upoly_gcd(remaining, _lift_upoly(nf, tower).compose(back))
        if cand.degree > 0:
            factors.append(cand.monic())
            remaining = remaining.exact_div(cand)
    if remaining.degree > 0:
        factors.append(remaining.monic())
    return factors


def adjoin_root(tower: FieldTower, minpoly: UPoly):
    """Extend ``tower`` by a root of ``minpoly``.

    When ``minpoly`` is reducible the first irreducible factor in
    (degree, coefficient) order is used; a linear factor needs no extension
    and its root is returned in the current tower.
    """
    if minpoly.degree < 1:
        raise ValueError("minimal polynomial must have positive degree")
    if upoly_gcd(minpoly, minpoly.derivative()).degree > 0:
        raise ValueError("minimal polynomial must be squarefree")
    factors = sorted(_factor_squarefree(tower, minpoly), key=UPoly.sort_key)
    first = _lift_upoly(factors[0], tower).monic() if tower.base is not None else factors[0]
    if first.degree == 1:
        return tower, -first.coeffs[0]
    if tower.level >= tower.depth_limit:
        raise ExtensionDepthExceeded(
            f"adjoining a root of degree {first.degree} needs tower depth "
            f"{tower.level + 1} > limit {tower.depth_limit}")
    ext = FieldTower(base=tower, minpoly=first.coeffs)
    return ext, ext.generator


# ---------------------------------------------------------------------------
# sparse bivariate polynomials

def _mono_text(parts) -> str:
    pieces = []
    for var, k in parts:
        if k == 0:
            continue
        pieces.append(var if k == 1 else f"{var}^{k}")
    return "*".join(pieces)


def _term_text(c, mono: str, not_first: bool) -> str:
    neg = False
    if not isinstance(c, FieldElement) or c.is_constant():
        v = c if not isinstance(c, FieldElement) else c.coeffs[0]
        if not isinstance(v, FieldElement) and Fraction(v) < 0:
            neg, c = True, -v
        else:
            c = v
    cs = format_scalar(c)
    if mono:
        body = mono if c == 1 else f"{cs}*{mono}"
    else:
        body = cs
    if neg:
        return f"-{body}"
    return f"+{body}" if not_first else body


class Polynomial:
    """Sparse bivariate polynomial with exact coefficients.

    Terms are kept in a dict keyed by exponent pairs ``(i, j)`` for
    ``x**i * y**j``; zero coefficients are never stored.  Instances are
    treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exponent, object]] = None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    i, j = e
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent")
                    t[(int(i), int(j))] = _f(c)
        self.terms: Dict[Exponent, object] = t
        self._hash = None

    # -- constructors
    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "Polynomial":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "Polynomial":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "Polynomial":
        return cls({(0, 1): Fraction(1)})

    # -- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Exponent]:
        return sorted(self.terms)

    def coefficient(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    def items(self):
        return self.terms.items()

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def order(self) -> int:
        """Multiplicity at the origin (lowest total degree)."""
        return min((i + j for i, j in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial({e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def towers(self) -> List[FieldTower]:
        return [c.tower for c in self.terms.values() if isinstance(c, FieldElement)]

    def tower(self, default: Optional[FieldTower] = None) -> FieldTower:
        """Deepest tower used by the coefficients."""
        best = default
        for t in self.towers():
            if best is None or t.level > best.level:
                best = t
        return best if best is not None else rationals()

    # -- arithmetic
    def __add__(self, other):
        other = _as_poly(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Polynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return Polynomial({e: c * other for e, c in self.terms.items()})
        other = _as_poly(other)
        t: Dict[Exponent, object] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + c1 * c2
        return Polynomial(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == _as_poly(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- calculus and evaluation
    def diff_x(self) -> "Polynomial":
        return Polynomial({(i - 1, j): c * i for (i, j), c in self.terms.items() if i > 0})

    def diff_y(self) -> "Polynomial":
        return Polynomial({(i, j - 1): c * j for (i, j), c in self.terms.items() if j > 0})

    def __call__(self, x, y):
        acc = 0
        for (i, j), c in self.terms.items():
            acc = acc + c * (x ** i) * (y ** j)
        return acc

    def swap(self) -> "Polynomial":
        return Polynomial({(j, i): c for (i, j), c in self.terms.items()})

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial({e: fn(c) for e, c in self.terms.items()})

    def linear_change(self, a, b, c, d) -> "Polynomial":
        """Substitute ``x -> a*x + b*y`` and ``y -> c*x + d*y``."""
        X = Polynomial({(1, 0): a, (0, 1): b})
        Y = Polynomial({(1, 0): c, (0, 1): d})
        return self.compose(X, Y)

    def compose(self, X: "Polynomial", Y: "Polynomial") -> "Polynomial":
        xp = {0: Polynomial.constant(Fraction(1))}
        yp = {0: Polynomial.constant(Fraction(1))}
        out = Polynomial()
        for (i, j), c in sorted(self.terms.items()):
            if i not in xp:
                xp[i] = X ** i
            if j not in yp:
                yp[j] = Y ** j
            out = out + xp[i] * yp[j] * c
        return out

    def y_coefficients(self) -> List[UPoly]:
        """View as a polynomial in ``y`` with coefficients in ``K[x]``."""
        dy = self.degree_y()
        rows: List[List] = [[] for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            r = rows[j]
            if len(r) <= i:
                r.extend([0] * (i + 1 - len(r)))
            r[i] = c
        return [UPoly(r) for r in rows]

    def restrict_x0(self) -> UPoly:
        """``f(0, t)`` as a univariate polynomial."""
        c = [0] * (self.degree_y() + 1)
        for (i, j), v in self.terms.items():
            if i == 0:
                c[j] = v
        return UPoly(c)

    def restrict_y0(self) -> UPoly:
        """``f(t, 0)`` as a univariate polynomial."""
        c = [0] * (self.degree_x() + 1)
        for (i, j), v in self.terms.items():
            if j == 0:
                c[i] = v
        return UPoly(c)

    # -- text
    def to_string(self, xname: str = "x", yname: str = "y") -> str:
        if not self.terms:
            return "0"
        out = []
        for (i, j) in sorted(self.terms, key=lambda e: (-e[1], -e[0])):
            c = self.terms[(i, j)]
            out.append(_term_text(c, _mono_text(((xname, i), (yname, j))), bool(out)))
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()})"


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction, FieldElement)):
        return Polynomial({(0, 0): v if not isinstance(v, int) else Fraction(v)})
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


# ---------------------------------------------------------------------------
# parsing

_TOKEN_CHARS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in ("x", "y"):
            tokens.append(("var", ch, i))
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind!r}, found {_describe(tok)}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty expression", self.peek()[2])
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected {_describe(tok)}", tok[2])
        return p

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise PolynomialSyntaxError("exponent must be a positive integer", tok[2])
            self.take()
            if tok[1] < 1:
                raise PolynomialSyntaxError("exponent must be a positive integer", tok[2])
            base = base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.peek()
                if den[0] != "int":
                    raise PolynomialSyntaxError("expected denominator", den[2])
                self.take()
                if den[1] == 0:
                    raise PolynomialSyntaxError("zero denominator", den[2])
                value = value / den[1]
            return Polynomial.constant(value)
        if tok[0] == "var":
            self.take()
            return Polynomial.x() if tok[1] == "x" else Polynomial.y()
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected {_describe(tok)}", tok[2])


def _describe(tok) -> str:
    if tok[0] == "end":
        return "end of input"
    return repr(str(tok[1]))


def parse_polynomial(text: str, tower: Optional[FieldTower] = None) -> Polynomial:
    """Parse the ASCII polynomial grammar into an expanded polynomial.

    Accepted: variables ``x`` and ``y``, integer and ``p/q`` literals,
    ``+ - *``, ``^`` with a positive integer exponent and parentheses.
    Multiplication must be explicit.  ``tower`` is accepted for symmetry;
    rational literals belong to every tower.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# resultants

def _det_bareiss(M: List[List[UPoly]]) -> UPoly:
    n = len(M)
    if n == 0:
        return UPoly([1])
    M = [row[:] for row in M]
    sign = 1
    prev = UPoly([1])
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return UPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def resultant_y(f: Polynomial, g: Polynomial) -> UPoly:
    """Sylvester resultant with respect to ``y`` as a polynomial in ``x``.

    The Sylvester matrix lists the rows of ``f`` first, then those of ``g``,
    coefficients from the highest ``y`` power down.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    fc = f.y_coefficients()[::-1]
    gc = g.y_coefficients()[::-1]
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    if size == 0:
        return UPoly([1])
    zero = UPoly()
    rows = []
    for r in range(m):
        rows.append([zero] * r + fc + [zero] * (size - r - n - 1))
    for r in range(n):
        rows.append([zero] * r + gc + [zero] * (size - r - m - 1))
    return _det_bareiss(rows)


# ---------------------------------------------------------------------------
# substitutions used by the toric engine

def _check_matrix(sigma) -> Tuple[int, int, int, int]:
    (a, c), (b, d) = sigma
    if a * d - b * c not in (1, -1):
        raise ValueError(f"matrix {sigma} is not unimodular")
    if min(a, b, c, d) < 0:
        raise ValueError(f"matrix {sigma} has a negative entry")
    return a, b, c, d


def substitute_monomial(f: Polynomial, sigma) -> Tuple[int, int, Polynomial]:
    """Pull ``f`` back along ``(x, y) = (u^s11 v^s12, u^s21 v^s22)``.

    ``sigma`` is ``((s11, s12), (s21, s22))``; its columns are the two
    weight vectors of the chart.  Returns ``(r, s, g)`` with the pullback
    equal to ``u^r v^s g`` and neither ``u`` nor ``v`` dividing ``g``.
    """
    if f.is_zero():
        raise ValueError("substitute_monomial of the zero polynomial")
    a, b, c, d = _check_matrix(sigma)
    moved = {(a * i + b * j, c * i + d * j): coef for (i, j), coef in f.terms.items()}
    r = min(e[0] for e in moved)
    s = min(e[1] for e in moved)
    return r, s, Polynomial({(i - r, j - s): coef for (i, j), coef in moved.items()})


def shift_second(f: Polynomial, c, k: int) -> Polynomial:
    """Substitute ``y -> y + c*x**k`` (``k >= 0``)."""
    if c == 0 or f.is_zero():
        return f
    by_j: Dict[int, List[Tuple[int, object]]] = {}
    for (i, j), coef in f.terms.items():
        by_j.setdefault(j, []).append((i, coef))
    out: Dict[Exponent, object] = {}
    cpow = [1]
    for _ in range(max(by_j)):
        cpow.append(cpow[-1] * c)
    for j, entries in by_j.items():
        for l in range(j + 1):
            w = comb(j, l) * cpow[j - l]
            dx = k * (j - l)
            for i, coef in entries:
                key = (i + dx, l)
                out[key] = out.get(key, 0) + coef * w
    return Polynomial(out)


def shift_first(f: Polynomial, c, k: int) -> Polynomial:
    """Substitute ``x -> x + c*y**k`` (``k >= 0``)."""
    return shift_second(f.swap(), c, k).swap()


def triangular_change(f: Polynomial, c, k: int, axis: str = "y_by_x") -> Polynomial:
    """Replace the second variable by itself plus ``c`` times the first to the ``k``.

    ``axis`` is ``"y_by_x"`` or ``"v_by_u"``; both name the same operation
    on the two slots of a :class:`Polynomial`.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if axis not in ("y_by_x", "v_by_u"):
        raise ValueError(f"unknown axis {axis!r}")
    return shift_second(f, c, k)


def content_gcd(values: Iterable[int]) -> int:
    from math import gcd

    return reduce(gcd, values, 0)
