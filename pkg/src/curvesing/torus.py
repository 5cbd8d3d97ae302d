"""Torus curves ``f = f5^2 + f2^5`` and their local singularity at the origin.

The configuration at ``O`` (multiplicities, tangent cones, contact of the
conic with the quintic) is always measured from the polynomials.  From it
we get a case label, a rule-based prediction when one applies, and a
lookup of the resolved type in the encoded classification tables.
"""
from __future__ import annotations

import json
import random
from functools import lru_cache
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Polynomial, UPoly
from .classify import (TypeExpr, classify, graph_signature, is_equivalent, normalize,
                       parse_type, type_from_resolution, type_signature, type_to_string)
from .errors import CommonComponent, CurveSingError, NonReducedInput
from .newton import multiplicity_tangent_cone, tangent_profile
from .resolve import (EngineConfig, _check_reduced, intersection_multiplicity, resolve,
                      acampo_mu)
from .tables import LINEAR, REDUCED, TableEntry, candidates, theorem_tables

MAJOR = {1: "I", 2: "II", 3: "III", 4: "IV", 5: "V"}
SUBCASE = {
    (1, 1): "a", (2,): "b",
    (1, 1, 1): "a", (2, 1): "b", (3,): "c",
    (1, 1, 1, 1): "a", (2, 1, 1): "b", (3, 1): "c", (4,): "d", (2, 2): "e",
}


# ---------------------------------------------------------------------------
# lines through the origin

@dataclass(frozen=True)
class _Line:
    """``x = 0`` when ``vertical``, else ``y = rho*x``."""

    vertical: bool
    rho: object = 0


def _line_of(poly: Polynomial) -> _Line:
    # lines come as x, y or y - rho*x
    if poly.coefficient(0, 1) == 0:
        return _Line(True)
    return _Line(False, -poly.coefficient(1, 0) / poly.coefficient(0, 1))


def _tangent_of_smooth(f2: Polynomial) -> _Line:
    a, b = f2.coefficient(1, 0), f2.coefficient(0, 1)
    if b == 0:
        return _Line(True)
    return _Line(False, -Fraction(a) / Fraction(b))


def order_along(f: Polynomial, line: _Line) -> int:
    """Intersection number of ``f = 0`` with a line through the origin."""
    if line.vertical:
        return f.restrict_x0().order()
    by_degree: Dict[int, object] = {}
    for (i, j), c in f.items():
        by_degree[i + j] = by_degree.get(i + j, 0) + c * line.rho ** j
    nonzero = [d for d, c in by_degree.items() if c != 0]
    if not nonzero:
        raise CommonComponent("the line is a component of the curve")
    return min(nonzero)


def cone_multiplicity(f: Polynomial, line: _Line) -> int:
    """How often ``line`` divides the tangent cone of ``f``."""
    m = f.order()
    h = f.homogeneous_part(m)
    if line.vertical:
        return min(i for i, _ in h.terms)
    u = UPoly([h.coefficient(m - k, k) for k in range(m + 1)])
    count = 0
    while not u.is_zero() and u(line.rho) == 0:
        count += 1
        u = u.derivative()
    return count


# ---------------------------------------------------------------------------
# curves

@dataclass(frozen=True)
class TorusCurve:
    f2: Polynomial
    f5: Polynomial
    f: Polynomial
    iota: int
    m2: int
    m5: int
    linear: bool


def build(f2: Polynomial, f5: Polynomial) -> TorusCurve:
    """Assemble ``f5^2 + f2^5`` and measure the intersection data at ``O``."""
    if f2.is_zero() or f5.is_zero():
        raise ValueError("f2 and f5 must be non-zero")
    if f2.total_degree() > 2 or f5.total_degree() > 5:
        raise ValueError("f2 must have degree <= 2 and f5 degree <= 5")
    if f2.coefficient(0, 0) != 0 or f5.coefficient(0, 0) != 0:
        raise ValueError("f2 and f5 must vanish at the origin")
    iota = intersection_multiplicity(f2, f5)
    f = f5 * f5 + f2 ** 5
    _check_reduced(f)
    m2, m5 = f2.order(), f5.order()
    linear = False
    if m2 == 2:
        a, b, c = f2.coefficient(2, 0), f2.coefficient(1, 1), f2.coefficient(0, 2)
        linear = b * b - 4 * a * c == 0
    if not (1 <= iota <= 10 and m2 * m5 <= iota):
        raise AssertionError(f"intersection data violates Bezout: iota={iota}, m2={m2}, m5={m5}")
    return TorusCurve(f2, f5, f, iota, m2, m5, linear)


def build_from_text(f2: str, f5: str) -> TorusCurve:
    from .algebra import parse_polynomial

    return build(parse_polynomial(f2), parse_polynomial(f5))


@dataclass(frozen=True)
class CaseLabel:
    major: str
    tangent_profile: Tuple[int, ...]
    conic_profile: str
    iota: int
    line_iotas: Optional[Tuple[int, ...]] = None
    contact: Optional[int] = None

    @property
    def key(self) -> str:
        """Row key of the classification tables."""
        sub = SUBCASE.get(self.tangent_profile, "")
        if self.conic_profile == "double_line":
            return "L-I" if self.major == "I" else f"L-{self.major}" + (f"-{sub}" if sub else "")
        if self.major == "I":
            return "I"
        side = "1" if self.conic_profile == "smooth" else "2"
        if self.major == "V":
            return f"V-{side}"
        return f"{self.major}-{sub}-{side}"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tangent_profile"] = list(self.tangent_profile)
        d["line_iotas"] = list(self.line_iotas) if self.line_iotas else None
        d["key"] = self.key
        return d


def _conic_lines(tc: TorusCurve) -> List[_Line]:
    _, lines = multiplicity_tangent_cone(tc.f2)
    return [_line_of(p) for p, _ in lines]


def dispatch_case(tc: TorusCurve) -> CaseLabel:
    m5, profile = tangent_profile(tc.f5)
    if tc.m2 == 1:
        conic = "smooth"
    elif tc.linear:
        conic = "double_line"
    else:
        conic = "two_lines"
    line_iotas = None
    contact = None
    if conic == "smooth":
        contact = cone_multiplicity(tc.f5, _tangent_of_smooth(tc.f2))
    else:
        lines = _conic_lines(tc)
        line_iotas = tuple(sorted((order_along(tc.f5, ln) for ln in lines), reverse=True))
        contact = max(cone_multiplicity(tc.f5, ln) for ln in lines)
    return CaseLabel(MAJOR[m5], tuple(profile), conic, tc.iota, line_iotas, contact)


# ---------------------------------------------------------------------------
# predictions

@dataclass(frozen=True)
class Prediction:
    types: Tuple[TypeExpr, ...]
    rule: Optional[str]
    generic_only: bool = False

    @property
    def unconditional_singleton(self) -> bool:
        return len(self.types) == 1 and not self.generic_only

    @property
    def texts(self) -> List[str]:
        return [type_to_string(t) for t in self.types]

    def to_dict(self) -> dict:
        return {"rule": self.rule, "generic_only": self.generic_only, "types": self.texts}


def _pred(rule: str, *texts: str, generic: bool = False) -> Prediction:
    return Prediction(tuple(parse_type(s) for s in texts), rule, generic)


def predict(tc: TorusCurve) -> Prediction:
    """Types forced by the general rules for (2,5) torus curves, if any."""
    label = dispatch_case(tc)
    i, m = tc.iota, tc.m5
    if m == 1:
        return _pred("smooth_quintic", f"B_{{{5 * i},2}}")
    if tc.linear:
        return Prediction((), None)
    distinct = all(e == 1 for e in label.tangent_profile)
    if tc.m2 == 1:
        t = label.contact
        if m == 2:
            if distinct:
                return _pred("node_smooth_conic", f"B_{{{5 * i - 7},2}}oB_{{2,3}}")
            return Prediction((), None)
        if t == 0:
            return _pred("transverse_smooth_conic", f"B_{{{2 * m},5}}")
        if t == 1:
            threshold = Fraction(5 * (m - 1), 3)
            if i < threshold:
                return _pred("simple_contact_smooth_conic", f"B_{{{2 * i},5}}")
            if i > threshold:
                beta = 5 * (i - m + 1) - 2 * (m - 1)
                return _pred("simple_contact_smooth_conic",
                             f"B_{{{beta},2}}oB_{{{2 * (m - 1)},3}}")
            return _pred("simple_contact_smooth_conic", f"B_{{{2 * i},5}}", generic=True)
        return Prediction((), None)
    # two distinct lines through O
    if distinct and 2 <= m <= 4:
        b1, b2 = (5 * (nu - m + 2) - 2 * (m - 1) for nu in label.line_iotas)
        if m == 2:
            return _pred("ordinary_quintic_two_lines", f"B_{{{b1},2}}oB_{{2,{b2}}}")
        count = "" if m == 3 else str(m - 2)
        middle = f"(B_{{{m - 2},{m - 2}}}^2)^{{{count}B_{{{10 - 2 * m},2}}}}"
        return _pred("ordinary_quintic_two_lines", f"B_{{{b1},2}}o{middle}oB_{{2,{b2}}}")
    return Prediction((), None)


# ---------------------------------------------------------------------------
# table lookup and reports

@dataclass
class TableHit:
    table: str
    hit: bool
    case: Optional[str] = None
    iota: Optional[int] = None
    entry: Optional[str] = None
    dagger_of: Optional[str] = None
    same_cell: bool = False
    explained: Optional[str] = None


def lookup(tc: TorusCurve, label: CaseLabel, engine: TypeExpr,
           signature: Optional[Tuple[str, int]] = None,
           cfg: EngineConfig = EngineConfig()) -> TableHit:
    """Find the engine type among the table rows, nearest cell first."""
    tables = theorem_tables()
    table = LINEAR if tc.linear else REDUCED
    cands = candidates(tables, table, label.key, tc.iota)
    want = type_to_string(normalize(engine))

    def hit(e: TableEntry, s: str) -> TableHit:
        return TableHit(table, True, e.case, e.iota, s, e.dagger_of,
                        e.case == label.key and e.iota == tc.iota)

    for e, s in cands:
        if type_to_string(normalize(tables.parsed[s])) == want:
            return hit(e, s)
    if signature is None:
        signature = graph_signature(resolve(tc.f, cfg))
    for e, s in cands:
        try:
            if type_signature(tables.parsed[s], cfg) == signature:
                return hit(e, s)
        except CurveSingError:
            continue
    for d in ROW_DISCREPANCY:
        if d.table == table and d.case == label.key and d.iota == tc.iota \
                and signature in d.signatures(cfg):
            return TableHit(table, False, d.case, d.iota, d.printed_type, explained=d.reason)
    return TableHit(table, False)


@dataclass
class Report:
    f2: str
    f5: str
    case: CaseLabel
    iota: int
    mu: int
    engine_type: str
    normalized: str
    predicted: Prediction
    prediction_holds: Optional[bool]
    table_row: TableHit
    graph: dict
    discrepancy: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "f2": self.f2, "f5": self.f5, "case": self.case.to_dict(),
            "iota": self.iota, "mu": self.mu,
            "engine_type": self.engine_type, "normalized": self.normalized,
            "predicted": self.predicted.to_dict(), "prediction_holds": self.prediction_holds,
            "table_row": asdict(self.table_row), "graph": self.graph,
            "discrepancy": self.discrepancy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify(tc: TorusCurve, cfg: EngineConfig = EngineConfig()) -> Report:
    """Resolve the curve and confront the result with predictions and tables."""
    label = dispatch_case(tc)
    g = resolve(tc.f, cfg)
    raw = type_from_resolution(tc.f, cfg)
    norm = normalize(raw)
    signature = graph_signature(g)
    pred = predict(tc)
    holds = None
    if pred.types:
        holds = False
        for t in pred.types:
            if type_to_string(normalize(t)) == type_to_string(norm) or \
                    type_signature(t, cfg) == signature:
                holds = True
                break
    row = lookup(tc, label, norm, signature, cfg)
    known = _known_discrepancy(tc)
    return Report(tc.f2.to_string(), tc.f5.to_string(), label, tc.iota, acampo_mu(g),
                  type_to_string(raw), type_to_string(norm), pred, holds, row, g.to_dict(),
                  known)


# ---------------------------------------------------------------------------
# reference curves

@dataclass(frozen=True)
class GoldenRecord:
    name: str
    f2: str
    f5: str
    type: str
    iota: int
    mu: int


@dataclass(frozen=True)
class Discrepancy:
    name: str
    printed_type: str
    engine_equivalent: str
    reason: str


@dataclass(frozen=True)
class RowDiscrepancy:
    """A table cell whose printed types no curve of that cell has."""

    table: str
    case: str
    iota: int
    printed_type: str
    engine_equivalent: str
    mu: int
    witnesses: Tuple[Tuple[str, str], ...]
    reason: str

    def signatures(self, cfg: EngineConfig = EngineConfig()) -> List[Tuple[str, int]]:
        return [_witness_signature(f2, f5, cfg) for f2, f5 in self.witnesses]


@lru_cache(maxsize=None)
def _witness_signature(f2: str, f5: str, cfg: EngineConfig) -> Tuple[str, int]:
    return graph_signature(resolve(build_from_text(f2, f5).f, cfg))


def _load_data() -> dict:
    text = resources.files("curvesing").joinpath("data/goldens.json").read_text()
    return json.loads(text)


_DATA = _load_data()
GOLDENS: Tuple[GoldenRecord, ...] = tuple(GoldenRecord(**r) for r in _DATA["records"])
TABLE_DISCREPANCY: Tuple[Discrepancy, ...] = tuple(Discrepancy(**d) for d in _DATA["discrepancies"])
ROW_DISCREPANCY: Tuple[RowDiscrepancy, ...] = tuple(
    RowDiscrepancy(**{**d, "witnesses": tuple(tuple(w) for w in d["witnesses"])})
    for d in _DATA["row_discrepancies"])


def _known_discrepancy(tc: TorusCurve) -> Optional[dict]:
    from .algebra import parse_polynomial

    for d in TABLE_DISCREPANCY:
        rec = next(r for r in GOLDENS if r.name == d.name)
        if parse_polynomial(rec.f2) == tc.f2 and parse_polynomial(rec.f5) == tc.f5:
            return asdict(d)
    return None


@dataclass
class GoldenResult:
    record: GoldenRecord
    engine_type: str
    iota: int
    mu: int
    type_ok: bool
    iota_ok: bool
    mu_ok: bool
    via_discrepancy: Optional[Discrepancy] = None
    printed_type_mu: Optional[int] = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.type_ok and self.iota_ok and self.mu_ok


def check_golden(rec: GoldenRecord, cfg: EngineConfig = EngineConfig()) -> GoldenResult:
    """Compare the engine with one reference record.

    A printed type that disagrees with the engine only passes through a
    listed discrepancy, and only when the printed type's own Milnor number
    contradicts the printed one while the engine agrees with the
    replacement.
    """
    import time

    from .classify import model_germ

    start = time.perf_counter()
    tc = build_from_text(rec.f2, rec.f5)
    g = resolve(tc.f, cfg)
    engine = classify(tc.f, cfg)
    mu = acampo_mu(g)
    printed = parse_type(rec.type)
    type_ok = is_equivalent(engine, printed, cfg)
    used = None
    printed_mu = None
    if not type_ok:
        for d in TABLE_DISCREPANCY:
            if d.name != rec.name:
                continue
            printed_mu = acampo_mu(resolve(model_germ(printed, cfg), cfg))
            if printed_mu != rec.mu and is_equivalent(engine, parse_type(d.engine_equivalent), cfg):
                type_ok = True
                used = d
    return GoldenResult(rec, type_to_string(engine), tc.iota, mu, type_ok,
                        tc.iota == rec.iota, mu == rec.mu, used, printed_mu,
                        time.perf_counter() - start)


def run_goldens(cfg: EngineConfig = EngineConfig()) -> List[GoldenResult]:
    return [check_golden(r, cfg) for r in GOLDENS]


# ---------------------------------------------------------------------------
# random corpus

_SLOPES = [(0, 1), (1, 0), (1, 1), (1, -1), (2, 1), (1, 2), (1, -2), (3, 1)]


def _linear_form(a: int, b: int) -> Polynomial:
    return Polynomial({(1, 0): a, (0, 1): b})


def _random_form(rng: random.Random, d: int, density: float = 0.5) -> Polynomial:
    terms = {}
    for k in range(d + 1):
        if rng.random() < density:
            terms[(d - k, k)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Polynomial(terms)


_PROFILES = {1: [(1,)], 2: [(1, 1), (2,)], 3: [(1, 1, 1), (2, 1), (3,)],
             4: [(1, 1, 1, 1), (2, 1, 1), (3, 1), (4,), (2, 2)],
             5: [(1, 1, 1, 1, 1), (2, 1, 1, 1), (3, 1, 1), (5,), (2, 2, 1)]}


def random_torus_pair(rng: random.Random, m5: int, conic: str) -> Tuple[Polynomial, Polynomial]:
    """Random ``(f2, f5)`` with a quintic of multiplicity ``m5`` at ``O``.

    The tangent cone of the quintic is a product of lines with small
    integer slopes; the conic's lines are often taken among them so that
    the tangential cases are well represented.
    """
    profile = rng.choice(_PROFILES[m5])
    slopes = rng.sample(_SLOPES, len(profile))
    cone = Polynomial.constant(rng.choice([1, -1, 2, 3]))
    for (a, b), e in zip(slopes, profile):
        cone = cone * _linear_form(a, b) ** e
    f5 = cone
    for d in range(m5 + 1, 6):
        f5 = f5 + _random_form(rng, d)

    def pick_line():
        if rng.random() < 0.6:
            return rng.choice(slopes)
        return rng.choice(_SLOPES)

    if conic == "smooth":
        a, b = pick_line()
        f2 = _linear_form(a, b) + _random_form(rng, 2, 0.7)
    elif conic == "two_lines":
        l1 = pick_line()
        l2 = pick_line()
        while l2 == l1:
            l2 = rng.choice(_SLOPES)
        f2 = _linear_form(*l1) * _linear_form(*l2)
    else:
        a, b = pick_line()
        f2 = _linear_form(a, b) ** 2 * rng.choice([1, -1, 2])
    return f2, f5


@dataclass
class CensusRecord:
    f2: str
    f5: str
    case: str
    iota: int
    mu: int
    engine_type: str
    prediction: Optional[dict]
    prediction_holds: Optional[bool]
    table_hit: bool
    table_case: Optional[str]
    error: Optional[str] = None
    table_explained: bool = False
    reference_mu: Optional[int] = None


def census(count: int, seed: int = 0, cfg: EngineConfig = EngineConfig(),
           strata: Optional[Sequence[Tuple[int, str]]] = None,
           check_mu: bool = False) -> List[CensusRecord]:
    """Verify ``count`` random torus curves, cycling through the strata.

    With ``check_mu`` each record also carries ``I(f_x, f_y)`` computed
    without the resolution.
    """
    rng = random.Random(seed)
    if strata is None:
        strata = [(m, c) for m in range(1, 6) for c in ("smooth", "two_lines")]
        strata += [(m, "double_line") for m in range(1, 5)]
    out: List[CensusRecord] = []
    k = 0
    attempts = 0
    while len(out) < count:
        m5, conic = strata[k % len(strata)]
        attempts += 1
        if attempts > 50 * count:
            raise RuntimeError("could not draw enough admissible curves")
        f2, f5 = random_torus_pair(rng, m5, conic)
        try:
            tc = build(f2, f5)
        except (NonReducedInput, CommonComponent, AssertionError):
            continue
        k += 1
        try:
            rep = verify(tc, cfg)
        except CurveSingError as exc:
            out.append(CensusRecord(f2.to_string(), f5.to_string(), "?", tc.iota, -1, "",
                                    None, None, False, None, f"{exc.code}: {exc}"))
            continue
        out.append(CensusRecord(rep.f2, rep.f5, rep.case.key, rep.iota, rep.mu, rep.normalized,
                                rep.predicted.to_dict() if rep.predicted.types else None,
                                rep.prediction_holds, rep.table_row.hit, rep.table_row.case,
                                table_explained=rep.table_row.explained is not None,
                                reference_mu=intersection_multiplicity(tc.f.diff_x(), tc.f.diff_y())
                                if check_mu else None))
    return out
