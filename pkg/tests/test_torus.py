import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvesing.algebra import Polynomial
from curvesing.algebra import parse_polynomial as P
from curvesing.classify import is_equivalent, model_germ, parse_type
from curvesing.errors import CommonComponent, NonReducedInput
from curvesing.resolve import acampo_mu, intersection_multiplicity, resolve
from curvesing.tables import LINEAR, REDUCED, theorem_tables
from curvesing.torus import (GOLDENS, ROW_DISCREPANCY, TABLE_DISCREPANCY, build, build_from_text,
                             census, check_golden, dispatch_case, predict, random_torus_pair,
                             verify)


def test_build_measures_intersection():
    tc = build_from_text("y+x^2", "y^5+y+x^2")
    assert (tc.iota, tc.m2, tc.m5, tc.linear) == (10, 1, 1, False)
    assert tc.f == P("(y^5+y+x^2)^2+(y+x^2)^5")


@pytest.mark.parametrize("f2,f5,exc", [
    ("y+x^2", "y+x^2", CommonComponent),
    ("y", "y^2*x+y^3", CommonComponent),
    ("x^3", "y", ValueError),
    ("y+1", "y", ValueError),
    ("y^2", "x^3*y^2", CommonComponent),
])
def test_build_rejects(f2, f5, exc):
    with pytest.raises(exc):
        build_from_text(f2, f5)


def test_non_reduced_rejected():
    with pytest.raises(NonReducedInput):
        build_from_text("-y^2", "y^5+x^3")


@pytest.mark.parametrize("f2,f5,key", [
    ("y+x^2", "y^5+y+x^2", "I"),
    ("y-x^2", "y^5+x*y-x^3", "II-a-1"),
    ("x*y", "y^5+y*x+x^5", "II-a-2"),
    ("y^2+x*y", "y^2+x^5", "II-b-2"),
    ("x*y", "y^3+x^5", "III-c-2"),
    ("x*y", "y^5+y^2*x^2+x^5", "IV-e-2"),
    ("y^2", "x*y^4-4*y^4-4*x*y^3+3*x^2*y^2+x^4*y+2*x^3*y+x^5-x^4", "L-IV-e"),
])
def test_dispatch(f2, f5, key):
    assert dispatch_case(build_from_text(f2, f5)).key == key


def test_predictions():
    p = predict(build_from_text("y+x^2", "y^5+y+x^2"))
    assert p.rule == "smooth_quintic" and p.texts == ["B_{50,2}"]
    assert p.unconditional_singleton
    p = predict(build_from_text("x*y", "y^5+y*x+x^5"))
    assert p.rule == "ordinary_quintic_two_lines" and p.texts == ["B_{23,2}oB_{2,23}"]
    assert not predict(build_from_text("y^2", "y^3+x^5")).types


def test_tables_parse():
    tables = theorem_tables()
    rows = tables.rows()
    assert any(k.startswith("I/") for k in rows)
    assert {e.table for e in tables.entries} == {REDUCED, LINEAR}
    assert all(s in tables.parsed for e in tables.entries for s in e.instances())


@pytest.mark.parametrize("rec", GOLDENS, ids=[r.name for r in GOLDENS])
def test_golden(rec):
    res = check_golden(rec)
    assert res.iota_ok and res.mu_ok and res.type_ok
    assert res.seconds < 10
    if res.via_discrepancy:
        # the printed type is contradicted by its own Milnor number
        assert res.printed_type_mu != rec.mu


def test_golden_discrepancies_are_listed():
    assert {d.name for d in TABLE_DISCREPANCY} <= {r.name for r in GOLDENS}
    for d in TABLE_DISCREPANCY:
        assert not is_equivalent(parse_type(d.printed_type), parse_type(d.engine_equivalent))


@pytest.mark.parametrize("d", ROW_DISCREPANCY, ids=[f"{d.case}/{d.iota}" for d in ROW_DISCREPANCY])
def test_row_discrepancy_evidence(d):
    for f2, f5 in d.witnesses:
        tc = build_from_text(f2, f5)
        assert dispatch_case(tc).key == d.case and tc.iota == d.iota
        rep = verify(tc)
        assert rep.mu == d.mu == intersection_multiplicity(tc.f.diff_x(), tc.f.diff_y())
        assert rep.table_row.explained == d.reason
        assert not rep.table_row.hit


def test_row_discrepancy_printed_types_are_impossible():
    a, b = ROW_DISCREPANCY[0], ROW_DISCREPANCY[1]
    assert acampo_mu(resolve(model_germ(parse_type(a.printed_type)))) == 53
    # above the Bezout bound (10 - 1)^2 for a curve of degree 10
    assert acampo_mu(resolve(model_germ(parse_type(b.printed_type)))) > 81


def test_small_census():
    recs = census(28, seed=7, check_mu=True)
    assert len(recs) == 28
    assert {r.case.split("-")[0] for r in recs} >= {"I", "II", "III", "IV", "V", "L"}
    for r in recs:
        assert r.error is None
        assert r.prediction_holds is not False
        assert r.table_hit or r.table_explained
        assert r.mu == r.reference_mu


def test_census_is_seeded():
    a = census(6, seed=3)
    b = census(6, seed=3)
    assert [(r.f2, r.f5) for r in a] == [(r.f2, r.f5) for r in b]


def form(degree):
    mons = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i) if i + j >= 1]
    return st.dictionaries(st.sampled_from(mons), st.integers(-3, 3).filter(bool), min_size=1,
                           max_size=6).map(lambda d: Polynomial({k: Fraction(v) for k, v in d.items()}))


@settings(max_examples=150, deadline=None)
@given(form(2), form(5))
def test_bezout_invariant(f2, f5):
    try:
        tc = build(f2, f5)
    except (CommonComponent, NonReducedInput):
        return
    assert 1 <= tc.iota <= 10
    assert tc.m2 * tc.m5 <= tc.iota


def test_bezout_invariant_on_structured_pairs():
    rng = random.Random(11)
    for m5 in range(1, 6):
        for conic in ("smooth", "two_lines", "double_line"):
            for _ in range(8):
                f2, f5 = random_torus_pair(rng, m5, conic)
                try:
                    tc = build(f2, f5)
                except (CommonComponent, NonReducedInput):
                    continue
                assert 1 <= tc.iota <= 10 and tc.m2 * tc.m5 <= tc.iota
