"""Encoded classification tables for (2,5) torus curves.

Every row is keyed by the local configuration at the origin: the
multiplicity of the quintic, the shape of its tangent cone (subcase
letter), the local shape of the conic (``-1`` smooth, ``-2`` two lines)
and the intersection number.  Families such as ``B_{k,2}oB_{5,2}`` with
``6 <= k <= 15`` are kept as templates with ``$name`` placeholders and are
expanded on demand.

Where two printed lists of the same family disagree, both spellings are
kept and the entry's ``note`` says which list it came from.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .classify import TypeExpr, normalize, parse_type, type_to_string

REDUCED = "reduced"
LINEAR = "linear"


@dataclass(frozen=True)
class TableEntry:
    table: str
    case: str
    iota: int
    text: str
    params: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()
    dagger_of: Optional[str] = None
    note: str = ""

    @property
    def group(self) -> str:
        if self.table == LINEAR:
            return "L"
        if self.case == "I":
            return "I"
        return "II-2" if self.case.endswith("-2") else "II-1"

    def instances(self) -> List[str]:
        if not self.params:
            return [self.text]
        names = [n for n, _ in self.params]
        out = []
        for values in product(*(vals for _, vals in self.params)):
            s = self.text
            for n, v in sorted(zip(names, values), key=lambda p: -len(p[0])):
                s = s.replace("$" + n, str(v))
            out.append(s)
        return out


@dataclass
class Tables:
    entries: Tuple[TableEntry, ...]
    parsed: Dict[str, TypeExpr] = field(default_factory=dict)

    def rows(self) -> Dict[str, List[str]]:
        """``"<group>/<iota>"`` to the expanded type strings of that row."""
        out: Dict[str, List[str]] = {}
        for e in self.entries:
            out.setdefault(f"{e.group}/{e.iota}", []).extend(e.instances())
        return out

    def daggers(self) -> Dict[str, List[str]]:
        out: Dict[str, List[str]] = {}
        for e in self.entries:
            if e.dagger_of:
                out.setdefault(e.dagger_of, []).extend(e.instances())
        return out

    def select(self, table: str, case: Optional[str] = None, iota: Optional[int] = None):
        for e in self.entries:
            if e.table != table:
                continue
            if case is not None and e.case != case:
                continue
            if iota is not None and e.iota != iota:
                continue
            yield e


def _r(case, iota, text, dagger_of=None, note="", **params):
    return TableEntry(REDUCED, case, iota, text,
                      tuple((k, tuple(v)) for k, v in params.items()), dagger_of, note)


def _l(case, iota, text, dagger_of=None, note="", **params):
    return TableEntry(LINEAR, case, iota, text,
                      tuple((k, tuple(v)) for k, v in params.items()), dagger_of, note)


def _line_pairs(lo: int, hi: int, total: int) -> List[Tuple[int, int]]:
    return [(a, total - a) for a in range(lo, hi + 1) if lo <= total - a <= hi]


def _reduced_rows() -> List[TableEntry]:
    R: List[TableEntry] = []
    add = R.append

    for i in range(1, 11):
        add(_r("I", i, f"B_{{{5 * i},2}}"))

    # m5 = 2, two tangent lines
    for i in range(2, 11):
        add(_r("II-a-1", i, f"B_{{{5 * i - 7},2}}oB_{{2,3}}"))
    for i in range(4, 11):
        for a, b in _line_pairs(2, 5, i):
            add(_r("II-a-2", i, f"B_{{{5 * b - 2},2}}oB_{{2,{5 * a - 2}}}"))

    # m5 = 2, double tangent line, smooth conic
    c = "II-b-1"
    add(_r(c, 2, "B_{5,4}"))
    add(_r(c, 3, "(B_{3,2}^2)^{B_{3,2}}"))
    m = "(B_{4,2}^2)^{2B_{2,2}}"
    add(_r(c, 4, m))
    add(_r(c, 4, "B_{10,4}", m))
    add(_r(c, 4, "B_{$k,2}oB_{2,5}", m, k=range(6, 16)))
    add(_r(c, 4, "B_{$k,2}oB_{5,2}", m, "spelling of the per-intersection list", k=range(6, 16)))
    m = "(B_{4,2}^2)^{B_{7,2}+B_{2,2}}"
    add(_r(c, 5, m))
    add(_r(c, 5, "(B_{5,2}^2)^{B_{5,2}}", m))
    m = "(B_{4,2}^2)^{B_{12,2}+B_{2,2}}"
    add(_r(c, 6, m))
    for t in ("(B_{6,2}^2)^{2B_{3,2}}", "(B_{7,2}^2)^{B_{2,2}}", "B_{15,4}"):
        add(_r(c, 6, t, m))
    m = "(B_{4,2}^2)^{B_{17,2}+B_{2,2}}"
    add(_r(c, 7, m))
    for t in ("(B_{6,2}^2)^{B_{8,2}+B_{3,2}}", "(B_{7,2}^2)^{B_{7,2}}"):
        add(_r(c, 7, t, m))
    m = "(B_{4,2}^2)^{B_{22,2}+B_{2,2}}"
    add(_r(c, 8, m))
    for t in ("(B_{6,2}^2)^{B_{13,2}+B_{3,2}}", "(B_{8,2}^2)^{2B_{4,2}}",
              "(B_{9,2}^2)^{B_{5,2}}", "B_{20,4}"):
        add(_r(c, 8, t, m))
    add(_r(c, 8, "B_{$k,2}oB_{10,2}", m, k=(11, 12)))
    m = "(B_{4,2}^2)^{B_{27,2}+B_{2,2}}"
    add(_r(c, 9, m))
    for t in ("(B_{6,2}^2)^{B_{18,2}+B_{3,2}}", "(B_{8,2}^2)^{B_{9,2}+B_{4,2}}",
              "(B_{9,2}^2)^{B_{10,2}}"):
        add(_r(c, 9, t, m))
    m = "(B_{4,2}^2)^{B_{32,2}+B_{2,2}}"
    add(_r(c, 10, m))
    for t in ("(B_{6,2}^2)^{B_{23,2}+B_{3,2}}", "(B_{10,2}^2)^{2B_{5,2}}",
              "(B_{11,2}^2)^{B_{6,2}}", "(B_{12,2}^2)^{2B_{1,2}}", "B_{25,4}"):
        add(_r(c, 10, t, m))
    add(_r(c, 10, "(B_{8,2}^2)^{B_{14,2}+B_{4,2}}", m, "per-intersection list"))
    add(_r(c, 10, "(B_{8,2}^2)^{B_{13,2}+B_{4,2}}", m, "degeneration list spelling"))

    # m5 = 2, double tangent line, two lines
    c = "II-b-2"
    m = "(B_{3,2}^2)^{B_{8,2}}"
    add(_r(c, 4, m, note="quintic B_{3,2}"))
    add(_r(c, 4, "(B_{4,2}^2)^{2B_{2,2}}", m))
    add(_r(c, 4, "B_{10,4}", m))
    add(_r(c, 4, "B_{$k,2}oB_{2,5}", m, k=range(6, 16)))
    add(_r(c, 4, "B_{$k,2}oB_{5,2}", m, "spelling of the per-intersection list", k=range(6, 16)))
    add(_r(c, 5, "(B_{3,2}^2)^{B_{13,2}}", note="quintic B_{3,2}"))
    m = "(B_{4,2}^2)^{2B_{7,2}}"
    add(_r(c, 6, m, note="quintic B_{4,2}"))
    for t in ("(B_{5,2}^2)^{B_{10,2}}", "(B_{6,2}^2)^{2B_{3,2}}", "(B_{7,2}^2)^{B_{2,2}}",
              "B_{15,4}"):
        add(_r(c, 6, t, m))
    m = "B_{16,2}o(B_{2,1}^2)^{B_{7,2}}"
    add(_r(c, 7, m, note="quintic B_{4,2}"))
    add(_r(c, 7, "(B_{5,2}^2)^{B_{15,2}}", m))

    # m5 = 3
    for sub in "abc":
        add(_r(f"III-{sub}-1", 3, "B_{6,5}", note="conic transverse to the tangent cone"))
    for i in range(4, 11):
        add(_r("III-a-1", i, f"B_{{{5 * i - 14},2}}oB_{{4,3}}"))
    for i in range(6, 11):
        for a, b in _line_pairs(3, 5, i):
            add(_r("III-a-2", i, f"B_{{{5 * b - 9},2}}o(B_{{1,1}}^2)^{{B_{{4,2}}}}oB_{{2,{5 * a - 9}}}"))

    c = "III-b-1"
    for i in range(4, 11):
        add(_r(c, i, f"B_{{3,4}}oB_{{2,{5 * i - 14}}}", note="tangent to the simple line"))
    add(_r(c, 4, "B_{8,5}", note="tangent to the double line"))
    m = "B_{10,5}"
    add(_r(c, 5, m, note="tangent to the double line"))
    add(_r(c, 5, "B_{$k,2}oB_{6,3}", m, k=range(5, 13)))
    add(_r(c, 5, "B_{$k,3}oB_{4,2}", m, k=range(7, 12)))
    add(_r(c, 5, "B_{3,1}oB_{5,2}oB_{4,2}", m))
    add(_r(c, 5, "B_{3,1}oB_{7,2}oB_{4,2}", m))
    add(_r(c, 5, "B_{$k,2}oB_{3,1}oB_{4,2}", m, k=(7, 8, 9)))
    pairs = [(k1, k2) for k2 in range(5, 8) for k1 in range(k2 - 4, 14 - k2)] + [(4, 8), (5, 9)]
    for k1, k2 in pairs:
        add(_r(c, 5, f"B_{{{k2 + 4},2}}oB_{{2,1}}o(B_{{2,1}}^2)^{{B_{{{k1},2}}}}", m))
    tower = "B_{$a,2}oB_{2,1}o(B_{2,1}^2)^{B_{$k,2}}"
    m = "B_{9,2}oB_{6,3}"
    add(_r(c, 6, m, note="tangent to the double line"))
    add(_r(c, 6, "(B_{5,2}^2)^{B_{1,2}}oB_{2,1}", m))
    add(_r(c, 6, tower, m, a=(9,), k=range(1, 9)))
    m = "B_{14,2}oB_{6,3}"
    add(_r(c, 7, m, note="tangent to the double line"))
    add(_r(c, 7, "(B_{6,2}^2)^{2B_{1,2}}oB_{2,1}", m, "per-intersection list"))
    add(_r(c, 7, "B_{13,4}oB_{2,1}", m, "per-intersection list"))
    add(_r(c, 7, "(B_{5,2}^2)^{B_{1,2}}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 7, "B_{13,2}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 7, tower, m, a=(14,), k=range(1, 8)))
    m = "B_{19,2}oB_{6,3}"
    add(_r(c, 8, m, note="tangent to the double line"))
    add(_r(c, 8, "(B_{6,2}^2)^{B_{6,2}+B_{1,2}}oB_{2,1}", m, "per-intersection list"))
    add(_r(c, 8, "(B_{7,2}^2)^{B_{3,2}}oB_{2,1}", m, "per-intersection list"))
    add(_r(c, 8, "B_{12,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 8, "(B_{7,2}^2)^{B_{4,2}}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 8, tower, m, a=(19,), k=range(1, 7)))
    m = "B_{24,2}oB_{6,3}"
    add(_r(c, 9, m, note="tangent to the double line"))
    for t in ("(B_{6,2}^2)^{B_{11,2}+B_{1,2}}oB_{2,1}", "(B_{8,2}^2)^{2B_{2,2}}oB_{2,1}",
              "B_{18,4}oB_{2,1}", "B_{11,2}oB_{9,2}oB_{2,1}"):
        add(_r(c, 9, t, m, "per-intersection list"))
    add(_r(c, 9, "B_{17,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 9, "(B_{8,2}^2)^{2B_{2,2}}oB_{1,2}", m, "degeneration list spelling"))
    add(_r(c, 9, tower, m, a=(24,), k=range(1, 6)))
    m = "B_{29,2}oB_{6,3}"
    add(_r(c, 10, m, note="tangent to the double line"))
    for t in ("(B_{6,2}^2)^{B_{16,2}+B_{1,2}}oB_{2,1}", "(B_{8,2}^2)^{B_{7,2}+B_{2,2}}oB_{2,1}",
              "(B_{9,2}^2)^{B_{5,2}}oB_{2,1}"):
        add(_r(c, 10, t, m, "per-intersection list"))
    add(_r(c, 10, "B_{22,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 10, "B_{22,2}o(B_{4,1}^2)^{B_{2,2}}oB_{2,1}", m, "degeneration list spelling"))
    add(_r(c, 10, tower, m, a=(29,), k=(1, 2, 3, 5)))

    c = "III-b-2"
    for i, tail in ((6, 6), (7, 11), (8, 16)):
        m = f"(B_{{3,2}}^2)^{{B_{{4,2}}}}oB_{{2,{tail}}}"
        add(_r(c, i, m))
        add(_r(c, i, f"B_{{8,4}}oB_{{2,{tail}}}", m))
        hi = {6: 12, 7: 10, 8: 10}[i]
        add(_r(c, i, f"B_{{$k,2}}oB_{{4,2}}oB_{{2,{tail}}}", m, k=range(5, hi + 1)))
    for i, tail in ((7, 6), (8, 11), (9, 16)):
        add(_r(c, i, f"(B_{{3,2}}^2)^{{B_{{9,2}}}}oB_{{2,{tail}}}"))
    for i, tail in ((8, 6), (9, 11), (10, 16)):
        m = f"(B_{{4,2}}^2)^{{2B_{{5,2}}}}oB_{{2,{tail}}}"
        add(_r(c, i, m))
        for t in ("(B_{5,2}^2)^{B_{6,2}}", "(B_{6,2}^2)^{2B_{1,2}}", "B_{13,4}"):
            add(_r(c, i, f"{t}oB_{{2,{tail}}}", m))

    c = "III-c-1"
    add(_r(c, 4, "B_{8,5}"))
    add(_r(c, 5, "B_{10,5}"))
    add(_r(c, 5, "B_{$k,2}oB_{6,3}", "B_{10,5}", k=range(5, 13)))
    for i in range(6, 11):
        add(_r(c, i, f"B_{{{2 * i},5}}"))
        add(_r(c, i, f"B_{{{5 * i - 21},2}}oB_{{6,3}}"))
    for i in range(7, 11):
        add(_r(c, i, f"B_{{{5 * i - 28},2}}oB_{{8,3}}"))
    for i in range(9, 11):
        add(_r(c, i, f"B_{{{5 * i - 35},2}}oB_{{10,3}}"))

    c = "III-c-2"
    m = "(B_{4,3}^2)^{B_{6,2}}"
    add(_r(c, 6, m))
    for t in ("B_{4,2}o(B_{3,2}^2)^{B_{2,2}}", "B_{10,6}", "B_{6,3}oB_{5,3}"):
        add(_r(c, 6, t, m))
    add(_r(c, 6, "B_{3,6}oB_{5,3}", m, "linear-table spelling"))
    add(_r(c, 7, "(B_{4,3}^2)^{B_{11,2}}"))
    add(_r(c, 8, "B_{9,2}o(B_{3,2}^2)^{B_{7,2}}"))
    add(_r(c, 8, "(B_{5,3}^2)^{B_{10,2}}"))

    # m5 = 4
    for sub in "abcde":
        add(_r(f"IV-{sub}-1", 4, "B_{8,5}", note="conic transverse to the tangent cone"))
    c = "IV-a-1"
    add(_r(c, 5, "B_{10,5}"))
    add(_r(c, 5, "B_{$k,2}oB_{6,3}", "B_{10,5}", k=range(5, 11)))
    for i in range(6, 11):
        add(_r(c, i, f"B_{{{5 * i - 21},2}}oB_{{6,3}}"))
    for i in range(8, 11):
        for a, b in _line_pairs(4, 5, i):
            add(_r("IV-a-2", i, f"B_{{{5 * a - 16},2}}o(B_{{2,2}}^2)^{{2B_{{2,2}}}}oB_{{2,{5 * b - 16}}}"))

    c = "IV-b-1"
    add(_r(c, 5, "B_{5,10}", note="tangent to a simple line"))
    add(_r(c, 5, "B_{3,6}oB_{2,$k}", "B_{5,10}", k=range(5, 11)))
    for i in range(6, 11):
        add(_r(c, i, f"B_{{3,6}}oB_{{2,{5 * i - 21}}}", note="tangent to a simple line"))
    for i in (5, 6):
        add(_r(c, i, f"B_{{{2 * i},5}}", note="tangent to the double line"))
    for i in range(7, 11):
        add(_r(c, i, f"B_{{{5 * i - 28},2}}oB_{{8,3}}", note="tangent to the double line"))

    c = "IV-b-2"
    m = "B_{6,4}o(B_{1,1}^2)^{B_{2,2}}oB_{2,4}"
    add(_r(c, 8, m))
    add(_r(c, 8, "B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,4}", m))
    add(_r(c, 9, "(B_{3,2}^2)^{B_{5,2}}o(B_{1,1}^2)^{B_{2,2}}oB_{2,4}"))
    m = "B_{6,4}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}"
    add(_r(c, 9, m))
    add(_r(c, 9, "B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}", m, "per-intersection list"))
    add(_r(c, 9, "B_{4,3}oB_{3,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}", m, "degeneration list spelling"))
    m = "B_{6,4}o(B_{1,1}^2)^{B_{7,2}}oB_{2,4}"
    add(_r(c, 9, m, note="degeneration list only"))
    add(_r(c, 9, "B_{4,3}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,4}", m, "degeneration list spelling"))
    add(_r(c, 9, "B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,4}", m, "per-intersection spelling"))
    add(_r(c, 10, "(B_{3,2}^2)^{B_{5,2}}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}"))
    m = "B_{6,4}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}"
    add(_r(c, 10, m))
    add(_r(c, 10, "B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}", m, "per-intersection list"))
    add(_r(c, 10, "B_{4,3}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}", m, "degeneration list spelling"))

    c = "IV-c-1"
    add(_r(c, 5, "B_{5,10}", note="tangent to the simple line"))
    add(_r(c, 5, "B_{3,6}oB_{2,$k}", "B_{5,10}", k=range(5, 11)))
    for i in range(6, 11):
        add(_r(c, i, f"B_{{3,6}}oB_{{2,{5 * i - 21}}}", note="tangent to the simple line"))
    for i in range(5, 9):
        add(_r(c, i, f"B_{{{2 * i},5}}", note="tangent to the triple line"))
    for i in (9, 10):
        add(_r(c, i, f"B_{{{5 * i - 35},2}}oB_{{10,3}}", note="tangent to the triple line"))

    c = "IV-c-2"
    for i, tail in ((8, 4), (9, 9)):
        m = f"B_{{8,6}}oB_{{2,{tail}}}"
        add(_r(c, i, m))
        add(_r(c, i, f"B_{{5,3}}oB_{{4,3}}oB_{{2,{tail}}}", m, "per-intersection list"))
        add(_r(c, i, f"B_{{5,4}}oB_{{4,3}}oB_{{2,{tail}}}", m, "degeneration list spelling"))
    add(_r(c, 9, "(B_{4,3}^2)^{B_{5,2}}oB_{2,4}"))
    add(_r(c, 10, "(B_{4,3}^2)^{B_{5,2}}oB_{2,9}"))

    for i in range(5, 11):
        add(_r("IV-d-1", i, f"B_{{{2 * i},5}}"))
    add(_r("IV-d-2", 8, "B_{10,8}"))
    add(_r("IV-d-2", 8, "B_{2,1}oB_{4,3}oB_{5,4}"))
    add(_r("IV-d-2", 9, "(B_{5,4}^2)^{B_{5,2}}"))

    c = "IV-e-1"
    for i in (5, 6):
        add(_r(c, i, f"B_{{{2 * i},5}}"))
    for i in range(7, 11):
        add(_r(c, i, f"B_{{{5 * i - 28},2}}oB_{{8,3}}"))

    c = "IV-e-2"
    m = "B_{6,4}oB_{4,6}"
    add(_r(c, 8, m))
    add(_r(c, 8, "B_{4,2}oB_{3,2}oB_{4,6}", m, "per-intersection list"))
    add(_r(c, 8, "B_{4,2}oB_{3,2}oB_{2,6}", m, "degeneration list spelling"))
    add(_r(c, 8, "B_{4,2}oB_{3,2}oB_{2,3}oB_{2,4}", m))
    m = "B_{6,4}o(B_{2,3}^2)^{B_{5,2}}"
    add(_r(c, 9, m))
    add(_r(c, 9, "B_{4,2}oB_{3,2}o(B_{2,3}^2)^{B_{5,2}}", m))
    add(_r(c, 10, "(B_{3,2}^2)^{B_{5,2}}o(B_{2,3}^2)^{B_{5,2}}"))

    # m5 = 5
    for i in range(5, 11):
        add(_r("V-1", i, f"B_{{{2 * i},5}}"))
    add(_r("V-2", 10, "B_{10,10}"))
    return R


def _linear_rows() -> List[TableEntry]:
    R: List[TableEntry] = []
    add = R.append
    for i in range(2, 11, 2):
        add(_l("L-I", i, f"B_{{{5 * i},2}}"))
    for i in (4, 6, 8, 10):
        add(_l("L-II-a", i, f"B_{{{5 * i - 12},2}}oB_{{2,8}}"))

    c = "L-II-b"
    m = "(B_{3,2}^2)^{B_{8,2}}"
    add(_l(c, 4, m, note="quintic B_{3,2}"))
    add(_l(c, 4, "B_{10,4}", m))
    add(_l(c, 4, "(B_{4,2}^2)^{2B_{2,2}}", m))
    add(_l(c, 4, "B_{$k,2}oB_{5,2}", m, k=range(6, 16)))
    add(_l(c, 4, "B_{$k,2}oB_{2,5}", m, "per-intersection spelling", k=range(6, 16)))
    m = "(B_{3,2}^2)^{B_{18,2}}"
    add(_l(c, 6, m, note="quintic B_{3,2}"))
    for t in ("(B_{5,2}^2)^{B_{20,2}}", "(B_{6,2}^2)^{2B_{8,2}}", "(B_{7,2}^2)^{B_{12,2}}",
              "(B_{8,2}^2)^{2B_{4,2}}", "(B_{9,2}^2)^{B_{4,2}}", "B_{20,5}"):
        add(_l(c, 8, t, m))
    add(_l(c, 8, "B_{$k,2}oB_{10,3}", m, k=range(1, 14)))
    add(_l(c, 8, "(B_{4,2}^2)^{2B_{12,2}}", note="quintic B_{4,2}"))
    m = "(B_{4,2}^2)^{B_{22,2}+B_{12,2}}"
    add(_l(c, 10, m, note="quintic B_{4,2}"))
    add(_l(c, 10, "(B_{5,2}^2)^{B_{30,2}}", m))

    c = "L-III-a"
    for i, t in ((6, "(B_{3,3}^2)^{3B_{4,2}}"), (8, "B_{16,2}o(B_{2,2}^2)^{2B_{4,2}}"),
                 (10, "B_{26,2}o(B_{2,2}^2)^{2B_{4,2}}")):
        add(_l(c, i, t))
    c = "L-III-b"
    for i, lead, hi in ((6, "B_{6,2}", 10), (8, "B_{16,2}", 10), (10, "B_{26,2}", 9)):
        m = f"{lead}o(B_{{2,3}}^2)^{{B_{{4,2}}}}"
        add(_l(c, i, m, note="double line of the tangent cone is the line"))
        if i == 6:
            add(_l(c, i, "B_{8,4}oB_{2,6}", m))
            add(_l(c, i, "B_{$k,2}oB_{4,2}oB_{2,6}", m, k=range(5, 11)))
        else:
            add(_l(c, i, f"{lead}oB_{{4,8}}", m))
            add(_l(c, i, f"{lead}oB_{{2,4}}oB_{{2,$k}}", m, k=range(5, hi + 1)))
    add(_l(c, 8, "(B_{3,2}^2)^{B_{14,2}}oB_{2,6}", note="simple line of the tangent cone is the line"))
    m = "(B_{4,2}^2)^{2B_{10,2}}oB_{2,6}"
    add(_l(c, 10, m, note="simple line of the tangent cone is the line"))
    for t in ("(B_{5,2}^2)^{B_{16,2}}oB_{2,6}", "(B_{6,2}^2)^{2B_{6,2}}oB_{2,6}",
              "(B_{8,2}^2)^{2B_{2,2}}oB_{2,6}", "B_{18,2}oB_{2,6}", "B_{19,2}oB_{2,6}"):
        add(_l(c, 10, t, m))
    c = "L-III-c"
    m = "(B_{4,3}^2)^{B_{6,2}}"
    add(_l(c, 6, m))
    for t in ("B_{4,2}o(B_{3,2}^2)^{B_{2,2}}", "B_{10,6}", "B_{3,6}oB_{5,3}"):
        add(_l(c, 6, t, m))
    add(_l(c, 6, "B_{6,3}oB_{5,3}", m, "degeneration list spelling"))
    add(_l(c, 8, "(B_{4,3}^2)^{B_{16,2}}"))
    m = "B_{4,2}o(B_{3,2}^2)^{B_{12,2}}"
    add(_l(c, 10, m))
    add(_l(c, 10, "(B_{5,3}^2)^{B_{20,2}}", m))

    c = "L-IV-a"
    add(_l(c, 8, "(B_{4,4}^2)^{4B_{2,2}}"))
    add(_l(c, 10, "B_{14,2}o(B_{3,3}^2)^{3B_{2,2}}"))
    c = "L-IV-b"
    m = "(B_{2,2}^2)^{2B_{2,2}}oB_{4,6}"
    add(_l(c, 8, m))
    add(_l(c, 8, "(B_{2,2}^2)^{2B_{2,2}}oB_{2,3}oB_{2,4}", m))
    add(_l(c, 8, "B_{2,4}oB_{2,3}o(B_{2,2}^2)^{2B_{2,2}}oB_{2,3}oB_{2,4}", m,
           "degeneration list spelling"))
    m = "B_{14,2}o(B_{1,1}^2)^{B_{2,2}}oB_{4,6}"
    add(_l(c, 10, m))
    add(_l(c, 10, "B_{14,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,3}oB_{2,4}", m))
    add(_l(c, 10, "(B_{3,2}^2)^{B_{10,2}}o(B_{2,2}^2)^{2B_{2,2}}oB_{2,4}"))
    c = "L-IV-c"
    for i, lead in ((8, "B_{4,2}"), (10, "B_{14,2}")):
        m = f"{lead}oB_{{6,8}}"
        add(_l(c, i, m))
        add(_l(c, i, f"{lead}oB_{{3,4}}oB_{{2,3}}oB_{{1,2}}", m))
    add(_l(c, 10, "(B_{4,3}^2)^{B_{10,2}}oB_{2,4}"))
    c = "L-IV-d"
    add(_l(c, 8, "B_{8,10}"))
    add(_l(c, 8, "B_{4,5}oB_{3,4}oB_{1,2}", "B_{8,10}"))
    add(_l(c, 10, "(B_{4,5}^2)^{B_{10,2}}"))
    c = "L-IV-e"
    m = "(B_{2,2}^4)^{2B_{10,2}}"
    add(_l(c, 8, m))
    add(_l(c, 8, "(B_{1,1}^4)^{B_{10,2}}oB_{4,6}", m))
    add(_l(c, 8, "(B_{1,1}^4)^{B_{10,2}}oB_{2,3}oB_{2,4}", m))
    m = "(B_{3,2}^2)^{B_{10,2}}oB_{4,6}"
    add(_l(c, 10, m))
    add(_l(c, 10, "(B_{3,2}^2)^{B_{10,2}}oB_{2,3}oB_{2,4}", m))
    return R


@lru_cache(maxsize=1)
def theorem_tables() -> Tables:
    """All rows, each expanded instance parsed once."""
    entries = tuple(_reduced_rows() + _linear_rows())
    parsed: Dict[str, TypeExpr] = {}
    for e in entries:
        for s in e.instances():
            try:
                parsed[s] = parse_type(s)
            except Exception as exc:
                raise ValueError(f"table entry {e.case}/{e.iota} {s!r} does not parse: {exc}") from exc
    return Tables(entries, parsed)


def candidates(tables: Tables, table: str, case: str, iota: int) -> List[Tuple[TableEntry, str]]:
    """Search order: the exact cell, the same intersection number, the whole table."""
    seen = set()
    out = []
    tiers = (tables.select(table, case, iota), tables.select(table, None, iota),
             tables.select(table))
    for tier in tiers:
        for e in tier:
            for s in e.instances():
                if (e, s) not in seen:
                    seen.add((e, s))
                    out.append((e, s))
    return out


def normalized_text(t: TypeExpr) -> str:
    return type_to_string(normalize(t))
