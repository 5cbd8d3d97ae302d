"""Command-line interface.

Exit codes: 0 on success, 1 when the analysis fails, 2 on a usage error.
The configuration file named by ``CURVESING_CONFIG`` holds ``key=value``
lines for the fields of :class:`Config`.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, fields
from typing import List, Optional, Sequence

from .algebra import parse_polynomial
from .classify import classify, normalize, type_to_string
from .errors import CurveSingError, PolynomialSyntaxError
from .newton import newton_boundary
from .resolve import EngineConfig, acampo_mu, intersection_multiplicity, resolve
from .torus import build_from_text, census, run_goldens, verify

CONFIG_ENV = "CURVESING_CONFIG"
FORMATS = ("text", "json", "dot")


@dataclass(frozen=True)
class Config:
    tower_depth_limit: int = 2
    max_resolution_depth: int = 16
    output_format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.tower_depth_limit < 1 or self.max_resolution_depth < 1:
            raise ValueError("limits must be positive")
        if self.output_format not in FORMATS:
            raise ValueError(f"output_format must be one of {', '.join(FORMATS)}")

    @property
    def engine(self) -> EngineConfig:
        return EngineConfig(max_depth=self.max_resolution_depth,
                            tower_depth_limit=self.tower_depth_limit)


class UsageError(Exception):
    pass


def load_config(path: Optional[str]) -> Config:
    if not path:
        return Config()
    kinds = {f.name: f.type for f in fields(Config)}
    values = {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}")
    for n, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in kinds:
            raise UsageError(f"{path}:{n}: expected one of {', '.join(kinds)} as key=value")
        if kinds[key] == "int":
            try:
                values[key] = int(value)
            except ValueError:
                raise UsageError(f"{path}:{n}: {key} must be an integer")
        else:
            values[key] = value
    try:
        return Config(**values)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="curvesing", description="Resolution and classification of plane curve germs.")
    p.add_argument("--json-errors", action="store_true",
                   help="report errors as a JSON object on stderr")
    p.add_argument("--format", choices=FORMATS, help="output format (overrides the config)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("newton", help="Newton boundary of a germ")
    s.add_argument("poly")
    s = sub.add_parser("resolve", help="dual graph of the resolution")
    s.add_argument("poly")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true")
    g.add_argument("--json", action="store_true")
    s = sub.add_parser("classify", help="topological type")
    s.add_argument("poly")
    s = sub.add_parser("milnor", help="Milnor number")
    s.add_argument("poly")
    s = sub.add_parser("intersect", help="intersection multiplicity at the origin")
    s.add_argument("f")
    s.add_argument("g")

    t = sub.add_parser("torus", help="(2,5) torus curves")
    tsub = t.add_subparsers(dest="torus_command", required=True, parser_class=_Parser)
    s = tsub.add_parser("verify", help="analyse f5^2 + f2^5 at the origin")
    s.add_argument("--f2", required=True)
    s.add_argument("--f5", required=True)
    s.add_argument("--json", action="store_true")
    s = tsub.add_parser("census", help="verify random torus curves")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--seed", type=int)
    s.add_argument("--json", action="store_true")

    sub.add_parser("goldens", help="run the reference curve suite")
    return p


def _poly(text: str, cfg: Config):
    from .algebra import rationals

    return parse_polynomial(text, rationals(cfg.tower_depth_limit))


def _fmt(args, cfg: Config) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "dot", False):
        return "dot"
    return args.format or cfg.output_format


def _newton(args, cfg: Config, out) -> int:
    f = _poly(args.poly, cfg)
    poly = newton_boundary(f)
    rows = [{"P": list(face.weight), "d": face.d_value,
             "endpoints": [list(p) for p in face.endpoints],
             "face_polynomial": face.reduced.to_string(),
             "root_multiplicities": face.multiplicities}
            for face in poly.faces]
    if _fmt(args, cfg) == "json":
        print(json.dumps({"convenient": poly.convenient, "faces": rows}, indent=2), file=out)
        return 0
    for r in rows:
        (i1, j1), (i2, j2) = r["endpoints"]
        mults = ",".join(map(str, r["root_multiplicities"]))
        print(f"P=({r['P'][0]},{r['P'][1]}) d={r['d']} from ({i1},{j1}) to ({i2},{j2}) "
              f"face={r['face_polynomial']} roots={mults}", file=out)
    if not poly.convenient:
        print("not convenient", file=out)
    return 0


def _resolve(args, cfg: Config, out) -> int:
    g = resolve(_poly(args.poly, cfg), cfg.engine)
    fmt = _fmt(args, cfg)
    if fmt == "dot":
        print(g.to_dot(), file=out)
    elif fmt == "json":
        print(g.to_json(), file=out)
    else:
        for n in sorted(g.nodes, key=lambda n: (n.stage, n.weight, n.id)):
            near = ",".join(str(m) for m in g.neighbors(n.id))
            print(f"E{n.id} stage={n.stage} P=({n.weight[0]},{n.weight[1]}) "
                  f"m={n.multiplicity} self={n.self_intersection} "
                  f"arrows={g.arrow_count(n.id)} adj=[{near}]", file=out)
    return 0


def _classify(args, cfg: Config, out) -> int:
    t = type_to_string(normalize(classify(_poly(args.poly, cfg), cfg.engine)))
    if _fmt(args, cfg) == "json":
        print(json.dumps({"type": t}), file=out)
    else:
        print(t, file=out)
    return 0


def _milnor(args, cfg: Config, out) -> int:
    mu = acampo_mu(resolve(_poly(args.poly, cfg), cfg.engine))
    print(json.dumps({"mu": mu}) if _fmt(args, cfg) == "json" else mu, file=out)
    return 0


def _intersect(args, cfg: Config, out) -> int:
    i = intersection_multiplicity(_poly(args.f, cfg), _poly(args.g, cfg))
    print(json.dumps({"intersection": i}) if _fmt(args, cfg) == "json" else i, file=out)
    return 0


def _torus_verify(args, cfg: Config, out) -> int:
    rep = verify(build_from_text(args.f2, args.f5), cfg.engine)
    if _fmt(args, cfg) == "json":
        print(rep.to_json(), file=out)
        return 0
    print(f"case: {rep.case.key}", file=out)
    print(f"iota: {rep.iota}", file=out)
    print(f"mu: {rep.mu}", file=out)
    print(f"type: {rep.normalized}", file=out)
    if rep.predicted.types:
        tag = " (generic coefficients)" if rep.predicted.generic_only else ""
        print(f"predicted: {' | '.join(rep.predicted.texts)} by {rep.predicted.rule}{tag}: "
              f"{'holds' if rep.prediction_holds else 'FAILS'}", file=out)
    row = rep.table_row
    if row.hit:
        print(f"table: {row.table} {row.case} iota={row.iota} {row.entry}", file=out)
    elif row.explained:
        print(f"table: TABLE_DISCREPANCY {row.case} iota={row.iota} printed {row.entry}: "
              f"{row.explained}", file=out)
    else:
        print(f"table: no row of the {row.table} table matches", file=out)
    if rep.discrepancy:
        print(f"TABLE_DISCREPANCY: printed {rep.discrepancy['printed_type']}, "
              f"{rep.discrepancy['reason']}", file=out)
    return 0


def _torus_census(args, cfg: Config, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    seed = cfg.seed if args.seed is None else args.seed
    recs = census(args.count, seed, cfg.engine)
    unexplained = [r for r in recs if r.error or r.prediction_holds is False
                   or not (r.table_hit or r.table_explained)]
    if _fmt(args, cfg) == "json":
        print(json.dumps({"seed": seed, "records": [asdict(r) for r in recs],
                          "unexplained": len(unexplained)}, indent=2), file=out)
    else:
        cases = {}
        for r in recs:
            cases[r.case] = cases.get(r.case, 0) + 1
        for key in sorted(cases):
            print(f"{key:10s} {cases[key]}", file=out)
        print(f"curves: {len(recs)}", file=out)
        print(f"predictions checked: {sum(r.prediction_holds is not None for r in recs)}", file=out)
        print(f"explained discrepancies: {sum(r.table_explained for r in recs)}", file=out)
        print(f"unexplained misses: {len(unexplained)}", file=out)
        for r in unexplained:
            print(f"  MISS f2={r.f2} f5={r.f5} case={r.case} type={r.engine_type} "
                  f"{r.error or ''}", file=out)
    return 0 if not unexplained else 1


def _goldens(args, cfg: Config, out) -> int:
    results = run_goldens(cfg.engine)
    if _fmt(args, cfg) == "json":
        print(json.dumps([{"name": r.record.name, "engine_type": r.engine_type,
                           "iota": r.iota, "mu": r.mu, "type_ok": r.type_ok,
                           "iota_ok": r.iota_ok, "mu_ok": r.mu_ok, "passed": r.passed,
                           "discrepancy": asdict(r.via_discrepancy) if r.via_discrepancy else None}
                          for r in results], indent=2), file=out)
    else:
        for r in results:
            mark = lambda ok: "ok" if ok else "FAIL"
            note = f" TABLE_DISCREPANCY (printed {r.record.type})" if r.via_discrepancy else ""
            print(f"{'PASS' if r.passed else 'FAIL'} {r.record.name:10s} type {mark(r.type_ok)} "
                  f"iota {mark(r.iota_ok)} mu {mark(r.mu_ok)} {r.engine_type}{note}", file=out)
        print(f"{sum(r.passed for r in results)}/{len(results)} passed", file=out)
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {"newton": _newton, "resolve": _resolve, "classify": _classify,
             "milnor": _milnor, "intersect": _intersect, "goldens": _goldens}


def _report(exc: Exception, code: str, as_json: bool, err) -> None:
    if as_json:
        body = {"error": code, "message": str(exc)}
        if isinstance(exc, PolynomialSyntaxError):
            body["position"] = exc.position
        print(json.dumps(body), file=err)
    else:
        print(f"curvesing: {code}: {exc}", file=err)


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json-errors" in argv
    try:
        args = _parser().parse_args(argv)
        cfg = load_config(os.environ.get(CONFIG_ENV))
        if args.command == "torus":
            handler = _torus_verify if args.torus_command == "verify" else _torus_census
        else:
            handler = _COMMANDS[args.command]
        return handler(args, cfg, out)
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0
    except UsageError as exc:
        _report(exc, "usage_error", as_json, err)
        return 2
    except PolynomialSyntaxError as exc:
        _report(exc, exc.code, as_json, err)
        return 2
    except CurveSingError as exc:
        _report(exc, exc.code, as_json, err)
        return 1
    except ValueError as exc:
        # inputs outside the domain of a command, e.g. a torus pair of wrong degree
        _report(exc, "invalid_input", as_json, err)
        return 2


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
