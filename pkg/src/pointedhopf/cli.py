"""Command line front end: datum files in, deterministic key/value reports out.

Datum files use a small TOML-like syntax::

    [group]
    orders = [3, 3]

    [[vertex]]
    g = [1, 0]
    chi = [1, 1]

    [cartan]            # optional
    rows = [[2, 0], [0, 2]]

    [[link]]            # optional, 1-based vertices
    i = 1
    j = 2
    lambda = "1"

``lambda`` is a sum of rational multiples of ``z^k`` with z = zeta_L, L the
exponent of the group.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import __version__
from .abelian import BudgetExceeded
from .exactfield import CycloNum
from .freealg import (InvalidLinking, lifted_dimension_formula, lifted_relations, top_pbw_degree,
                      truncated_quotient_series)
from .linking import (Datum, EnumConfig, InvalidDatum, LinkingDatum, RawDatum, check_hypotheses, check_linking,
                      enumerate_linkings, linkable, linkable_pairs, remark_bound, validate_datum,
                      vertices_linkable_to_two)
from .nichols import DEFAULT_BUDGET, nichols_dims, pbw_hilbert_series

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_LINK, EXIT_BUDGET = 0, 1, 2, 3, 4


class ParseError(ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


# ---------------------------------------------------------------------------
# datum files


@dataclass
class DatumFile:
    orders: list[int] | None = None
    vertices: list[dict] = field(default_factory=list)
    cartan: list[list[int]] | None = None
    links: list[dict] = field(default_factory=list)
    lines: dict[str, int] = field(default_factory=dict)

    def raw(self) -> RawDatum:
        g = tuple(tuple(v["g"]) for v in self.vertices)
        chi = tuple(tuple(v["chi"]) for v in self.vertices)
        cartan = tuple(tuple(r) for r in self.cartan) if self.cartan is not None else None
        return RawDatum(tuple(self.orders), g, chi, cartan)


_HEADER = re.compile(r"^(?:\[\[\s*(?P<arr>[A-Za-z_]+)\s*\]\]|\[\s*(?P<tab>[A-Za-z_]+)\s*\])$")
_KEYVAL = re.compile(r"^([A-Za-z_]+)\s*=\s*(.+)$")
_SECTIONS = {"group": False, "vertex": True, "cartan": False, "link": True}
_KEYS = {"group": {"orders"}, "vertex": {"g", "chi"}, "cartan": {"rows"}, "link": {"i", "j", "lambda"}}


def _strip_comment(line: str) -> str:
    out, in_str = [], False
    for ch in line:
        if ch == '"':
            in_str = not in_str
        if ch == "#" and not in_str:
            break
        out.append(ch)
    return "".join(out).strip()


def parse_datum_text(text: str) -> DatumFile:
    df = DatumFile()
    section: str | None = None
    current: dict | None = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw_line)
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            is_array = m.group("arr") is not None
            name = m.group("arr") or m.group("tab")
            if name not in _SECTIONS:
                raise ParseError(lineno, f"unknown section [{name}]")
            if _SECTIONS[name] != is_array:
                want = f"[[{name}]]" if _SECTIONS[name] else f"[{name}]"
                raise ParseError(lineno, f"section {name} must be written {want}")
            section = name
            current = {"_line": lineno}
            if name == "vertex":
                df.vertices.append(current)
            elif name == "link":
                df.links.append(current)
            elif name in df.lines:
                raise ParseError(lineno, f"duplicate section [{name}]")
            df.lines.setdefault(name, lineno)
            continue
        m = _KEYVAL.match(line)
        if not m:
            raise ParseError(lineno, f"cannot parse {raw_line.strip()!r}")
        if section is None:
            raise ParseError(lineno, "key outside of any section")
        key, val = m.group(1), m.group(2).strip()
        if key not in _KEYS[section]:
            raise ParseError(lineno, f"unknown key {key!r} in [{section}]")
        try:
            value = json.loads(val)
        except json.JSONDecodeError as exc:
            raise ParseError(lineno, f"bad value for {key}: {exc.msg} at column {exc.colno + line.index(val)}") from None
        if key in current:
            raise ParseError(lineno, f"duplicate key {key!r}")
        current[key] = value
        current[f"_line_{key}"] = lineno
        if section == "group":
            df.orders = value
        elif section == "cartan":
            df.cartan = value
    _check_file(df)
    return df


def _is_int_list(v) -> bool:
    return isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v)


def _check_file(df: DatumFile) -> None:
    if df.orders is None:
        raise ParseError(1, "missing [group] orders")
    gl = df.lines.get("group", 1)
    if not _is_int_list(df.orders) or not df.orders or any(m < 2 for m in df.orders):
        raise ParseError(gl, "orders must be a non-empty list of integers >= 2")
    s = len(df.orders)
    if not df.vertices:
        raise ParseError(gl, "no [[vertex]] sections")
    for k, v in enumerate(df.vertices, start=1):
        for key in ("g", "chi"):
            if key not in v:
                raise ParseError(v["_line"], f"vertex {k}: missing {key}")
            if not _is_int_list(v[key]):
                raise ParseError(v[f"_line_{key}"], f"vertex {k}: {key} must be a list of integers")
            if len(v[key]) != s:
                raise ParseError(v[f"_line_{key}"], f"vertex {k}: {key} has length {len(v[key])}, expected {s}")
    theta = len(df.vertices)
    if df.cartan is not None:
        cl = df.lines["cartan"]
        if (not isinstance(df.cartan, list) or len(df.cartan) != theta
                or not all(_is_int_list(r) and len(r) == theta for r in df.cartan)):
            raise ParseError(cl, f"cartan rows must be a {theta}x{theta} integer matrix")
    for k, ln in enumerate(df.links, start=1):
        for key in ("i", "j", "lambda"):
            if key not in ln:
                raise ParseError(ln["_line"], f"link {k}: missing {key}")
        for key in ("i", "j"):
            if not isinstance(ln[key], int) or not 1 <= ln[key] <= theta:
                raise ParseError(ln[f"_line_{key}"], f"link {k}: {key} must be a vertex in 1..{theta}")
        if ln["i"] == ln["j"]:
            raise ParseError(ln["_line_j"], f"link {k}: i and j must differ")
        if not isinstance(ln["lambda"], str):
            raise ParseError(ln["_line_lambda"], f"link {k}: lambda must be a string")


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*?\s*)?(z(?:\^(\d+))?)?$")


def parse_lambda(text: str, L: int) -> CycloNum:
    """Parse ``"1"``, ``"-1/2 + z^2"``, ``"3*z^1 - z"`` into Q(zeta_L)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty lambda")
    if s[0] not in "+-":
        s = "+" + s
    parts = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sgn + body for sgn, body in parts) != s:
        raise ValueError(f"cannot parse lambda {text!r}")
    acc = CycloNum.zero(L)
    for sgn, body in parts:
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {body!r} in lambda {text!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        k = 0 if m.group(2) is None else (int(m.group(3)) if m.group(3) else 1)
        term = CycloNum.root(L, k) * c
        acc = acc + term if sgn == "+" else acc - term
    return acc


def load_datum(df: DatumFile) -> tuple[Datum, LinkingDatum]:
    try:
        d = validate_datum(df.raw())
    except InvalidDatum as exc:
        line = None
        if exc.witness is not None:
            line = df.vertices[exc.witness[0]]["_line"]
        elif exc.condition == "finite Cartan matrix" and df.cartan is not None:
            line = df.lines["cartan"]
        raise DatumError(str(exc), exc.condition, line) from exc
    lam = {}
    for k, ln in enumerate(df.links, start=1):
        try:
            v = parse_lambda(ln["lambda"], d.group.exponent)
        except ValueError as exc:
            raise ParseError(ln["_line_lambda"], str(exc)) from None
        i, j = ln["i"] - 1, ln["j"] - 1
        if i > j:
            i, j = j, i
        if (i, j) in lam:
            raise ParseError(ln["_line"], f"link {k}: pair ({i + 1},{j + 1}) given twice")
        lam[(i, j)] = v
    return d, LinkingDatum.of(lam)


class DatumError(ValueError):
    def __init__(self, message: str, condition: str, line: int | None) -> None:
        super().__init__(message)
        self.condition = condition
        self.line = line


def datum_to_text(d: Datum, lam: LinkingDatum | None = None) -> str:
    out = ["[group]", f"orders = {_ints(d.group.orders)}", ""]
    for g, chi in zip(d.g, d.chi):
        out += ["[[vertex]]", f"g = {_ints(g.exponents)}", f"chi = {_ints(chi.exponents)}", ""]
    out += ["[cartan]", f"rows = {_matrix(d.cartan)}", ""]
    for (i, j), v in (lam.lam if lam else ()):
        out += ["[[link]]", f"i = {i + 1}", f"j = {j + 1}", f"lambda = {json.dumps(str(v))}", ""]
    return "\n".join(out)


# ---------------------------------------------------------------------------
# reports


def _ints(v: Sequence[int]) -> str:
    return "[" + ", ".join(str(x) for x in v) + "]"


def _matrix(m: Sequence[Sequence[int]]) -> str:
    return "[" + ", ".join(_ints(r) for r in m) + "]"


class Report:
    """Ordered key/value document."""

    def __init__(self) -> None:
        self.items: list[tuple[str, str]] = []

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)) and all(isinstance(x, int) for x in value):
            value = _ints(value)
        self.items.append((key, str(value)))

    def get(self, key: str) -> str | None:
        return next((v for k, v in self.items if k == key), None)

    def render(self, fmt: str = "kv") -> str:
        if fmt == "json":
            return json.dumps(dict(self.items), indent=2, ensure_ascii=False) + "\n"
        return "".join(f"{k} = {v}\n" for k, v in self.items)


def echo_datum(rep: Report, d: Datum, lam: LinkingDatum | None = None) -> None:
    rep.add("datum.group.orders", list(d.group.orders))
    rep.add("datum.theta", d.theta)
    for k, (g, chi) in enumerate(zip(d.g, d.chi), start=1):
        rep.add(f"datum.vertex.{k}.g", list(g.exponents))
        rep.add(f"datum.vertex.{k}.chi", list(chi.exponents))
    rep.add("datum.cartan", _matrix(d.cartan))
    pairs = lam.lam if lam else ()
    rep.add("datum.links", len(pairs))
    for k, ((i, j), v) in enumerate(pairs, start=1):
        rep.add(f"datum.link.{k}", f"{i + 1} {j + 1} {v}")


def datum_from_report(items: Sequence[tuple[str, str]] | Report) -> tuple[Datum, LinkingDatum]:
    """Rebuild the echoed datum (and links) of a report."""
    kv = dict(items.items if isinstance(items, Report) else items)
    orders = json.loads(kv["datum.group.orders"])
    theta = int(kv["datum.theta"])
    g = [json.loads(kv[f"datum.vertex.{k}.g"]) for k in range(1, theta + 1)]
    chi = [json.loads(kv[f"datum.vertex.{k}.chi"]) for k in range(1, theta + 1)]
    cartan = json.loads(kv["datum.cartan"])
    d = validate_datum(RawDatum(tuple(orders), tuple(map(tuple, g)), tuple(map(tuple, chi)),
                                tuple(map(tuple, cartan))))
    lam = {}
    for k in range(1, int(kv.get("datum.links", "0")) + 1):
        i, j, val = kv[f"datum.link.{k}"].split(" ", 2)
        lam[(int(i) - 1, int(j) - 1)] = parse_lambda(val, d.group.exponent)
    return d, LinkingDatum.of(lam)


def structure_report(rep: Report, d: Datum) -> None:
    comps = d.components
    labels = comps.classification.labels()
    rs = d.root_data
    rep.add("cartan", _matrix(d.cartan))
    rep.add("braiding", "[" + ", ".join("[" + ", ".join(repr(x) for x in row) + "]" for row in d.braiding.b) + "]")
    rep.add("dynkin.types", " x ".join(labels))
    rep.add("components.count", len(comps.blocks))
    for k, blk in enumerate(comps.blocks, start=1):
        rep.add(f"components.{k}.vertices", [v + 1 for v in blk])
        rep.add(f"components.{k}.type", labels[k - 1])
        rep.add(f"components.{k}.N", comps.N[k - 1])
    rep.add("roots.positive.count", rs.num_positive)
    rep.add("roots.positive", "[" + ", ".join(_ints(r) for r in rs.positive_roots) + "]")
    rep.add("roots.reduced_word", [i + 1 for i in rs.reduced_word])
    rep.add("roots.convex_order", "[" + ", ".join(_ints(r) for r in rs.convex_order) + "]")
    for k, w in enumerate(d.warnings, start=1):
        rep.add(f"warnings.{k}", w)


def _N_list(d: Datum) -> list[int]:
    return list(d.components.N)


# ---------------------------------------------------------------------------
# commands


@dataclass
class Outcome:
    report: Report
    code: int


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, rep: Report) -> tuple[Datum, LinkingDatum] | None:
    try:
        df = parse_datum_text(_read(path))
        return load_datum(df)
    except ParseError as exc:
        rep.add("status", "PARSE_ERROR")
        rep.add("error.line", exc.line)
        rep.add("error.message", str(exc))
    except DatumError as exc:
        rep.add("status", "INVALID_DATUM")
        if exc.line is not None:
            rep.add("error.line", exc.line)
        rep.add("error.condition", exc.condition)
        rep.add("error.message", str(exc))
    except OSError as exc:
        rep.add("status", "IO_ERROR")
        rep.add("error.message", str(exc))
    return None


def cmd_check(args) -> Outcome:
    rep = Report()
    loaded = _load(args.datum, rep)
    if loaded is None:
        return Outcome(rep, EXIT_PARSE)
    d, lam = loaded
    echo_datum(rep, d, lam)
    structure_report(rep, d)
    rep.add("status", "VALID")
    return Outcome(rep, EXIT_OK)


def cmd_nichols(args) -> Outcome:
    rep = Report()
    loaded = _load(args.datum, rep)
    if loaded is None:
        return Outcome(rep, EXIT_PARSE)
    d, lam = loaded
    echo_datum(rep, d, lam)
    structure_report(rep, d)
    dims = nichols_dims(d.braiding, args.max_degree, budget=args.budget, threads=args.threads)
    pbw = pbw_hilbert_series(d.root_data, _N_list(d))
    n = max(len(dims.dims), len(pbw.dims)) if not dims.truncated else len(dims.dims)
    if args.max_degree is not None:
        n = min(n, args.max_degree + 1)
    nd, pd = dims.padded(n), pbw.padded(n)
    rep.add("nichols.dims", list(dims.dims))
    rep.add("nichols.total", dims.total)
    rep.add("nichols.truncated", dims.truncated)
    rep.add("pbw.dims", list(pbw.dims))
    rep.add("pbw.total", pbw.total)
    ok = True
    for k in range(n):
        match = nd[k] == pd[k]
        ok = ok and match
        rep.add(f"match.degree.{k}", "MATCH" if match else "MISMATCH")
    if dims.truncated:
        rep.add("status", "TRUNCATED")
        return Outcome(rep, EXIT_BUDGET)
    if args.max_degree is not None and args.max_degree < pbw.top:
        rep.add("status", "PARTIAL_MATCH" if ok else "MISMATCH")
        return Outcome(rep, EXIT_OK if ok else EXIT_MISMATCH)
    rep.add("status", "MATCH" if ok and dims.total == pbw.total else "MISMATCH")
    return Outcome(rep, EXIT_OK if ok else EXIT_MISMATCH)


def cmd_lift(args) -> Outcome:
    rep = Report()
    loaded = _load(args.datum, rep)
    if loaded is None:
        return Outcome(rep, EXIT_PARSE)
    d, lam = loaded
    echo_datum(rep, d, lam)
    structure_report(rep, d)
    chk = check_linking(d, lam)
    rep.add("linking.valid", chk.valid)
    if not chk.valid:
        for k, p in enumerate(chk.problems, start=1):
            rep.add(f"linking.problem.{k}", p)
        rep.add("error.condition", "lambda_ij = 0 unless i, j linkable (i not ~ j, g_i g_j != 1, chi_i chi_j = 1)")
        rep.add("status", "INVALID_LINKING")
        return Outcome(rep, EXIT_LINK)
    rs = d.root_data
    N = _N_list(d)
    top = top_pbw_degree(rs, N)
    formula = lifted_dimension_formula(d.group.size, rs, N)
    D_max = args.max_degree if args.max_degree is not None else top + 2
    rep.add("lift.formula", formula)
    rep.add("lift.top_pbw_degree", top)
    rels = lifted_relations(d, rs, lam.as_dict(), is_linkable=lambda i, j: bool(linkable(d, i, j)))
    for r in rels:
        rep.add(f"relation.{r.kind}", r.label)
    try:
        series = truncated_quotient_series(rels, d, 1, D_max, top, budget=args.budget * d.group.size,
                                           threads=args.threads)
    except BudgetExceeded as exc:
        rep.add("error.message", str(exc))
        rep.add("status", "BUDGET_EXCEEDED")
        return Outcome(rep, EXIT_BUDGET)
    except InvalidLinking as exc:
        rep.add("error.message", str(exc))
        rep.add("status", "INVALID_LINKING")
        return Outcome(rep, EXIT_LINK)
    for res in series:
        rep.add(f"lift.D.{res.D}.dims", list(res.dims))
        rep.add(f"lift.D.{res.D}.total", res.total)
        rep.add(f"lift.D.{res.D}.stabilized", res.stabilized)
    last = series[-1]
    if last.stabilized and last.total == formula:
        rep.add("status", "VERIFIED")
        return Outcome(rep, EXIT_OK)
    rep.add("status", "MISMATCH" if last.stabilized else "NOT_STABILIZED")
    return Outcome(rep, EXIT_MISMATCH)


def cmd_hypotheses(args) -> Outcome:
    rep = Report()
    loaded = _load(args.datum, rep)
    if loaded is None:
        return Outcome(rep, EXIT_PARSE)
    d, lam = loaded
    echo_datum(rep, d, lam)
    rep.add("dynkin.types", " x ".join(d.components.classification.labels()))
    hr = check_hypotheses(d, args.p)
    for name, flag in hr.items():
        rep.add(f"hypotheses.{name}", flag.ok)
        for k, r in enumerate(flag.reasons, start=1):
            rep.add(f"hypotheses.{name}.reason.{k}", r)
    rep.add("status", "OK")
    return Outcome(rep, EXIT_OK)


def cmd_link(args) -> Outcome:
    rep = Report()
    loaded = _load(args.datum, rep)
    if loaded is None:
        return Outcome(rep, EXIT_PARSE)
    d, lam = loaded
    echo_datum(rep, d, lam)
    for i in range(d.theta):
        for j in range(i + 1, d.theta):
            cert = linkable(d, i, j)
            rep.add(f"linkable.{i + 1}.{j + 1}", cert.linkable)
            if not cert.linkable:
                rep.add(f"linkable.{i + 1}.{j + 1}.fails", "; ".join(cert.failed))
    rep.add("linkable.pairs", "[" + ", ".join(f"[{i + 1}, {j + 1}]" for i, j in linkable_pairs(d)) + "]")
    multi = vertices_linkable_to_two(d)
    rep.add("linkable.to_two", "[" + ", ".join(f"{v + 1}:{[p + 1 for p in ps]}" for v, ps in multi) + "]")
    linkings = enumerate_linkings(d, normalize=True)
    rep.add("linkings.count", len(linkings))
    for k, ld in enumerate(linkings, start=1):
        rep.add(f"linkings.{k}", "[" + ", ".join(f"[{i + 1}, {j + 1}]" for i, j in ld.linked_pairs) + "]")
    chk = check_linking(d, lam)
    rep.add("linking.valid", chk.valid)
    for k, p in enumerate(chk.problems, start=1):
        rep.add(f"linking.problem.{k}", p)
    rep.add("status", "OK" if chk.valid else "INVALID_LINKING")
    return Outcome(rep, EXIT_OK if chk.valid else EXIT_LINK)


def cmd_enumerate(args) -> Outcome:
    rep = Report()
    types = [t.strip() for t in args.types.split(",")] if args.types else None
    bound = remark_bound(args.p, args.s)
    rep.add("enumerate.p", args.p)
    rep.add("enumerate.s", args.s)
    rep.add("enumerate.theta_max", args.theta_max)
    rep.add("enumerate.bound", str(Fraction(2 * args.s * (args.p - 1), args.p - 2)))
    total = 0
    by_theta: dict[int, int] = {}
    try:
        cfg = EnumConfig(args.p, args.s, args.theta_max, frozenset(types) if types else None,
                         budget=args.budget, threads=args.threads)
        for k, d in enumerate(cfg.run(), start=1):
            total += 1
            by_theta[d.theta] = by_theta.get(d.theta, 0) + 1
            row = (f"theta={d.theta} g={[list(x.exponents) for x in d.g]} "
                   f"chi={[list(x.exponents) for x in d.chi]} "
                   f"type={' x '.join(d.components.classification.labels())}")
            if args.links:
                row += f" linkable={len(linkable_pairs(d))} linkings={len(enumerate_linkings(d))}"
            rep.add(f"row.{k}", row.replace(", ", ","))
    except BudgetExceeded as exc:
        rep.add("error.message", str(exc))
        rep.add("status", "BUDGET_EXCEEDED")
        return Outcome(rep, EXIT_BUDGET)
    for t in sorted(by_theta):
        rep.add(f"count.theta.{t}", by_theta[t])
    rep.add("count.total", total)
    rep.add("max_theta_found", max(by_theta, default=0))
    rep.add("bound_respected", max(by_theta, default=0) <= bound)
    rep.add("status", "OK")
    return Outcome(rep, EXIT_OK)


COMMANDS = {"check": cmd_check, "nichols": cmd_nichols, "lift": cmd_lift, "enumerate": cmd_enumerate,
            "hypotheses": cmd_hypotheses, "link": cmd_link}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointedhopf", description="Exact computations with Cartan-type data, "
                                "Nichols algebras and their liftings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max tensor-space size (default 65536)")
    common.add_argument("--threads", type=int, default=1, help="worker threads (output is independent of this)")
    common.add_argument("--format", choices=("kv", "json"), default="kv")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check", "nichols", "lift", "hypotheses", "link"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("datum", help="datum file, or - for standard input")
        if name in ("nichols", "lift"):
            sp.add_argument("--max-degree", type=int, default=None)
        if name == "hypotheses":
            sp.add_argument("--p", type=int, default=None)
    sp = sub.add_parser("enumerate", parents=[common])
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--theta-max", type=int, required=True)
    sp.add_argument("--types", default=None, help="comma-separated Dynkin types or series, e.g. A1,A2,B")
    sp.add_argument("--links", action="store_true", help="also count linkable pairs and linkings")
    return p


def run(argv: Sequence[str] | None = None) -> tuple[Outcome, str]:
    args = build_parser().parse_args(argv)
    if args.command == "enumerate" and args.budget == DEFAULT_BUDGET:
        args.budget = 1 << 20
    return COMMANDS[args.command](args), args.format


def main(argv: Sequence[str] | None = None) -> int:
    try:
        out, fmt = run(argv)
    except BudgetExceeded as exc:
        print(f"status = BUDGET_EXCEEDED\nerror.message = {exc}")
        return EXIT_BUDGET
    sys.stdout.write(out.report.render(fmt))
    return out.code


if __name__ == "__main__":
    sys.exit(main())
