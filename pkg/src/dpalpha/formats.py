"""Reading and writing polytope files and result tables.

Two polytope formats are understood. JSON files hold ``dim``, a list of
``inequalities`` whose entries are exact rationals written as strings, and
an optional list of ``symmetry`` generators in cycle notation on the
coordinates 1..dim. Polymake-style files hold ``INEQUALITIES=>[[...], ...]``
(or just the bracketed rows), leading entry first.
"""
from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import MalformedPermutationError, ParseError
from .permgroup import format_cycles, parse_cycles
from .polytope import HPolytope, SymmetrySpec

_ROW_RE = re.compile(r"\[([^\[\]]*)\]")
_INEQ_RE = re.compile(r"INEQUALITIES\s*=>\s*\[")


def fraction_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_rational(tok: str, line: int) -> Fraction:
    try:
        return Fraction(tok.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {tok.strip()!r}", line=line) from None


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def parse_polymake(text: str) -> HPolytope:
    """Rows from a polymake ``INEQUALITIES`` listing, or a bare list of bracketed rows."""
    m = _INEQ_RE.search(text)
    start = m.end() if m else 0
    if m:
        # find the bracket closing the INEQUALITIES list
        depth, end = 1, None
        for i in range(start, len(text)):
            if text[i] == "[":
                depth += 1
            elif text[i] == "]":
                depth -= 1
                if depth == 0:
                    end = i
                    break
        if end is None:
            raise ParseError("unterminated INEQUALITIES list", line=_line_of(text, m.start()))
    else:
        end = len(text)
    rows = []
    width = None
    last = start

    def check_gap(a: int, b: int) -> None:
        gap = text[a:b]
        junk = re.search(r"[^\s,]", gap)
        if m and junk:
            raise ParseError(f"unexpected text {gap.strip()[:20]!r} in INEQUALITIES",
                             line=_line_of(text, a + junk.start()))

    for rm in _ROW_RE.finditer(text, start, end):
        check_gap(last, rm.start())
        last = rm.end()
        line = _line_of(text, rm.start())
        toks = rm.group(1).split(",")
        if any(not t.strip() for t in toks):
            raise ParseError("empty entry in inequality row", line=line)
        row = [_parse_rational(t, line) for t in toks]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", line=line)
        rows.append(row)
    check_gap(last, end)
    if not rows:
        raise ParseError("no inequality rows found", line=1)
    return HPolytope.from_rows(rows)


def format_polymake(P: HPolytope) -> str:
    rows = ", ".join("[" + ",".join(str(x) for x in r) + "]" for r in P.inequalities)
    return (f"$p=new Polytope<Rational>(INEQUALITIES=>[{rows}]);\n"
            "print (($p->DIM)*($p->VOLUME));\n")


def polytope_to_json(P: HPolytope, sym: Optional[SymmetrySpec] = None) -> dict:
    out = {"dim": P.dim, "inequalities": [[fraction_str(x) for x in r] for r in P.inequalities]}
    if sym is not None:
        out["symmetry"] = [format_cycles(g) for g in sym.generators]
    return out


def polytope_from_json(data: dict) -> tuple[HPolytope, Optional[SymmetrySpec]]:
    if not isinstance(data, dict) or "inequalities" not in data:
        raise ParseError("polytope JSON needs an 'inequalities' field")
    dim = data.get("dim")
    rows = []
    for k, r in enumerate(data["inequalities"]):
        if not isinstance(r, list):
            raise ParseError(f"inequality {k} is not a list")
        if any(not isinstance(x, (str, int)) or isinstance(x, bool) for x in r):
            raise ParseError(f"inequality {k} must hold exact rationals as strings or integers")
        rows.append([_parse_rational(str(x), k + 1) for x in r])
        if dim is not None and len(r) != dim + 1:
            raise ParseError(f"inequality {k} has {len(r)} entries, expected {dim + 1}")
    P = HPolytope.from_rows(rows, dim)
    sym = None
    if data.get("symmetry"):
        try:
            sym = SymmetrySpec(tuple(parse_cycles(g, P.dim) for g in data["symmetry"]))
        except MalformedPermutationError as exc:
            raise ParseError(f"bad symmetry generator: {exc}") from exc
    return P, sym


def read_polytope(path) -> tuple[HPolytope, Optional[SymmetrySpec]]:
    """Load a JSON or polymake-style polytope file (decided by content)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
        return polytope_from_json(data)
    return parse_polymake(text), None


def write_polytope(path, P: HPolytope, sym: Optional[SymmetrySpec] = None) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(polytope_to_json(P, sym), indent=1) + "\n")
    else:
        path.write_text(format_polymake(P))


RESULT_FIELDS = ("degree", "subgroup_order", "class_key", "class_size", "orbit_structure",
                 "rho", "alpha", "rho_maximal_parent", "children", "case", "label",
                 "orbit_partition", "vertices", "symmetry_copies", "seconds")


def results_json(rows: Sequence[dict]) -> str:
    return json.dumps(list(rows), indent=1) + "\n"


def results_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    fields = [f for f in RESULT_FIELDS if any(f in r for r in rows)]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        r = dict(r)
        r["orbit_structure"] = " ".join(map(str, r["orbit_structure"]))
        w.writerow({k: ("" if r.get(k) is None else r[k]) for k in fields})
    return buf.getvalue()


def _compact(structure: Iterable[int]) -> str:
    out = []
    for s in sorted(set(structure)):
        k = list(structure).count(s)
        out.append(f"{s}x{k}" if k > 1 else str(s))
    return "[" + ",".join(out) + "]"


def results_text(rows: Sequence[dict]) -> str:
    lines = []
    for r in rows:
        tag = r.get("label") or r.get("class_key") or ""
        case = f" case={r['case']}" if r.get("case") else ""
        lines.append(f"d={r['degree']} rho={r['rho']} alpha={r['alpha']} "
                     f"order={r['subgroup_order']} orbits={_compact(r['orbit_structure'])}"
                     f"{case} {tag}".rstrip())
    return "\n".join(lines) + "\n"


def render(rows: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return results_json(rows)
    if fmt == "csv":
        return results_csv(rows)
    if fmt == "text":
        return results_text(rows)
    raise ValueError(f"unknown format {fmt!r}")
