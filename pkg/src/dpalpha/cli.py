"""Command-line front end: ``dpalpha alpha|volume|classes|classify|tables``.

Exit codes: 0 success, 2 malformed input, 3 capacity limit, 4 domain error.
Errors are reported on stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .errors import CapacityError, DPAlphaError, ParseError
from .formats import fraction_str, read_polytope, render, write_polytope

CACHE_ENV = "DPALPHA_CACHE"


@dataclass
class RunConfig:
    degree: Optional[int] = None
    mode: str = "supplied"
    subgroups: list[str] = field(default_factory=list)
    cache: Optional[Path] = None
    fmt: str = "text"
    symmetry: str = "auto"
    enumerate_large: bool = False
    seed: int = 0
    samples: int = 0
    emit_polytope: Optional[Path] = None
    timing: bool = False

    def check(self) -> None:
        if self.mode == "supplied" and not self.subgroups:
            raise ParseError("give --subgroup FILE, --all or --rho-maximal")
        if self.mode != "supplied" and self.subgroups:
            raise ParseError("--subgroup cannot be combined with --all or --rho-maximal")


def _cache_dir(arg: Optional[str]) -> Optional[Path]:
    val = arg or os.environ.get(CACHE_ENV)
    return Path(val) if val else None


def _cache_file(cache: Path, degree: int, mode: str) -> Path:
    return cache / f"alpha-d{degree}-{mode}-v{__version__}.json"


def _resolve_subgroup(spec: str, degree: int) -> Path:
    """A path, or the name of a shipped generator file for this degree."""
    p = Path(spec)
    if p.exists():
        return p
    from .shipped import shipped_path
    name = p.name[:-5] if p.name.endswith(".gens") else p.name
    q = shipped_path(degree, name)
    if q.exists():
        return q
    raise ParseError(f"no such subgroup file: {spec}")


def _load_group(spec: str, degree: int):
    from .geometry import LINE_COUNT
    from .permgroup import PermGroup, read_generator_file
    path = _resolve_subgroup(spec, degree)
    n = LINE_COUNT[degree]
    return PermGroup(read_generator_file(path, n), n), path


def _emit(path: Path, P, index: int, total: int) -> None:
    if total > 1:
        path = path.with_name(f"{path.stem}-{index + 1}{path.suffix}")
    write_polytope(path, P)


def _monte_carlo_alpha(G, d: int, cfg: RunConfig) -> dict:
    """Floating-point cross-check of one alpha value: rho times a sampled volume."""
    from .pipeline import alpha_polytope
    from .polytope import monte_carlo_volume
    P = alpha_polytope(G, d).polytope
    est, err = monte_carlo_volume(P, cfg.samples, cfg.seed)
    return {"samples": cfg.samples, "seed": cfg.seed, "estimate": P.dim * est, "stderr": P.dim * err}


def cmd_alpha(cfg: RunConfig) -> list[dict]:
    from .geometry import check_degree
    from .pipeline import alpha_polytope, run_degree
    from .subgroups import DEFAULT_ENUMERATION_BOUND, LARGE_ENUMERATION_BOUND
    cfg.check()
    d = check_degree(cfg.degree)
    if cfg.mode == "supplied":
        loaded = [_load_group(s, d) for s in cfg.subgroups]
        groups = [g for g, _ in loaded]
        if cfg.emit_polytope:
            for i, G in enumerate(groups):
                _emit(cfg.emit_polytope, alpha_polytope(G, d).polytope, i, len(groups))
        labels = [p.stem for _, p in loaded]
        results = run_degree(d, "supplied", groups=groups, labels=labels, symmetry=cfg.symmetry)
        rows = [r.as_dict(cfg.timing) for r in results]
        if cfg.samples:
            by_label = dict(zip(labels, groups))
            for row in rows:
                row["monte_carlo"] = _monte_carlo_alpha(by_label[row["label"]], d, cfg)
        return rows

    mode = "all_classes" if cfg.mode == "all" else "rho_maximal_only"
    if cfg.cache:
        cached = _cache_file(cfg.cache, d, mode)
        if cached.exists():
            return json.loads(cached.read_text())
    if d <= 3 and not cfg.enumerate_large:
        raise CapacityError(
            f"subgroup enumeration for degree {d} is off by default; pass --subgroup FILE "
            "or opt in with --enumerate-large")
    bound = LARGE_ENUMERATION_BOUND if cfg.enumerate_large else DEFAULT_ENUMERATION_BOUND
    results = run_degree(d, mode, symmetry=cfg.symmetry, bound=bound)
    rows = [r.as_dict(cfg.timing) for r in results]
    if cfg.cache:
        cfg.cache.mkdir(parents=True, exist_ok=True)
        _cache_file(cfg.cache, d, mode).write_text(
            json.dumps([r.as_dict(False) for r in results], indent=1) + "\n")
    return rows


def cmd_volume(path: str, symmetry: str, samples: int, seed: int) -> dict:
    from .polytope import (detect_coordinate_symmetry, dimension, fundamental_domain,
                           monte_carlo_volume, vertex_enumeration, volume)
    P, sym = read_polytope(path)
    dim = dimension(P)
    if symmetry == "auto" and sym is None:
        sym = detect_coordinate_symmetry(P)
    if symmetry == "off":
        sym = None
    V = vertex_enumeration(P) if sym is None else None
    if sym is not None:
        Q, copies = fundamental_domain(P, sym)
        VQ = vertex_enumeration(Q)
        vol = volume(Q, vpoly=VQ) * copies
    else:
        vol = volume(P, vpoly=V)
    out = {"dim": dim, "vertices": len(V) if V is not None else None,
           "volume": fraction_str(vol), "dim_times_volume": fraction_str(dim * vol)}
    if sym is not None:
        out["fundamental_domain_vertices"] = len(VQ)
        out["symmetry_copies"] = copies
    if samples:
        est, err = monte_carlo_volume(P, samples, seed)
        out["monte_carlo"] = {"samples": samples, "seed": seed, "estimate": est, "stderr": err}
    return out


def cmd_classes(degree: int, enumerate_large: bool) -> list[dict]:
    from .geometry import check_degree, weyl_group
    from .permgroup import format_cycles
    from .pipeline import annotate_rho, orbit_partition_classes, rho_maximal_reduce
    from .subgroups import DEFAULT_ENUMERATION_BOUND, LARGE_ENUMERATION_BOUND, catalog
    d = check_degree(degree)
    if d <= 3 and not enumerate_large:
        raise CapacityError(f"subgroup enumeration for degree {d} needs --enumerate-large")
    W = weyl_group(d)
    cat = catalog(W, LARGE_ENUMERATION_BOUND if enumerate_large else DEFAULT_ENUMERATION_BOUND)
    classes = list(cat.classes)
    annotate_rho(classes, d)
    rho_maximal_reduce(classes, W)
    parts = orbit_partition_classes(classes, W)
    ids = {p: i for i, p in enumerate(sorted(set(parts.values())))}
    return [{"degree": d, "class_key": c.key, "subgroup_order": c.order,
             "class_size": c.class_size, "orbit_structure": list(c.orbit_structure),
             "orbit_partition": ids[parts[c.key]], "rho": c.rho,
             "rho_maximal_parent": c.parent_key,
             "generators": [format_cycles(g) for g in c.representative.generators]}
            for c in classes]


def cmd_classify(specs: Sequence[str]) -> list[dict]:
    from .cubic import case_row, classify_cubic
    from .pipeline import invariant_rank
    from .geometry import enumerate_lines
    out = []
    for spec in specs:
        G, path = _load_group(spec, 3)
        label = classify_cubic(G)
        out.append({"subgroup": path.stem, "case": label, "rho": invariant_rank(G, enumerate_lines(3)),
                    "orbit_structure": list(G.orbit_structure()),
                    "alpha": fraction_str(case_row(label).alpha)})
    return out


def cmd_tables(cache: Optional[Path], out: Path, stretch: bool, symmetry: str) -> tuple[dict, list[str]]:
    from .tables_report import build_tables
    rows4 = None
    if cache is not None:
        f = _cache_file(cache, 4, "all_classes")
        if not f.exists():
            raise DPAlphaError(
                f"no cached degree-4 data in {cache}; run "
                f"`dpalpha alpha --degree 4 --all --cache {cache}` first")
        rows4 = json.loads(f.read_text())
    return build_tables(out, rows4, stretch=stretch, symmetry=symmetry)


def _print_rows(rows, fmt: str) -> None:
    sys.stdout.write(render(rows, fmt))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpalpha", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"dpalpha {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--symmetry", choices=("auto", "off"), default="auto")

    a = sub.add_parser("alpha", help="alpha for supplied subgroups or a whole degree")
    a.add_argument("--degree", type=int, required=True)
    g = a.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="every conjugacy class of subgroups")
    g.add_argument("--rho-maximal", action="store_true", help="only the rho-maximal classes")
    a.add_argument("--subgroup", action="append", default=[], metavar="FILE",
                   help="generator file (repeatable); shipped names such as trivial.gens also work")
    a.add_argument("--emit-polytope", type=Path, metavar="PATH",
                   help="write the alpha polytope (.json or polymake style)")
    a.add_argument("--cache", metavar="DIR", help=f"result cache (default ${CACHE_ENV})")
    a.add_argument("--enumerate-large", action="store_true",
                   help="allow enumeration beyond the default bound of 10^4 elements")
    a.add_argument("--samples", type=int, default=0,
                   help="add a Monte Carlo estimate of each supplied alpha")
    a.add_argument("--seed", type=int, default=0, help="seed for --samples")
    a.add_argument("--timing", action="store_true", help="include per-row timings")
    common(a)

    v = sub.add_parser("volume", help="exact volume of a polytope file")
    v.add_argument("file")
    v.add_argument("--samples", type=int, default=0, help="also run a Monte Carlo estimate")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--symmetry", choices=("auto", "off"), default="off")

    c = sub.add_parser("classes", help="conjugacy classes of subgroups of W(R_d)")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--enumerate-large", action="store_true")
    c.add_argument("--format", choices=("json", "csv", "text"), default="text")

    k = sub.add_parser("classify", help="case label of a cubic surface")
    k.add_argument("--subgroup", action="append", required=True, metavar="FILE")
    k.add_argument("--format", choices=("json", "text"), default="text")

    t = sub.add_parser("tables", help="regenerate the reference tables with a diff report")
    t.add_argument("--cache", metavar="DIR")
    t.add_argument("--out", type=Path, default=Path("tables"))
    t.add_argument("--stretch", action="store_true", help="include the slow degree-1 rows")
    t.add_argument("--symmetry", choices=("auto", "off"), default="auto")
    return ap


def _fail(exc: Exception, code: int) -> int:
    err = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    line = getattr(exc, "line", None)
    if line is not None:
        err["line"] = line
    sys.stderr.write(json.dumps(err) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "alpha":
            mode = "all" if args.all else "rho_maximal" if args.rho_maximal else "supplied"
            cfg = RunConfig(degree=args.degree, mode=mode, subgroups=args.subgroup,
                            cache=_cache_dir(args.cache), fmt=args.format, symmetry=args.symmetry,
                            enumerate_large=args.enumerate_large, seed=args.seed, samples=args.samples,
                            emit_polytope=args.emit_polytope, timing=args.timing)
            _print_rows(cmd_alpha(cfg), args.format)
        elif args.command == "volume":
            res = cmd_volume(args.file, args.symmetry, args.samples, args.seed)
            if args.format == "json":
                print(json.dumps(res, indent=1))
            else:
                for key, val in res.items():
                    print(f"{key}: {val}")
        elif args.command == "classes":
            rows = cmd_classes(args.degree, args.enumerate_large)
            if args.format == "json":
                print(json.dumps(rows, indent=1))
            elif args.format == "csv":
                sys.stdout.write(_classes_csv(rows))
            else:
                for r in rows:
                    print(f"{r['class_key']:>18} order={r['subgroup_order']} size={r['class_size']} "
                          f"rho={r['rho']} orbits={r['orbit_structure']} parent={r['rho_maximal_parent']}")
        elif args.command == "classify":
            rows = cmd_classify(args.subgroup)
            if args.format == "json":
                print(json.dumps(rows, indent=1))
            else:
                for r in rows:
                    print(f"{r['subgroup']}: case {r['case']} rho={r['rho']} alpha={r['alpha']}")
        elif args.command == "tables":
            summary, report = cmd_tables(_cache_dir(args.cache), args.out, args.stretch, args.symmetry)
            sys.stdout.write("\n".join(report) + "\n")
            if summary["mismatches"]:
                raise DPAlphaError(f"{summary['mismatches']} table entries differ from the expected values")
    except DPAlphaError as exc:
        return _fail(exc, exc.exit_code)
    except OSError as exc:
        return _fail(exc, 2)
    return 0


def _classes_csv(rows: list[dict]) -> str:
    import csv
    import io
    buf = io.StringIO()
    fields = [k for k in rows[0] if k != "generators"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        r = dict(r, orbit_structure=" ".join(map(str, r["orbit_structure"])))
        w.writerow(r)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
