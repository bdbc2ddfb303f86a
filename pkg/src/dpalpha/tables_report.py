"""Regenerate the reference tables and compare them with the embedded values."""
from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .formats import fraction_str
from .tables import CUBIC, DEGREE_FOUR, DEGREE_ONE_BY_RANK, DEGREE_TWO_BY_RANK

SPOT_ROWS = (
    # (degree, shipped group, expected rank, slow)
    (2, "trivial", 8, False),
    (2, "reflection", 7, False),
    (1, "trivial", 9, False),
    (1, "reflection", 8, True),
)


def degree_four_summary(rows: Sequence[dict]) -> list[dict]:
    """Aggregate per-class rows into one row per rho-maximal parent."""
    members = defaultdict(list)
    for r in rows:
        members[r["rho_maximal_parent"]].append(r)
    out = []
    for key, group in members.items():
        parent = next(r for r in group if r["class_key"] == key)
        out.append({
            "case": parent["case"], "alpha": parent["alpha"], "rho": parent["rho"],
            "classes": len(group), "parent_order": parent["subgroup_order"],
            "orbit_structures": len({r["orbit_partition"] for r in group}),
            "maximal": parent["orbit_structure"], "class_key": key,
            "alpha_values": sorted({r["alpha"] for r in group}),
        })
    out.sort(key=lambda r: (r["rho"], -Fraction(r["alpha"]), r["class_key"]))
    return out


def compare_degree_four(summary: Sequence[dict]) -> list[str]:
    diffs = []
    expected = {(row.rho, row.parent_order, row.maximal): row for row in DEGREE_FOUR}
    seen = set()
    for r in summary:
        key = (r["rho"], r["parent_order"], tuple(r["maximal"]))
        row = expected.get(key)
        if row is None:
            diffs.append(f"degree 4: unexpected parent {key}")
            continue
        seen.add(key)
        got = (r["case"], Fraction(r["alpha"]), r["classes"], r["orbit_structures"])
        want = (row.case, row.alpha, row.classes, row.orbit_structures)
        if got != want:
            diffs.append(f"degree 4 {row.case} {list(row.maximal)}: got {got}, expected {want}")
        if r["alpha_values"] != [fraction_str(row.alpha)]:
            diffs.append(f"degree 4 {row.case}: alpha not constant over its classes {r['alpha_values']}")
    for key in expected.keys() - seen:
        diffs.append(f"degree 4: missing parent {key}")
    return diffs


def cubic_rows(symmetry: str) -> tuple[list[dict], list[str]]:
    from .cubic import classify_cubic
    from .pipeline import alpha_for_subgroup
    from .shipped import SHIPPED, load_shipped
    rows, diffs = [], []
    for row in CUBIC:
        G = load_shipped(3, f"case_{row.case}")
        res = alpha_for_subgroup(G, 3, symmetry)
        label = classify_cubic(G)
        rows.append({"case": row.case, "alpha": fraction_str(res.alpha), "rho": res.rho,
                     "parent_order": G.order, "maximal": list(G.orbit_structure()),
                     "classified_as": label})
        got = (label, res.alpha, res.rho, G.order, G.orbit_structure())
        want = (row.case, row.alpha, row.rho, row.parent_order, row.maximal)
        if got != want:
            diffs.append(f"cubic {row.case}: got {got}, expected {want}")
    for g in SHIPPED:
        if g.degree != 3 or g.name.startswith("case_"):
            continue
        G = load_shipped(3, g.name)
        res = alpha_for_subgroup(G, 3, symmetry)
        label = classify_cubic(G)
        row = next(r for r in CUBIC if r.case == label)
        rows.append({"case": label, "alpha": fraction_str(res.alpha), "rho": res.rho,
                     "subgroup": g.name, "subgroup_order": G.order,
                     "orbit_structure": list(G.orbit_structure())})
        if res.alpha != row.alpha:
            diffs.append(f"cubic {g.name}: alpha {res.alpha} but case {label} has {row.alpha}")
    return rows, diffs


def spot_rows(stretch: bool, symmetry: str) -> tuple[list[dict], list[str]]:
    from .pipeline import alpha_for_subgroup
    from .shipped import load_shipped
    rows, diffs = [], []
    for d, name, rank, slow in SPOT_ROWS:
        if slow and not stretch:
            continue
        res = alpha_for_subgroup(load_shipped(d, name), d, symmetry)
        table = DEGREE_TWO_BY_RANK if d == 2 else DEGREE_ONE_BY_RANK
        expected = table[rank]
        rows.append({"degree": d, "subgroup": name, "rho": res.rho,
                     "alpha": fraction_str(res.alpha), "symmetry_copies": res.symmetry_copies})
        if res.rho != rank or res.alpha not in expected:
            diffs.append(f"degree {d} {name}: rho {res.rho} alpha {res.alpha}, "
                         f"expected rank {rank} with alpha in {[str(x) for x in expected]}")
    return rows, diffs


def build_tables(out: Path, rows4: Optional[list[dict]] = None, stretch: bool = False,
                 symmetry: str = "auto") -> tuple[dict, list[str]]:
    if rows4 is None:
        from .pipeline import run_degree
        rows4 = [r.as_dict(False) for r in run_degree(4, "all_classes", symmetry=symmetry)]
    summary4 = degree_four_summary(rows4)
    diffs = compare_degree_four(summary4)
    cubic, d3 = cubic_rows(symmetry)
    spots, d21 = spot_rows(stretch, symmetry)
    diffs += d3 + d21
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for name, data in (("degree4.json", summary4), ("cubic.json", cubic), ("spot.json", spots)):
        (out / name).write_text(json.dumps(data, indent=1) + "\n")
    report = [f"degree 4: {len(summary4)} rho-maximal cases from {len(rows4)} classes"]
    for r in summary4:
        report.append(f"  {r['case']:<7} alpha={r['alpha']:<6} rho={r['rho']} classes={r['classes']:<3} "
                      f"parent order={r['parent_order']:<5} structures={r['orbit_structures']:<3} "
                      f"maximal={r['maximal']}")
    report.append(f"cubic: {sum(1 for r in cubic if 'subgroup' not in r)} cases, "
                  f"{sum(1 for r in cubic if 'subgroup' in r)} extra shipped groups")
    for r in cubic:
        tag = r.get("subgroup", "")
        report.append(f"  {r['case']:<7} alpha={r['alpha']:<6} rho={r['rho']} {tag}".rstrip())
    report.append("degree 2/1 spot rows:")
    for r in spots:
        report.append(f"  d={r['degree']} {r['subgroup']:<10} rho={r['rho']} alpha={r['alpha']}")
    report.append(f"differences: {len(diffs)}")
    report += ["  " + d for d in diffs]
    (out / "report.txt").write_text("\n".join(report) + "\n")
    return {"mismatches": len(diffs), "differences": diffs}, report
