"""Compare the compiled and pure-Python kernels on the two hot paths.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Workloads: full subgroup-class enumeration of W(D5) (subgroup closure
kernel) and vertex enumeration of the split degree-2 alpha polytope
(double description adjacency kernel). Both backends must agree exactly.
"""
from __future__ import annotations

import argparse
import json
import time

from dpalpha import kernels
from dpalpha.geometry import weyl_group
from dpalpha.permgroup import PermGroup
from dpalpha.pipeline import alpha_polytope
from dpalpha.polytope import vertex_enumeration
from dpalpha.subgroups import SubgroupCatalog


def enumerate_d4():
    cat = SubgroupCatalog(weyl_group(4))
    return len(cat), cat.subgroup_count


def vertices_d2():
    P = alpha_polytope(PermGroup([], 56), 2).polytope
    return len(vertex_enumeration(P))


def vertices_d3():
    P = alpha_polytope(PermGroup([], 27), 3).polytope
    return len(vertex_enumeration(P))


WORKLOADS = {
    "subgroup classes W(D5)": enumerate_d4,
    "vertices split degree 2": vertices_d2,
    "vertices split degree 3": vertices_d3,
}


def run(repeat: int) -> list[dict]:
    backends = ["python"] + (["cython"] if kernels.compiled is not None else [])
    rows = []
    for name, fn in WORKLOADS.items():
        answers, times = {}, {}
        for b in backends:
            prev = kernels.use(b)
            try:
                best = float("inf")
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    answers[b] = fn()
                    best = min(best, time.perf_counter() - t0)
                times[b] = best
            finally:
                kernels.use(prev)
        if len(set(map(str, answers.values()))) != 1:
            raise SystemExit(f"{name}: backends disagree: {answers}")
        row = {"workload": name, "result": answers["python"],
               **{f"{b}_seconds": round(t, 4) for b, t in times.items()}}
        if "cython" in times:
            row["speedup"] = round(times["python"] / times["cython"], 2)
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=1))
        return
    for r in rows:
        cy = f"{r['cython_seconds']:8.3f}s" if "cython_seconds" in r else "     n/a"
        sp = f"x{r['speedup']}" if "speedup" in r else ""
        print(f"{r['workload']:<26} python {r['python_seconds']:8.3f}s  cython {cy}  {sp}  "
              f"result={r['result']}")


if __name__ == "__main__":
    main()
