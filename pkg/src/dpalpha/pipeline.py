"""From a Galois image W(S) <= W(R_d) to the exact value of alpha(S).

For a subgroup G acting on the lines, the orbit sums v_i span the invariant
part of the Picard lattice. In a basis of the saturated lattice they become
integer vectors w_i, and alpha is rho times the volume of

    {x : <x, w_i> >= 0 for all i, <x, -K> <= 1}

where ``<,>`` is the standard dot product in the basis coordinates. For
d <= 6 the last row is the same as <x, sum w_i> <= N_d/d because the lines
sum to (N_d/d)(-K). In degree 7 they do not, and -K is used directly.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import lattice
from .errors import (DimensionDeficiencyError, DPAlphaError, InvalidGaloisActionError,
                     SaturationError)
from .geometry import (LINE_COUNT, LineConfiguration, anticanonical, check_degree,
                       enumerate_lines, enumerate_roots, pairing, preserves_gram,
                       root_permutation, weyl_group)
from .permgroup import PermGroup
from .polytope import (HPolytope, _affine_dimension, detect_coordinate_symmetry,
                       fundamental_domain, vertex_enumeration, volume)
from .subgroups import (DEFAULT_ENUMERATION_BOUND, SubgroupClassRecord, catalog)

MODES = ("all_classes", "rho_maximal_only", "supplied")


@dataclass
class AlphaResult:
    degree: int
    rho: int
    orbit_structure: tuple[int, ...]
    alpha: Fraction
    subgroup_order: int
    rho_maximal_parent: Optional[str] = None
    class_key: Optional[str] = None
    class_size: Optional[int] = None
    case: Optional[str] = None
    children: Optional[int] = None
    label: Optional[str] = None
    orbit_partition: Optional[int] = None
    vertices: Optional[int] = None
    symmetry_copies: int = 1
    seconds: float = 0.0

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "degree": self.degree,
            "subgroup_order": self.subgroup_order,
            "class_key": self.class_key,
            "class_size": self.class_size,
            "orbit_structure": list(self.orbit_structure),
            "rho": self.rho,
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "rho_maximal_parent": self.rho_maximal_parent,
            "children": self.children,
            "case": self.case,
            "label": self.label,
            "orbit_partition": self.orbit_partition,
            "vertices": self.vertices,
            "symmetry_copies": self.symmetry_copies,
        }
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "AlphaResult":
        kw = dict(d)
        kw["alpha"] = Fraction(kw["alpha"])
        kw["orbit_structure"] = tuple(kw["orbit_structure"])
        kw.setdefault("seconds", 0.0)
        return cls(**kw)


@dataclass
class AlphaPolytope:
    """The polytope of a subgroup together with the lattice data it came from."""
    polytope: HPolytope
    basis: list[list[int]]
    weights: list[list[int]]      # orbit sums in basis coordinates
    anticanonical: list[int]
    orbits: list[list[int]] = field(repr=False)


def _check_action(G: PermGroup, cfg: LineConfiguration) -> None:
    if G.degree != len(cfg.lines):
        raise InvalidGaloisActionError(
            f"group acts on {G.degree} points but degree {cfg.degree} has {len(cfg.lines)} lines")
    for g in G.generators:
        if not preserves_gram(cfg, g):
            raise InvalidGaloisActionError("a generator does not preserve the intersection form")


def orbit_sums(G: PermGroup, cfg: LineConfiguration) -> list[tuple[int, ...]]:
    """Sum of line classes over each orbit, in the orbit order of ``G.orbits()``."""
    n = len(cfg.lines[0])
    sums = []
    for orb in G.orbits():
        s = [0] * n
        for i in orb:
            for k, x in enumerate(cfg.lines[i]):
                s[k] += x
        sums.append(tuple(s))
    return sums


def invariant_rank(G: PermGroup, cfg: LineConfiguration) -> int:
    vs = orbit_sums(G, cfg)
    return lattice.rank([[pairing(u, v) for v in vs] for u in vs])


def alpha_polytope(G: PermGroup, d: int) -> AlphaPolytope:
    check_degree(d)
    cfg = enumerate_lines(d)
    _check_action(G, cfg)
    vs = orbit_sums(G, cfg)
    basis = lattice.saturation_basis(vs)
    if lattice.max_minor_gcd(basis) != 1:
        raise SaturationError("saturated basis has index > 1")
    ws = [lattice.coordinates_in_basis(v, basis) for v in vs]
    k = lattice.coordinates_in_basis(anticanonical(d), basis)
    rows = [(0,) + tuple(w) for w in ws]
    if d <= 6:
        total = [sum(col) for col in zip(*ws)]
        ratio = Fraction(LINE_COUNT[d], d)
        assert [ratio * x for x in k] == total, "lines do not sum to a multiple of -K"
        rows.append((ratio,) + tuple(-x for x in total))
    else:
        rows.append((1,) + tuple(-x for x in k))
    return AlphaPolytope(HPolytope.from_rows(rows), basis, ws, k, G.orbits())


def _measure(P: HPolytope, symmetry: str) -> tuple[Fraction, int, int, int]:
    """(volume, affine dimension, vertex count, symmetry copies)."""
    sym = detect_coordinate_symmetry(P) if symmetry == "auto" else None
    if sym is not None and sym.blocks(P.dim):
        Q, copies = fundamental_domain(P, sym)
    else:
        Q, copies = P, 1
    V = vertex_enumeration(Q)
    dim = _affine_dimension(V.vertices)
    if dim < P.dim:
        raise DimensionDeficiencyError(f"alpha polytope has dimension {dim} in R^{P.dim}")
    return volume(Q, vpoly=V) * copies, dim, len(V), copies


def alpha_for_subgroup(G: PermGroup, d: int, symmetry: str = "auto") -> AlphaResult:
    """Exact alpha for the surface whose Galois image on the lines is ``G``."""
    if symmetry not in ("auto", "off"):
        raise ValueError(f"symmetry must be 'auto' or 'off', not {symmetry!r}")
    t0 = time.perf_counter()
    ap = alpha_polytope(G, d)
    rho = len(ap.basis)
    cfg = enumerate_lines(d)
    assert invariant_rank(G, cfg) == rho
    vol, dim, nverts, copies = _measure(ap.polytope, symmetry)
    assert dim == rho, f"polytope dimension {dim} differs from rho {rho}"
    alpha = dim * vol
    return AlphaResult(
        degree=d, rho=rho, orbit_structure=G.orbit_structure(), alpha=alpha,
        subgroup_order=G.order, vertices=nverts, symmetry_copies=copies,
        seconds=time.perf_counter() - t0)


def alpha_singular(alpha, singularity_weyl_order: int) -> Fraction:
    """alpha of a minimal desingularization, given the Weyl group order of the singularities."""
    if singularity_weyl_order <= 0:
        raise DPAlphaError(f"Weyl group order must be positive, got {singularity_weyl_order}")
    return Fraction(alpha) / singularity_weyl_order


def reflection_parent(G: PermGroup, d: int) -> PermGroup:
    """Subgroup of W(R_d) fixing every orbit sum of ``G``.

    It is generated by the reflections in roots orthogonal to the invariant
    classes, contains ``G``, has the same invariant rank, and is the unique
    largest such subgroup.
    """
    cfg = enumerate_lines(d)
    vs = orbit_sums(G, cfg)
    gens = [root_permutation(cfg, r) for r in enumerate_roots(d)
            if all(pairing(r, v) == 0 for v in vs)]
    return PermGroup(gens, len(cfg.lines))


def annotate_rho(classes: Iterable[SubgroupClassRecord], d: int) -> None:
    cfg = enumerate_lines(d)
    for rec in classes:
        if rec.rho is None:
            rec.rho = invariant_rank(rec.representative, cfg)


def rho_maximal_reduce(classes: Sequence[SubgroupClassRecord],
                       W: PermGroup) -> list[SubgroupClassRecord]:
    """Greedy reduction to one representative per rho-maximal parent.

    Repeatedly keep the remaining class of largest order (ties broken by
    key) and discard every remaining class of the same rank contained in a
    conjugate of it. Containment is tested either by sweeping the conjugates
    of the kept group or by listing its subgroups, whichever is smaller.
    """
    if any(c.rho is None for c in classes):
        raise ValueError("classes must carry rho; call annotate_rho first")
    cat = catalog(W)
    remaining = sorted(classes, key=lambda c: (-c.order, c.key))
    kept: list[SubgroupClassRecord] = []
    while remaining:
        G = remaining[0]
        cands = [H for H in remaining[1:] if H.rho == G.rho and G.order % H.order == 0]
        if G.class_size <= len(cands):
            inside = {H.class_id for H in cands if cat.contained_in_conjugate(H.class_id, G.class_id)}
        else:
            inside = cat.classes_below(G.class_id)
        children = [H for H in cands if H.class_id in inside]
        for H in children:
            H.parent_key = G.key
        G.parent_key = G.key
        G.children = len(children) + 1
        kept.append(G)
        gone = {G.class_id} | {H.class_id for H in children}
        remaining = [H for H in remaining if H.class_id not in gone]
    return kept


def orbit_partition_classes(classes: Sequence[SubgroupClassRecord], W: PermGroup) -> dict[str, bytes]:
    """Canonical form of each class's orbit partition up to W-conjugacy.

    Two partitions are equivalent when an element of W maps one onto the
    other; the canonical form is the least relabelled image over all of W.
    """
    perms = catalog(W).table.perms.astype(np.int64)
    m, n = perms.shape
    rows = np.arange(m)[:, None]
    out = {}
    for rec in classes:
        lab = np.empty(n, dtype=np.int64)
        for b, orb in enumerate(rec.representative.orbits()):
            lab[orb] = b
        k = int(lab.max()) + 1
        L = np.empty((m, n), dtype=np.int64)
        L[rows, perms] = lab[None, :]
        first = np.stack([np.argmax(L == b, axis=1) for b in range(k)], axis=1)
        relabel = np.argsort(np.argsort(first, axis=1), axis=1)
        canon = np.take_along_axis(relabel, L, axis=1).astype(np.uint8)
        out[rec.key] = min(r.tobytes() for r in np.unique(canon, axis=0))
    return out


def degree_four_label(rec: AlphaResult) -> Optional[str]:
    from .tables import DEGREE_FOUR
    for row in DEGREE_FOUR:
        if (row.rho, row.parent_order, row.maximal) == (rec.rho, rec.subgroup_order,
                                                       tuple(rec.orbit_structure)):
            return row.case
    return None


def _result_for_record(rec: SubgroupClassRecord, d: int, symmetry: str) -> AlphaResult:
    res = alpha_for_subgroup(rec.representative, d, symmetry)
    res.class_key = rec.key
    res.class_size = rec.class_size
    res.rho_maximal_parent = rec.parent_key
    return res


def run_degree(d: int, mode: str = "all_classes", groups: Optional[Sequence[PermGroup]] = None,
               labels: Optional[Sequence[str]] = None, symmetry: str = "auto",
               bound: int = DEFAULT_ENUMERATION_BOUND) -> list[AlphaResult]:
    """The alpha table of a degree, sorted by (rho, -alpha, key)."""
    check_degree(d)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    W = weyl_group(d)
    if mode == "supplied":
        if not groups:
            raise ValueError("supplied mode needs at least one group")
        results = []
        for i, G in enumerate(groups):
            if not G.is_subgroup_of(W):
                raise InvalidGaloisActionError("supplied group is not contained in the Weyl group")
            res = alpha_for_subgroup(G, d, symmetry)
            if labels is not None:
                res.label = labels[i]
            if d == 3:
                from .cubic import classify_cubic
                res.case = classify_cubic(G)
            results.append(res)
        return sorted(results, key=lambda r: (r.rho, -r.alpha, r.label or ""))

    cat = catalog(W, bound)
    classes = list(cat.classes)
    annotate_rho(classes, d)
    kept = rho_maximal_reduce(classes, W)
    if mode == "rho_maximal_only":
        results = [_result_for_record(rec, d, symmetry) for rec in kept]
        for rec, res in zip(kept, results):
            res.children = rec.children
    else:
        results = [_result_for_record(rec, d, symmetry) for rec in classes]
        by_key = {rec.key: rec for rec in kept}
        for res in results:
            if res.class_key in by_key:
                res.children = by_key[res.class_key].children
    parts = orbit_partition_classes(classes, W)
    ids = {p: i for i, p in enumerate(sorted(set(parts.values())))}
    for res in results:
        res.orbit_partition = ids[parts[res.class_key]]
    if d == 4:
        parent_case = {rec.key: degree_four_label(AlphaResult(
            d, rec.rho, rec.orbit_structure, Fraction(0), rec.order)) for rec in kept}
        for res in results:
            res.case = parent_case.get(res.rho_maximal_parent)
    return sorted(results, key=lambda r: (r.rho, -r.alpha, r.class_key or ""))
