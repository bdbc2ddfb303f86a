"""Case labels for cubic surfaces from the Galois image on the 27 lines.

A subgroup is matched to a rho-maximal case by its invariant rank, its
number of fixed lines, and whether its orbits can be merged into the
case's maximal orbit structure. Cases II.ii and II.iii share all three;
they are told apart by whether some union of orbits is six pairwise skew
lines.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Optional, Sequence

from .errors import ClassificationError
from .geometry import enumerate_lines
from .permgroup import PermGroup
from .pipeline import invariant_rank, reflection_parent
from .tables import CUBIC, CaseRow


def merges_into(parts: Sequence[int], bins: Sequence[int]) -> bool:
    """Can the multiset ``parts`` be split into groups whose sums are exactly ``bins``?"""
    if sum(parts) != sum(bins):
        return False
    parts = sorted(parts, reverse=True)
    room = sorted(bins, reverse=True)

    def place(i: int) -> bool:
        if i == len(parts):
            return all(r == 0 for r in room)
        tried = set()
        for j, r in enumerate(room):
            if r >= parts[i] and r not in tried:
                tried.add(r)
                room[j] -= parts[i]
                if place(i + 1):
                    return True
                room[j] += parts[i]
        return False

    return place(0)


def has_skew_six(G: PermGroup) -> bool:
    """Is some union of G-orbits a set of six pairwise skew lines?"""
    gram = enumerate_lines(3).gram
    small = [o for o in G.orbits() if len(o) <= 6]
    for k in range(1, len(small) + 1):
        for combo in combinations(small, k):
            pts = [p for o in combo for p in o]
            if len(pts) == 6 and all(gram[a][b] == 0 for a, b in combinations(pts, 2)):
                return True
    return False


def candidate_cases(G: PermGroup) -> list[CaseRow]:
    cfg = enumerate_lines(3)
    rho = invariant_rank(G, cfg)
    structure = G.orbit_structure()
    fixed = structure.count(1)
    return [row for row in CUBIC
            if row.rho == rho and row.rational_lines == fixed
            and merges_into(structure, row.maximal)]


def classify_cubic(G: PermGroup) -> str:
    if G.degree != 27:
        raise ClassificationError(f"expected a group on the 27 lines, got degree {G.degree}")
    rows = candidate_cases(G)
    labels = {r.case for r in rows}
    if labels == {"II.ii", "II.iii"}:
        return "II.ii" if has_skew_six(G) else "II.iii"
    if len(labels) != 1:
        raise ClassificationError(
            f"orbit structure {list(G.orbit_structure())} matches cases {sorted(labels) or 'none'}")
    return labels.pop()


def case_from_parent(G: PermGroup) -> Optional[str]:
    """Independent label: the order and orbits of the rho-maximal parent."""
    P = reflection_parent(G, 3)
    key = (P.order, P.orbit_structure())
    for row in CUBIC:
        if (row.parent_order, row.maximal) == key:
            return row.case
    return None


def case_row(label: str) -> CaseRow:
    for row in CUBIC:
        if row.case == label:
            return row
    raise KeyError(label)


def case_census(groups: Sequence[PermGroup]) -> Counter:
    return Counter(classify_cubic(G) for G in groups)
