"""Picard lattice, (-1)-curves and the Weyl group action for degrees 1..7.

Classes live in the blow-up basis ``(H, E_1, ..., E_{9-d})`` with the
diagonal form ``(+1, -1, ..., -1)``; the anticanonical class is
``3H - E_1 - ... - E_{9-d}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import isqrt
from typing import Sequence

from .errors import DimensionError, InconsistencyError, UnsupportedDegreeError
from .lattice import rank

PicVector = tuple[int, ...]

DEGREES = range(1, 8)

# N_{d,i}: number of other lines meeting a fixed line with multiplicity i.
# Degree 7 is absent: its three lines are not all equivalent.
INTERSECTION_PROFILE = {
    1: (56, 126, 56, 1),
    2: (27, 27, 1, 0),
    3: (16, 10, 0, 0),
    4: (10, 5, 0, 0),
    5: (6, 3, 0, 0),
    6: (3, 2, 0, 0),
}
LINE_COUNT = {1: 240, 2: 56, 3: 27, 4: 16, 5: 10, 6: 6, 7: 3}
WEYL_ORDER = {1: 696729600, 2: 2903040, 3: 51840, 4: 1920, 5: 120, 6: 12, 7: 2}
ROOT_SYSTEM = {1: "E8", 2: "E7", 3: "E6", 4: "D5", 5: "A4", 6: "A2+A1", 7: "A1"}


def check_degree(d: int) -> int:
    if not isinstance(d, int) or d not in DEGREES:
        raise UnsupportedDegreeError(f"unsupported degree {d!r}; expected 1..7")
    return d


def pairing(u: Sequence[int], v: Sequence[int]) -> int:
    """Intersection number of two classes."""
    if len(u) != len(v):
        raise DimensionError(f"cannot pair vectors of length {len(u)} and {len(v)}")
    if not u:
        return 0
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def anticanonical(d: int) -> PicVector:
    check_degree(d)
    return (3,) + (-1,) * (9 - d)


def _solve_classes(d: int, self_int: int, degree: int) -> list[PicVector]:
    """All v with <v,v> = self_int and <v,-K> = degree.

    Cauchy-Schwarz on the E-part bounds the H-coefficient, then the E-part
    is found by a depth-first search over a shrinking square budget.
    """
    r = 9 - d
    out = []
    # (3a - degree)^2 <= r * (a^2 - self_int) keeps a in [-1, 7] for lines
    # and [-4, 4] for roots when r <= 8
    a_lo, a_hi = -10, 10
    for a in range(a_lo, a_hi + 1):
        budget = a * a - self_int            # sum of b_i^2
        total = 3 * a - degree               # sum of b_i
        if budget < 0 or total * total > r * budget:
            continue
        bound = isqrt(budget)

        def rec(prefix, left_sq, left_sum, slots):
            if slots == 0:
                if left_sq == 0 and left_sum == 0:
                    out.append((a,) + tuple(-b for b in prefix))
                return
            for b in range(-bound, bound + 1):
                sq = left_sq - b * b
                if sq < 0:
                    continue
                s = left_sum - b
                if s * s > (slots - 1) * sq:
                    continue
                rec(prefix + (b,), sq, s, slots - 1)

        # v = (a, -b_1, ..., -b_r) so that <v,-K> = 3a - sum b_i
        rec((), budget, total, r)
    return sorted(out)


@dataclass(frozen=True)
class LineConfiguration:
    degree: int
    lines: tuple[PicVector, ...]
    gram: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return 10 - self.degree

    def __len__(self) -> int:
        return len(self.lines)

    def index(self, v: Sequence[int]) -> int:
        return self._lookup[tuple(v)]

    @property
    def _lookup(self) -> dict[PicVector, int]:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {v: i for i, v in enumerate(self.lines)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def profile(self, i: int) -> list[int]:
        """For each line, the number of other lines it meets with multiplicity ``i``."""
        return [sum(1 for k, x in enumerate(row) if k != j and x == i)
                for j, row in enumerate(self.gram)]


@lru_cache(maxsize=None)
def enumerate_lines(d: int) -> LineConfiguration:
    """The (-1)-curve classes of a degree ``d`` surface in lexicographic order."""
    check_degree(d)
    lines = tuple(_solve_classes(d, -1, 1))
    gram = tuple(tuple(pairing(u, v) for v in lines) for u in lines)
    return LineConfiguration(d, lines, gram)


@lru_cache(maxsize=None)
def enumerate_roots(d: int) -> tuple[PicVector, ...]:
    """The (-2)-classes orthogonal to the anticanonical class."""
    check_degree(d)
    return tuple(_solve_classes(d, -2, 0))


def simple_roots(d: int) -> list[PicVector]:
    check_degree(d)
    r = 9 - d
    roots = []
    for i in range(1, r):
        v = [0] * (r + 1)
        v[i], v[i + 1] = 1, -1
        roots.append(tuple(v))
    if r >= 3:
        roots.append((1, -1, -1, -1) + (0,) * (r - 3))
    return roots


def reflect(v: Sequence[int], root: Sequence[int]) -> PicVector:
    """Reflection in a (-2)-class: v + <v, r> r."""
    c = pairing(v, root)
    return tuple(a + c * b for a, b in zip(v, root))


def root_permutation(cfg: LineConfiguration, root: Sequence[int]) -> tuple[int, ...]:
    return tuple(cfg.index(reflect(v, root)) for v in cfg.lines)


@dataclass(frozen=True)
class WeylAction:
    degree: int
    generators: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def weyl_generators(d: int) -> WeylAction:
    """Simple reflections acting as permutations (0-based) of the line list."""
    cfg = enumerate_lines(d)
    return WeylAction(d, tuple(root_permutation(cfg, r) for r in simple_roots(d)))


def weyl_group(d: int):
    """W(R_d) as a permutation group on the line list."""
    return _weyl_group(check_degree(d))


@lru_cache(maxsize=None)
def _weyl_group(d: int):
    from .permgroup import PermGroup
    act = weyl_generators(d)
    return PermGroup(act.generators, LINE_COUNT[d])


def point_permutation(d: int, images: Sequence[int]) -> tuple[int, ...]:
    """Permutation of lines induced by permuting the blown-up points.

    ``images`` is 1-based: point ``i`` goes to ``images[i-1]``.
    """
    cfg = enumerate_lines(d)
    r = 9 - d
    if sorted(images) != list(range(1, r + 1)):
        raise DimensionError(f"expected a permutation of 1..{r}")
    perm = []
    for v in cfg.lines:
        w = [v[0]] + [0] * r
        for i in range(r):
            w[images[i]] = v[i + 1]
        perm.append(cfg.index(w))
    return tuple(perm)


def preserves_gram(cfg: LineConfiguration, perm: Sequence[int]) -> bool:
    g = cfg.gram
    n = len(g)
    return all(g[perm[i]][perm[j]] == g[i][j] for i in range(n) for j in range(i, n))


def reconstruct_gram_from_group(W, d: int) -> list[list[int]]:
    """Recover the intersection matrix from the Weyl group alone.

    Unordered pairs of distinct lines with a fixed intersection number form a
    single orbit, of size ``N_d * N_{d,i} / 2``; orbit sizes therefore
    identify the intersection numbers. Two orbits of equal size (degrees 1
    and 2) are told apart by the rank of the resulting matrix.
    """
    check_degree(d)
    if d >= 6:
        raise UnsupportedDegreeError("pair-orbit reconstruction needs degree <= 5")
    n = LINE_COUNT[d]
    if W.degree != n:
        raise InconsistencyError(f"group acts on {W.degree} points, expected {n}")
    orbit_of = {}
    orbits = []
    for pair in combinations(range(n), 2):
        if pair in orbit_of:
            continue
        idx = len(orbits)
        orbit_of[pair] = idx
        members = [pair]
        stack = [pair]
        while stack:
            a, b = stack.pop()
            for g in W.generators:
                x, y = g[a], g[b]
                q = (x, y) if x < y else (y, x)
                if q not in orbit_of:
                    orbit_of[q] = idx
                    members.append(q)
                    stack.append(q)
        orbits.append(members)

    by_size: dict[int, list[int]] = {}
    for i, cnt in enumerate(INTERSECTION_PROFILE[d]):
        if cnt:
            by_size.setdefault(n * cnt // 2, []).append(i)
    if sorted(len(o) for o in orbits) != sorted(s for s, v in by_size.items() for _ in v):
        raise InconsistencyError(
            f"pair-orbit sizes {sorted(len(o) for o in orbits)} do not match degree {d}")

    def build(assign):
        M = [[-1 if i == j else None for j in range(n)] for i in range(n)]
        for members, val in zip(orbits, assign):
            for a, b in members:
                M[a][b] = M[b][a] = val
        return M

    choices = [by_size[len(o)] for o in orbits]
    # permutations of the intersection values among orbits of equal size
    candidates = []

    def assign(k, used, acc):
        if k == len(orbits):
            candidates.append(list(acc))
            return
        for val in choices[k]:
            if (len(orbits[k]), val) not in used:
                assign(k + 1, used | {(len(orbits[k]), val)}, acc + [val])

    assign(0, frozenset(), [])
    good = [M for M in map(build, candidates) if rank(M) == 10 - d]
    if len(good) != 1:
        raise InconsistencyError(f"{len(good)} candidate matrices have rank {10 - d}")
    return good[0]
