"""Exact rational polytopes: vertex enumeration, dimension and volume.

Inequality rows follow the polymake convention ``(a_0, a_1, ..., a_n)``
meaning ``a_0 + a_1 x_1 + ... + a_n x_n >= 0``.

Vertices come from a double description run on the homogenized cone
``{(t, x) : a_0 t + a.x >= 0, t >= 0}``. Volumes come from a pulling
(pyramid) decomposition over the face lattice: the volume of a face is the
sum of pyramids from its apex over the facets missing the apex. Each face
volume is memoized by vertex set and measured in the coordinates of the
pivot columns of its canonical direction basis, which keeps every quantity
rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import factorial, gcd, lcm, prod
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .errors import (DimensionDeficiencyError, DimensionError, EmptyPolytopeError,
                     UnboundedError)
from .lattice import rank

Row = tuple[Fraction, ...]


def _frac_row(row) -> Row:
    return tuple(Fraction(x) for x in row)


def _primitive(row: Sequence) -> tuple[int, ...]:
    """Scale a rational row to coprime integers (same sign)."""
    den = reduce(lcm, (Fraction(x).denominator for x in row), 1)
    ints = [int(Fraction(x) * den) for x in row]
    g = reduce(gcd, ints, 0)
    return tuple(v // g for v in ints) if g > 1 else tuple(ints)


@dataclass(frozen=True)
class HPolytope:
    dim: int
    inequalities: tuple[Row, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], dim: Optional[int] = None) -> "HPolytope":
        rows = tuple(_frac_row(r) for r in rows)
        if dim is None:
            if not rows:
                raise DimensionError("cannot infer dimension from zero inequalities")
            dim = len(rows[0]) - 1
        for r in rows:
            if len(r) != dim + 1:
                raise DimensionError(f"inequality {r} does not have {dim + 1} entries")
        return cls(dim, rows)

    def integer_rows(self) -> list[tuple[int, ...]]:
        return [_primitive(r) for r in self.inequalities]

    def contains(self, x: Sequence) -> bool:
        return all(r[0] + sum(a * b for a, b in zip(r[1:], x)) >= 0 for r in self.inequalities)

    def with_rows(self, extra: Iterable[Sequence]) -> "HPolytope":
        return HPolytope.from_rows(list(self.inequalities) + list(extra), self.dim)

    def transformed(self, U: Sequence[Sequence[int]]) -> "HPolytope":
        """Substitute x = U y; a unimodular U preserves the volume."""
        n = self.dim
        rows = []
        for r in self.inequalities:
            a = r[1:]
            rows.append((r[0],) + tuple(sum(a[i] * U[i][j] for i in range(n)) for j in range(n)))
        return HPolytope.from_rows(rows, n)

    def permuted(self, perm: Sequence[int]) -> "HPolytope":
        """Reorder the inequality list."""
        return HPolytope(self.dim, tuple(self.inequalities[i] for i in perm))


@dataclass(frozen=True)
class VPolytope:
    dim: int
    vertices: tuple[Row, ...]
    source: Optional[HPolytope] = field(default=None, repr=False, compare=False)
    incidence: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SymmetrySpec:
    """Coordinate permutations (0-based images) preserving the inequality set."""
    generators: tuple[tuple[int, ...], ...]

    def blocks(self, n: int) -> list[list[int]]:
        from .permgroup import PermGroup
        G = PermGroup(self.generators, n)
        blocks = [o for o in G.orbits() if len(o) > 1]
        if G.order != prod(factorial(len(b)) for b in blocks):
            raise ValueError("symmetry reduction needs the full symmetric group on each block")
        return blocks

    def validate(self, P: HPolytope) -> None:
        rows = set(P.integer_rows())
        for g in self.generators:
            if len(g) != P.dim:
                raise DimensionError(f"symmetry generator acts on {len(g)} coordinates, expected {P.dim}")
            if _permute_rows(rows, g) != rows:
                raise ValueError("symmetry generator does not preserve the inequality set")


def _permute_rows(rows: set, g: Sequence[int]) -> set:
    out = set()
    for r in rows:
        new = [0] * len(r)
        new[0] = r[0]
        for i, gi in enumerate(g):
            new[gi + 1] = r[i + 1]
        out.add(tuple(new))
    return out


def detect_coordinate_symmetry(P: HPolytope) -> Optional[SymmetrySpec]:
    """Blocks of coordinates permuted freely by the inequality set, via transpositions."""
    n = P.dim
    rows = set(P.integer_rows())
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if find(i) == find(j):
                continue
            t = list(range(n))
            t[i], t[j] = j, i
            if _permute_rows(rows, t) == rows:
                parent[find(j)] = find(i)
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    gens = []
    for b in blocks.values():
        for x, y in zip(b, b[1:]):
            t = list(range(n))
            t[x], t[y] = y, x
            gens.append(tuple(t))
    return SymmetrySpec(tuple(gens)) if gens else None


# double description

def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _independent_rows(A: list[tuple[int, ...]]) -> list[int]:
    """Indices of a greedy maximal independent subset of rows (in order)."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    chosen = []
    for idx, row in enumerate(A):
        v = [Fraction(x) for x in row]
        for b, p in zip(basis, pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            continue
        v = [x / v[p] for x in v]
        basis.append(v)
        pivots.append(p)
        chosen.append(idx)
        if len(chosen) == len(row):
            break
    return chosen


def _kernel(A: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Integer basis of the right kernel of A (n columns)."""
    from .lattice import left_kernel, transpose
    if not A:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return [tuple(r) for r in left_kernel(transpose(A))]


def _inverse_columns(B: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Columns of B^-1, each scaled to a primitive integer vector."""
    D = len(B)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(D)]
         for i, row in enumerate(B)]
    for c in range(D):
        piv = next(i for i in range(c, D) if M[i][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(D):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    inv = [row[D:] for row in M]
    return [_primitive([inv[i][j] for i in range(D)]) for j in range(D)]


def _cone_rays(A: list[tuple[int, ...]]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Extreme rays of the pointed cone {y : A y >= 0} (A of full column rank).

    Returns rays and their zero sets as bitmasks over the rows of A.
    """
    D = len(A[0])
    init = _independent_rows(A)
    assert len(init) == D
    rays = _inverse_columns([A[i] for i in init])
    zeros = []
    full_init = sum(1 << i for i in init)
    for j in range(D):
        zeros.append(full_init & ~(1 << init[j]))
    words = (len(A) + 63) // 64
    init_set = set(init)
    for idx, a in enumerate(A):
        if idx in init_set:
            continue
        vals = [_dot(a, r) for r in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        bit = 1 << idx
        if not minus:
            zeros = [z | bit if vals[i] == 0 else z for i, z in enumerate(zeros)]
            continue
        if plus:
            zarr = np.array([[(z >> (64 * w)) & 0xFFFFFFFFFFFFFFFF for w in range(words)]
                             for z in zeros], dtype=np.uint64)
            pairs = kernels.adjacent_pairs(zarr, plus, minus, D - 2)
        else:
            pairs = ()
        new_rays, new_zeros = [], []
        for i, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[i])
                new_zeros.append(zeros[i])
            elif v == 0:
                new_rays.append(rays[i])
                new_zeros.append(zeros[i] | bit)
        for p, n in pairs:
            vp, vn = vals[p], vals[n]
            r = [vp * y - vn * x for x, y in zip(rays[p], rays[n])]
            g = reduce(gcd, r, 0)
            new_rays.append(tuple(x // g for x in r))
            new_zeros.append((zeros[p] & zeros[n]) | bit)
        rays, zeros = new_rays, new_zeros
    return rays, zeros


@dataclass
class _Generators:
    vertices: list[Row]
    rays: list[tuple[int, ...]]
    lineality: list[tuple[int, ...]]
    tight: list[int]    # per vertex: bitmask of tight rows of the homogenized system


def _generators(P: HPolytope) -> _Generators:
    n = P.dim
    A = [(1,) + (0,) * n] + P.integer_rows()
    lineality = _kernel(A, n + 1)
    if lineality:
        # restrict to a complement of the lineality space to get a pointed cone
        A = A + [tuple(l) for l in lineality] + [tuple(-x for x in l) for l in lineality]
    rays, zeros = _cone_rays(A)
    verts, recession = [], []
    for r, z in zip(rays, zeros):
        if r[0] > 0:
            verts.append((tuple(Fraction(x, r[0]) for x in r[1:]), z))
        else:
            recession.append(r[1:])
    verts.sort()
    return _Generators([v for v, _ in verts], recession, [l[1:] for l in lineality],
                       [z for _, z in verts])


def vertex_enumeration(P: HPolytope) -> VPolytope:
    """Exact vertex set of a bounded polytope, sorted lexicographically."""
    gens = _generators(P)
    if not gens.vertices:
        raise EmptyPolytopeError("the inequality system has no solution")
    if gens.rays or gens.lineality:
        ray = (gens.rays or gens.lineality)[0]
        raise UnboundedError(f"polyhedron is unbounded along {list(ray)}", ray=tuple(ray))
    # row k of P is row k + 1 of the homogenized system
    incidence = [0] * len(P.inequalities)
    for j, z in enumerate(gens.tight):
        z >>= 1
        while z:
            low = z & -z
            k = low.bit_length() - 1
            if k < len(incidence):
                incidence[k] |= 1 << j
            z ^= low
    return VPolytope(P.dim, tuple(gens.vertices), P, tuple(incidence))


def dimension(P: HPolytope) -> int:
    """Affine dimension of the solution set."""
    gens = _generators(P)
    if not gens.vertices:
        raise EmptyPolytopeError("the inequality system has no solution")
    rows = [[1] + list(v) for v in gens.vertices]
    rows += [[0] + list(r) for r in gens.rays + gens.lineality]
    den = reduce(lcm, (x.denominator if isinstance(x, Fraction) else 1 for r in rows for x in r), 1)
    return rank([[int(x * den) for x in r] for r in rows]) - 1


def _affine_dimension(vertices: Sequence[Row]) -> int:
    if not vertices:
        return -1
    v0 = vertices[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in vertices[1:]]
    if not diffs:
        return 0
    den = reduce(lcm, (x.denominator for r in diffs for x in r), 1)
    return rank([[int(x * den) for x in r] for r in diffs])


# volume

def _rref(vectors: list[list[Fraction]]) -> tuple[tuple[int, ...], list[list[Fraction]]]:
    M = [list(v) for v in vectors]
    n = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return tuple(pivots), M[:r]


def _det(M: list[list[Fraction]]) -> Fraction:
    M = [list(r) for r in M]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        p = M[c][c]
        d *= p
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / p
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return d


class _PullingVolume:
    def __init__(self, V: VPolytope, apex: str = "min"):
        self.verts = V.vertices
        self.rows = V.source.inequalities
        self.inc = V.incidence
        self.apex = apex
        self.memo: dict[int, Fraction] = {}

    def _apex(self, mask: int) -> int:
        if self.apex == "min":
            return (mask & -mask).bit_length() - 1
        return mask.bit_length() - 1

    def _facets(self, mask: int) -> list[tuple[int, int]]:
        cands: dict[int, int] = {}
        for i, z in enumerate(self.inc):
            t = z & mask
            if t and t != mask and t not in cands:
                cands[t] = i
        items = sorted(cands.items(), key=lambda kv: -kv[0].bit_count())
        kept: list[tuple[int, int]] = []
        for t, i in items:
            if not any(t & k == t for k, _ in kept):
                kept.append((t, i))
        return kept

    def face_volume(self, mask: int, k: int, pivots, R) -> Fraction:
        """Volume of the face's projection onto its pivot coordinates."""
        if k == 0:
            return Fraction(1)
        got = self.memo.get(mask)
        if got is not None:
            return got
        a_idx = self._apex(mask)
        apex = self.verts[a_idx]
        total = Fraction(0)
        for g_mask, i in self._facets(mask):
            if g_mask >> a_idx & 1:
                continue
            row = self.rows[i]
            a = row[1:]
            c = [sum(x * y for x, y in zip(a, Rj)) for Rj in R]
            js = next(j for j, x in enumerate(c) if x != 0)
            height = row[0] + sum(x * y for x, y in zip(a, apex))
            sub = [[x - (c[j] / c[js]) * y for x, y in zip(R[j], R[js])]
                   for j in range(k) if j != js]
            if sub:
                g_piv, g_R = _rref(sub)
            else:
                g_piv, g_R = (), []
            g_vol = self.face_volume(g_mask, k - 1, g_piv, g_R)
            cols = [p for j, p in enumerate(pivots) if j != js]
            proj = abs(_det([[r[c_] for c_ in cols] for r in g_R])) if g_R else Fraction(1)
            total += height * g_vol * proj / abs(c[js])
        vol = total / k
        self.memo[mask] = vol
        return vol

    def volume(self) -> Fraction:
        n = len(self.verts[0])
        full = (1 << len(self.verts)) - 1
        R = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        return self.face_volume(full, n, tuple(range(n)), R)


def fundamental_domain(P: HPolytope, sym: SymmetrySpec) -> tuple[HPolytope, int]:
    """Restrict to x_{b1} <= x_{b2} <= ... on each symmetric block.

    Returns the restricted polytope and the number of copies it tiles.
    """
    sym.validate(P)
    blocks = sym.blocks(P.dim)
    extra = []
    for b in blocks:
        for x, y in zip(b, b[1:]):
            row = [0] * (P.dim + 1)
            row[y + 1], row[x + 1] = 1, -1
            extra.append(row)
    return P.with_rows(extra), prod(factorial(len(b)) for b in blocks)


def volume(P: HPolytope, sym: Optional[SymmetrySpec] = None, apex: str = "min",
           vpoly: Optional[VPolytope] = None) -> Fraction:
    """Exact Euclidean volume of a bounded full-dimensional polytope.

    With ``sym`` the volume of the fundamental domain is computed and
    multiplied by the number of its images. ``apex`` selects the pulling
    order ("min" or "max" vertex), giving two independent triangulations.
    """
    if sym is not None:
        Q, copies = fundamental_domain(P, sym)
        return volume(Q, None, apex) * copies
    V = vpoly if vpoly is not None else vertex_enumeration(P)
    if _affine_dimension(V.vertices) < P.dim:
        raise DimensionDeficiencyError(
            f"polytope has dimension {_affine_dimension(V.vertices)} in R^{P.dim}")
    if apex not in ("min", "max"):
        raise ValueError(f"unknown apex rule {apex!r}")
    return _PullingVolume(V, apex).volume()


def simplex_volume(points: Sequence[Sequence]) -> Fraction:
    """|det(p_i - p_0)| / n! for n+1 points in R^n."""
    p0 = points[0]
    M = [[Fraction(a) - Fraction(b) for a, b in zip(p, p0)] for p in points[1:]]
    return abs(_det(M)) / factorial(len(M))


def monte_carlo_volume(P: HPolytope, samples: int, seed: int) -> tuple[float, float]:
    """Rejection-sampling estimate in the vertex bounding box; returns (estimate, std error)."""
    V = vertex_enumeration(P)
    pts = np.array([[float(x) for x in v] for v in V.vertices])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    box = float(np.prod(hi - lo))
    if box == 0.0:
        raise DimensionDeficiencyError("polytope has zero-width bounding box")
    A = np.array([[float(x) for x in r] for r in P.inequalities])
    rng = np.random.default_rng(seed)
    hits = 0
    chunk = 200_000
    left = samples
    while left > 0:
        m = min(chunk, left)
        x = lo + (hi - lo) * rng.random((m, P.dim))
        hits += int(((A[:, 0] + x @ A[:, 1:].T) >= 0).all(axis=1).sum())
        left -= m
    p = hits / samples
    return box * p, box * (p * (1 - p) / samples) ** 0.5
