import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from dpalpha.errors import (DimensionDeficiencyError, DimensionError, EmptyPolytopeError,
                            UnboundedError)
from dpalpha.geometry import LINE_COUNT, weyl_group
from dpalpha.lattice import determinant, identity
from dpalpha.permgroup import PermGroup
from dpalpha.pipeline import alpha_polytope
from dpalpha.polytope import (HPolytope, SymmetrySpec, detect_coordinate_symmetry, dimension,
                              fundamental_domain, monte_carlo_volume, simplex_volume,
                              vertex_enumeration, volume)


def box(widths):
    n = len(widths)
    rows = []
    for i, w in enumerate(widths):
        lo = [0] * (n + 1)
        lo[i + 1] = 1
        hi = [w] + [0] * n
        hi[i + 1] = -1
        rows += [lo, hi]
    return HPolytope.from_rows(rows)


def scaled_simplex(n, s):
    rows = []
    for i in range(n):
        r = [0] * (n + 1)
        r[i + 1] = 1
        rows.append(r)
    rows.append([s] + [-1] * n)
    return HPolytope.from_rows(rows)


def unimodular(n, rng):
    U = identity(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            U[k][i] += c * U[k][j]
    assert abs(determinant(U)) == 1
    return U


def hull_volume(V):
    return ConvexHull([[float(x) for x in v] for v in V.vertices]).volume


def test_unit_simplex():
    assert volume(scaled_simplex(3, 1)) == Fraction(1, 6)


def test_cube_vertices_and_volume():
    C = box([1, 1, 1])
    V = vertex_enumeration(C)
    assert set(V.vertices) == set(product((0, 1), repeat=3))
    assert volume(C) == 1


def test_incidence_matches_evaluation():
    P = scaled_simplex(4, 3)
    V = vertex_enumeration(P)
    for k, row in enumerate(P.inequalities):
        tight = {j for j, v in enumerate(V.vertices)
                 if row[0] + sum(a * x for a, x in zip(row[1:], v)) == 0}
        assert {j for j in range(len(V)) if V.incidence[k] >> j & 1} == tight


@given(st.lists(st.fractions(min_value=Fraction(1, 5), max_value=4, max_denominator=7),
                min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_box_volume(widths):
    expected = Fraction(1)
    for w in widths:
        expected *= w
    assert volume(box(widths)) == expected


@given(st.integers(1, 5), st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=5))
@settings(max_examples=30, deadline=None)
def test_simplex_volume(n, s):
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    assert volume(scaled_simplex(n, s)) == s ** n / fact


def test_cross_polytope():
    rows = [[1] + list(signs) for signs in product((-1, 1), repeat=3)]
    P = HPolytope.from_rows(rows)
    assert len(vertex_enumeration(P)) == 6
    assert volume(P) == Fraction(4, 3)


def test_simplex_volume_helper():
    assert simplex_volume([(0, 0), (2, 0), (0, 3)]) == 3


def test_unimodular_transforms_preserve_volume():
    rng = random.Random(7)
    P = alpha_polytope(PermGroup([], 10), 5).polytope
    assert P.dim == 5
    base = volume(P)
    for _ in range(20):
        U = unimodular(P.dim, rng)
        assert volume(P.transformed(U)) == base


def test_row_order_does_not_matter():
    P = alpha_polytope(weyl_group(4), 4).polytope
    rng = random.Random(1)
    base = volume(P)
    for _ in range(5):
        perm = list(range(len(P.inequalities)))
        rng.shuffle(perm)
        Q = P.permuted(perm)
        assert volume(Q) == base
        assert set(vertex_enumeration(Q).vertices) == set(vertex_enumeration(P).vertices)


def test_apex_rules_agree():
    for d in (4, 5, 6):
        P = alpha_polytope(PermGroup([], LINE_COUNT[d]), d).polytope
        assert volume(P, apex="min") == volume(P, apex="max")


def test_against_convex_hull():
    rng = random.Random(3)
    for _ in range(15):
        n = rng.randint(2, 4)
        rows = [[rng.randint(1, 6)] + [rng.randint(-3, 3) for _ in range(n)] for _ in range(n + 5)]
        rows += [[2] + [(-1) ** (i % 2) if j == i // 2 else 0 for j in range(n)] for i in range(2 * n)]
        P = HPolytope.from_rows(rows)
        V = vertex_enumeration(P)
        assert float(volume(P)) == pytest.approx(hull_volume(V), rel=1e-9)


def test_monte_carlo_within_four_sigma():
    P = scaled_simplex(3, 2)
    est, err = monte_carlo_volume(P, 200_000, seed=0)
    assert abs(est - float(volume(P))) < 4 * err


def test_symmetry_detection():
    sym = detect_coordinate_symmetry(scaled_simplex(4, 1))
    assert sym is not None
    assert sorted(map(sorted, sym.blocks(4))) == [[0, 1, 2, 3]]
    assert detect_coordinate_symmetry(box([1, 2])) is None


def test_symmetry_reduction_matches_full_volume():
    P = box([3, 3, 1])
    sym = detect_coordinate_symmetry(P)
    Q, copies = fundamental_domain(P, sym)
    assert copies == 2
    assert volume(Q) * copies == volume(P) == volume(P, sym)


def test_symmetry_must_preserve_rows():
    with pytest.raises(ValueError):
        volume(box([1, 2]), SymmetrySpec(((1, 0),)))


def test_unbounded():
    P = HPolytope.from_rows([[0, 1, 0], [0, 0, 1]])
    with pytest.raises(UnboundedError) as info:
        vertex_enumeration(P)
    assert info.value.ray is not None


def test_empty():
    P = HPolytope.from_rows([[-1, 1], [0, -1]])
    with pytest.raises(EmptyPolytopeError):
        vertex_enumeration(P)


def test_lower_dimensional():
    P = box([1, 1]).with_rows([[0, 1, -1], [0, -1, 1]])
    assert dimension(P) == 1
    with pytest.raises(DimensionDeficiencyError):
        volume(P)


def test_dimension_examples():
    assert dimension(box([1, 1, 1])) == 3
    assert dimension(HPolytope.from_rows([[0, 1], [0, -1]])) == 0


def test_row_length_mismatch():
    with pytest.raises(DimensionError):
        HPolytope.from_rows([[1, 0], [1, 0, 0]])
