import random
from collections import Counter

import pytest

from dpalpha.cubic import (case_census, case_from_parent, case_row, classify_cubic, has_skew_six,
                           merges_into)
from dpalpha.errors import ClassificationError
from dpalpha.geometry import weyl_group
from dpalpha.permgroup import PermGroup
from dpalpha.pipeline import alpha_for_subgroup
from dpalpha.shipped import load_shipped
from dpalpha.tables import CUBIC

CASES = [row.case for row in CUBIC]


def test_table_shape():
    assert len(CUBIC) == 17
    assert len(set(CASES)) == 17
    assert sum(row.classes for row in CUBIC) == 350


@pytest.mark.parametrize("case", CASES)
def test_case_groups(case):
    G = load_shipped(3, f"case_{case}")
    row = case_row(case)
    assert classify_cubic(G) == case
    assert case_from_parent(G) == case
    assert G.order == row.parent_order
    assert G.orbit_structure() == row.maximal
    res = alpha_for_subgroup(G, 3)
    assert (res.rho, res.alpha) == (row.rho, row.alpha)


@pytest.mark.parametrize("name,case", [("trivial", "VII"), ("reflection", "VI"),
                                       ("s3xs3", "III.ii"), ("s5", "III.v"), ("s6", "II.ii"),
                                       ("s4", "IV.i"), ("weyl", "I")])
def test_named_groups(name, case):
    assert classify_cubic(load_shipped(3, name)) == case


def test_skew_six_separates_cases():
    assert has_skew_six(load_shipped(3, "s6"))
    assert not has_skew_six(load_shipped(3, "case_II.iii"))


def test_random_subgroups_against_parent_oracle():
    W = weyl_group(3)
    rng = random.Random(6)
    seen = Counter()
    for _ in range(300):
        gens = [W.random_element(rng) for _ in range(rng.randint(1, 2))]
        # random powers give smaller groups more often
        gens = [PermGroup([g], 27).random_element(rng) for g in gens]
        G = PermGroup(gens, 27)
        label = classify_cubic(G)
        assert label == case_from_parent(G)
        seen[label] += 1
    assert len(seen) >= 5


def test_census():
    groups = [load_shipped(3, n) for n in ("trivial", "trivial", "s6")]
    assert case_census(groups) == Counter({"VII": 2, "II.ii": 1})


def test_merges_into():
    assert merges_into([1, 1, 2], [2, 2])
    assert not merges_into([3, 1], [2, 2])
    assert merges_into([6, 6, 15], [27])
    assert not merges_into([1, 2], [4])


def test_wrong_degree():
    with pytest.raises(ClassificationError):
        classify_cubic(PermGroup([], 16))


def test_not_in_weyl_group():
    # a transposition of two intersecting lines is no Galois image
    with pytest.raises(ClassificationError):
        classify_cubic(PermGroup([(1, 0) + tuple(range(2, 27))], 27))
