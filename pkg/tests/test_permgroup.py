import random
from itertools import permutations

import pytest

from dpalpha.errors import (ConjugacyUndecided, ContainmentError, MalformedPermutationError,
                            ParseError)
from dpalpha.geometry import enumerate_lines, root_permutation, weyl_generators, weyl_group
from dpalpha.permgroup import (PermGroup, are_conjugate, compose, conjugate, contained_in_conjugate,
                               element_order, format_cycles, group_from_generators, inverse,
                               normalizer_order, orbits, parse_cycles, read_generator_file,
                               write_generator_file)
from dpalpha.shipped import load_shipped


def test_compose_applies_right_first():
    p = (1, 2, 0)
    q = (1, 0, 2)
    assert compose(p, q) == tuple(p[q[i]] for i in range(3))
    assert compose(p, inverse(p)) == (0, 1, 2)
    assert conjugate(q, p) == compose(compose(q, p), inverse(q))


def test_element_order():
    assert element_order((1, 2, 0, 4, 3)) == 6
    assert element_order((0, 1)) == 1


def test_parse_and_format_round_trip():
    p = parse_cycles("(1,2)(5,7)", 8)
    assert p == (1, 0, 2, 3, 6, 5, 4, 7)
    assert format_cycles(p) == "(1,2)(5,7)"
    assert parse_cycles("()", 3) == (0, 1, 2)
    assert parse_cycles("(1 3 2)", 3) == parse_cycles("(1,3,2)", 3)


@pytest.mark.parametrize("text", ["(1,2", "(1,1)", "(0,2)", "(1,9)", "(a,b)", "(1,2)x", "(1,2)(2,3)"])
def test_parse_rejects_malformed(text):
    with pytest.raises(MalformedPermutationError):
        parse_cycles(text, 8)


def test_non_bijection_rejected():
    with pytest.raises(MalformedPermutationError):
        PermGroup([(0, 0, 1)], 3)


def test_generator_file_round_trip(tmp_path):
    gens = [parse_cycles("(1,2,3)", 5), parse_cycles("(4,5)", 5)]
    path = tmp_path / "g.gens"
    write_generator_file(path, gens, comment="test group")
    assert read_generator_file(path, 5) == gens
    assert path.read_text().startswith("# test group")


def test_generator_file_reports_line(tmp_path):
    path = tmp_path / "bad.gens"
    path.write_text("# header\n\n(1,2)\n(1,2,\n")
    with pytest.raises(ParseError) as info:
        read_generator_file(path, 4)
    assert info.value.line == 4


def test_trivial_group():
    G = group_from_generators([], 27)
    assert G.order == 1
    assert orbits(G) == [[i] for i in range(27)]


@pytest.mark.parametrize("d,order", [(4, 1920), (3, 51840)])
def test_weyl_orders_from_generators(d, order):
    G = group_from_generators(weyl_generators(d).generators, len(enumerate_lines(d).lines))
    assert G.order == order
    assert all(G.contains(g) for g in G.generators)


def test_order_is_product_of_transversals():
    W = weyl_group(2)
    prod = 1
    for s in W.transversal_sizes():
        prod *= s
    assert prod == W.order == 2903040


def test_membership():
    S4 = PermGroup([(1, 0, 2, 3), (1, 2, 3, 0)], 4)
    A4 = PermGroup([(1, 2, 0, 3), (0, 2, 3, 1)], 4)
    assert S4.order == 24 and A4.order == 12
    assert (1, 0, 2, 3) in S4 and (1, 0, 2, 3) not in A4
    assert A4.is_subgroup_of(S4)
    assert sorted(A4.elements()) == sorted(set(p for p in S4.elements() if p in A4))


def test_orbits_are_partition_and_stable():
    G = load_shipped(3, "s5")
    orbs = G.orbits()
    pts = sorted(p for o in orbs for p in o)
    assert pts == list(range(27))
    for o in orbs:
        for g in G.generators:
            assert {g[p] for p in o} == set(o)
    assert [len(o) for o in orbs] == sorted(len(o) for o in orbs)


def test_orbit_examples():
    assert weyl_group(3).orbit_structure() == (27,)
    assert load_shipped(3, "s6").orbit_structure() == (6, 6, 15)


def test_random_elements_are_members():
    W = weyl_group(1)
    rng = random.Random(0)
    for _ in range(20):
        assert W.contains(W.random_element(rng))


def test_are_conjugate_identity_witness():
    W = weyl_group(4)
    H = load_shipped(4, "s4")
    ok, g = are_conjugate(W, H, H)
    assert ok and g == tuple(range(16))


def test_point_stabilizers_are_conjugate():
    W = weyl_group(5)
    stab = [PermGroup([g for g in W.elements() if g[i] == i], 10) for i in (0, 7)]
    ok, g = are_conjugate(W, stab[0], stab[1])
    assert ok
    assert stab[0].conjugated(g).equals(stab[1])


def test_reflections_conjugate_in_e6():
    cfg = enumerate_lines(3)
    W = weyl_group(3)
    H1 = PermGroup([root_permutation(cfg, (0, 1, -1, 0, 0, 0, 0))], 27)
    H2 = PermGroup([root_permutation(cfg, (1, -1, -1, -1, 0, 0, 0))], 27)
    ok, g = are_conjugate(W, H1, H2)
    assert ok
    assert H1.conjugated(g).equals(H2)


def test_non_conjugate_subgroups():
    W = weyl_group(4)
    assert not are_conjugate(W, load_shipped(4, "s4"), load_shipped(4, "s5"))[0]


def test_conjugacy_requires_containment():
    W = weyl_group(5)
    bogus = PermGroup([(1, 0) + tuple(range(2, 10))], 10)
    with pytest.raises(ContainmentError):
        are_conjugate(W, bogus, bogus)


def test_conjugacy_equivalence_on_sample():
    from dpalpha.subgroups import catalog
    W = weyl_group(4)
    rng = random.Random(11)
    classes = catalog(W).classes
    for rec in rng.sample(classes, 6):
        H = rec.representative
        g = W.random_element(rng)
        K = H.conjugated(g)
        assert are_conjugate(W, H, K)[0]
        assert are_conjugate(W, K, H)[0]
        L = K.conjugated(W.random_element(rng))
        assert are_conjugate(W, H, L)[0]


def test_large_group_conjugacy_is_bounded():
    W = weyl_group(1)
    cfg = enumerate_lines(1)
    H = PermGroup([root_permutation(cfg, (0, 1, -1, 0, 0, 0, 0, 0, 0))], 240)
    outcomes = []
    for seed in range(6):
        K = H.conjugated(W.random_element(random.Random(seed)))
        try:
            ok, g = are_conjugate(W, H, K)
        except ConjugacyUndecided:
            outcomes.append("undecided")
            continue
        assert ok and H.conjugated(g).equals(K)
        outcomes.append("found")
    # both outcomes occur; a conjugate pair is never reported as non-conjugate
    assert set(outcomes) == {"found", "undecided"}


def test_contained_in_conjugate_examples():
    W = weyl_group(4)
    G = load_shipped(4, "s5")
    assert contained_in_conjugate(W, PermGroup([], 16), G)
    assert contained_in_conjugate(W, G, G)
    S4 = load_shipped(4, "s4")
    g = W.random_element(random.Random(5))
    assert contained_in_conjugate(W, S4.conjugated(g), G)
    assert not contained_in_conjugate(W, G, S4)


def test_contained_in_conjugate_strategies_agree():
    from dpalpha.subgroups import catalog
    W = weyl_group(5)
    cat = catalog(W)
    for h in cat.classes:
        for g in cat.classes:
            expected = cat.contained_in_conjugate(h.class_id, g.class_id)
            assert contained_in_conjugate(W, h.representative, g.representative) == expected


def test_normalizer_order_matches_class_size():
    from dpalpha.subgroups import catalog
    W = weyl_group(4)
    rng = random.Random(2)
    for rec in rng.sample(catalog(W).classes, 5):
        assert W.order // normalizer_order(W, rec.representative) == rec.class_size


def test_symmetric_group_elements():
    S = PermGroup([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], 5)
    assert sorted(S.elements()) == sorted(permutations(range(5)))
