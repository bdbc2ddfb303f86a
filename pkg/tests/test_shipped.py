import pytest

from dpalpha.geometry import weyl_group
from dpalpha.shipped import SHIPPED, data_dir, find, load_shipped, write_all


def test_files_match_regeneration(tmp_path):
    for path in write_all(tmp_path):
        assert path.read_text() == (data_dir() / path.name).read_text()


@pytest.mark.parametrize("g", SHIPPED, ids=lambda g: g.filename)
def test_shipped_groups_lie_in_weyl_group(g):
    G = load_shipped(g.degree, g.name)
    W = weyl_group(g.degree)
    assert G.is_subgroup_of(W)
    if g.weyl:
        assert G.order == W.order


@pytest.mark.parametrize("name,order", [("trivial", 1), ("reflection", 2), ("s3xs3", 36),
                                        ("s4", 24), ("s5", 120), ("s6", 720), ("weyl", 51840)])
def test_cubic_orders(name, order):
    assert load_shipped(3, name).order == order


def test_find():
    assert find(3, "s6").degree == 3
    assert find(3, "nothing") is None
