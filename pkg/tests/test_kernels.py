import numpy as np
import pytest

from dpalpha import kernels
from dpalpha.geometry import LINE_COUNT, weyl_group
from dpalpha.permgroup import PermGroup
from dpalpha.pipeline import alpha_for_subgroup
from dpalpha.subgroups import ElementTable

BACKENDS = [kernels.python] + ([kernels.compiled] if kernels.compiled is not None else [])


def brute_adjacent(zs, plus, minus, min_common):
    out = []
    for p in plus:
        for n in minus:
            common = zs[p] & zs[n]
            if bin(common).count("1") < min_common:
                continue
            if not any(r not in (p, n) and zs[r] & common == common for r in range(len(zs))):
                out.append((p, n))
    return out


def pack(zs, width):
    arr = np.zeros((len(zs), width), dtype=np.uint64)
    for i, z in enumerate(zs):
        for k in range(width):
            arr[i, k] = (z >> (64 * k)) & ((1 << 64) - 1)
    return arr


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
@pytest.mark.parametrize("seed", range(5))
def test_adjacent_pairs_match_brute_force(mod, seed):
    rng = np.random.default_rng(seed)
    m, bits = 30, 90
    zs = [int(rng.integers(0, 2, bits).dot(1 << np.arange(bits, dtype=object))) for _ in range(m)]
    plus = list(range(0, 15))
    minus = list(range(15, 30))
    got = mod.adjacent_pairs(pack(zs, 2), np.array(plus), np.array(minus), 35)
    assert [tuple(map(int, r)) for r in got] == brute_adjacent(zs, plus, minus, 35)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
def test_adjacent_pairs_reject_dominated(mod):
    # ray 2 is tight wherever rays 0 and 3 both are, so (0, 3) is not an edge
    zs = [0b0111, 0b1110, 0b1011, 0b0011]
    got = mod.adjacent_pairs(pack(zs, 1), np.array([0, 1]), np.array([2, 3]), 1)
    assert [tuple(map(int, r)) for r in got] == brute_adjacent(zs, [0, 1], [2, 3], 1)
    assert (0, 3) not in [tuple(map(int, r)) for r in got]


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
def test_closure_matches_set_closure(mod):
    T = ElementTable(weyl_group(5))
    rng = np.random.default_rng(1)
    for _ in range(10):
        gens = rng.integers(0, T.size, 2)
        mask = np.zeros(T.size, dtype=np.uint8)
        mask[T.identity] = 1
        size = mod.closure(T.mult, mask, gens)
        seen = {T.identity}
        todo = [T.identity]
        while todo:
            x = todo.pop()
            for g in gens:
                y = int(T.mult[x, g])
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        assert size == len(seen) == int(mask.sum())
        assert set(np.flatnonzero(mask).tolist()) == seen


def test_backends_give_same_alpha(backend):
    assert alpha_for_subgroup(PermGroup([], LINE_COUNT[4]), 4).alpha * 180 == 1


def test_use_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use("fortran")
