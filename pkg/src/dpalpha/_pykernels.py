"""Pure-Python/numpy implementations of the hot kernels.

Signatures match the compiled ``_ckernels`` module exactly.
"""
import numpy as np


def closure(mult, mask, gens):
    """Close ``mask`` (uint8, in place) under right multiplication by ``gens``.

    ``mult[i, j]`` is the index of the product of elements ``i`` and ``j``.
    The starting set must contain the identity. Returns the final size.
    """
    gens = np.asarray(gens, dtype=np.intp)
    frontier = np.flatnonzero(mask)
    while frontier.size:
        nxt = mult[frontier][:, gens].ravel()
        nxt = np.unique(nxt[mask[nxt] == 0])
        mask[nxt] = 1
        frontier = nxt
    return int(mask.sum())


def adjacent_pairs(zero_sets, plus, minus, min_common):
    """Combinatorially adjacent (p, n) ray pairs for the double description step.

    ``zero_sets`` is an (m, w) uint64 array of bitsets over constraint rows.
    A pair is adjacent when its common zero set has at least ``min_common``
    rows and no third ray's zero set contains it.
    """
    m = zero_sets.shape[0]
    zs = [int.from_bytes(row.tobytes(), "little") for row in zero_sets]
    # per constraint row: bitmask over rays that are tight there
    nbits = zero_sets.shape[1] * 64
    tight = [0] * nbits
    for r, z in enumerate(zs):
        bit = 1 << r
        while z:
            low = z & -z
            tight[low.bit_length() - 1] |= bit
            z ^= low
    everyone = (1 << m) - 1
    out = []
    for p in plus:
        p = int(p)
        zp = zs[p]
        for n in minus:
            n = int(n)
            common = zp & zs[n]
            if common.bit_count() < min_common:
                continue
            acc = everyone
            pair = (1 << p) | (1 << n)
            c = common
            while c and acc != pair:
                low = c & -c
                acc &= tight[low.bit_length() - 1]
                c ^= low
            if acc == pair:
                out.append((p, n))
    return np.array(out, dtype=np.int64).reshape(-1, 2)
