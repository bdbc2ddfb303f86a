"""Conjugacy classes of subgroups of small permutation groups.

The whole group is tabulated (multiplication and conjugation tables over
lexicographically sorted elements), so subgroups become bitmasks over
element indices. Classes are found by extending class representatives by
one element of prime-power order at a time: every nontrivial subgroup K
equals <M, y> for a maximal subgroup M of K and some y of prime-power
order, so starting from the trivial group this reaches every class.
"""
from __future__ import annotations

import hashlib
import os
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

import numpy as np

from . import kernels
from .errors import CapacityError
from .permgroup import PermGroup

DEFAULT_ENUMERATION_BOUND = 10**4
LARGE_ENUMERATION_BOUND = 10**5
# the multiplication and conjugation tables take 8 * |G|^2 bytes
TABLE_MEMORY_BUDGET = int(os.environ.get("DPALPHA_TABLE_MEMORY", 4 * 1024**3))


def _is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            return k == 1
        p += 1
    return True


class ElementTable:
    """Dense tables for a group small enough to list every element."""

    def __init__(self, G: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND):
        need = 8 * G.order ** 2
        if need > TABLE_MEMORY_BUDGET:
            raise CapacityError(
                f"element tables for a group of order {G.order} need {need / 1024**3:.1f} GiB, "
                f"over the budget of {TABLE_MEMORY_BUDGET / 1024**3:.1f} GiB "
                "(DPALPHA_TABLE_MEMORY); supply subgroup generators instead")
        els = G.elements(limit=bound)
        self.group = G
        self.size = m = len(els)
        self.perms = np.array(els, dtype=np.uint8 if G.degree <= 256 else np.int32)
        if self.perms.dtype != np.uint8:
            raise CapacityError("element tables support at most 256 points")
        keys = self._void(self.perms)
        self.mult = np.empty((m, m), dtype=np.int32)
        for i in range(m):
            self.mult[i] = np.searchsorted(keys, self._void(self.perms[i][self.perms]))
        ident = int(np.searchsorted(keys, self._void(np.arange(G.degree, dtype=np.uint8)[None, :]))[0])
        self.identity = ident
        self.inv = np.empty(m, dtype=np.int32)
        rows, cols = np.nonzero(self.mult == ident)
        self.inv[rows] = cols
        # conj[g, h] = g h g^-1
        self.conj = self.mult[self.mult, self.inv[:, None]]
        self.orders = self._element_orders()
        self.nbytes = (m + 7) // 8

    @staticmethod
    def _void(a):
        a = np.ascontiguousarray(a)
        return a.view(np.dtype((np.void, a.shape[-1]))).ravel()

    def _element_orders(self):
        m = self.size
        orders = np.ones(m, dtype=np.int64)
        cur = np.arange(m)
        alive = cur != self.identity
        k = 1
        while alive.any():
            k += 1
            cur = self.mult[cur, np.arange(m)]
            done = alive & (cur == self.identity)
            orders[done] = k
            alive &= ~done
        return orders

    def power(self, x: int, k: int) -> int:
        y = self.identity
        for _ in range(k):
            y = int(self.mult[y, x])
        return y

    def cyclic_generators(self, x: int) -> list[int]:
        o = int(self.orders[x])
        out, y = [], self.identity
        for k in range(1, o + 1):
            y = int(self.mult[y, x])
            if gcd(k, o) == 1:
                out.append(y)
        return out

    def index_of(self, perm) -> int:
        q = self._void(np.asarray(perm, dtype=np.uint8)[None, :])
        i = int(np.searchsorted(self._void(self.perms), q)[0])
        if i >= self.size or tuple(self.perms[i]) != tuple(perm):
            raise KeyError("permutation is not an element of the group")
        return i

    def mask_of(self, H: PermGroup) -> np.ndarray:
        mask = np.zeros(self.size, dtype=np.uint8)
        mask[self.identity] = 1
        gens = [self.index_of(g) for g in H.generators]
        if gens:
            kernels.closure(self.mult, mask, gens)
        return mask

    def pack(self, mask: np.ndarray) -> bytes:
        return np.packbits(mask).tobytes()

    def conjugate_masks(self, mask: np.ndarray) -> np.ndarray:
        """Packed bitmasks of all distinct conjugates, shape (class size, nbytes)."""
        idx = np.flatnonzero(mask)
        m = self.size
        full = np.zeros((m, m), dtype=np.uint8)
        full[np.arange(m)[:, None], self.conj[:, idx]] = 1
        packed = np.packbits(full, axis=1)
        distinct = {row.tobytes(): i for i, row in enumerate(packed)}
        return packed[sorted(distinct.values())]

    def normalizer(self, mask: np.ndarray) -> np.ndarray:
        idx = np.flatnonzero(mask)
        return np.flatnonzero(mask[self.conj[:, idx]].all(axis=1))

    def generators_of(self, mask: np.ndarray) -> list[int]:
        """Greedy lexicographic generating set."""
        cur = np.zeros(self.size, dtype=np.uint8)
        cur[self.identity] = 1
        gens: list[int] = []
        for i in np.flatnonzero(mask):
            if not cur[i]:
                gens.append(int(i))
                kernels.closure(self.mult, cur, gens)
        return gens


@dataclass
class SubgroupClassRecord:
    representative: PermGroup
    class_size: int
    orbit_structure: tuple[int, ...]
    order: int
    key: str
    rho: Optional[int] = None
    class_id: int = -1
    mask: Optional[np.ndarray] = field(default=None, repr=False)
    conjugates: Optional[np.ndarray] = field(default=None, repr=False)
    children: int = 0
    parent_key: Optional[str] = None


class SubgroupCatalog:
    """Every subgroup of a tabulated group, grouped into conjugacy classes."""

    def __init__(self, W: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND):
        if W.order > bound:
            raise CapacityError(
                f"exhaustive subgroup enumeration of a group of order {W.order} exceeds "
                f"the bound {bound}; supply subgroup generators instead")
        self.group = W
        self.table = ElementTable(W, bound)
        self.classes: list[SubgroupClassRecord] = []
        self._class_of: dict[bytes, int] = {}
        self._enumerate()
        self._finalize()

    def _add_class(self, mask: np.ndarray) -> Optional[int]:
        T = self.table
        key = T.pack(mask)
        if key in self._class_of:
            return None
        conj = T.conjugate_masks(mask)
        cid = len(self.classes)
        for row in conj:
            self._class_of[row.tobytes()] = cid
        # canonical representative: conjugate with the least sorted index tuple
        best = min(tuple(np.flatnonzero(np.unpackbits(row)[:T.size])) for row in conj)
        rep_mask = np.zeros(T.size, dtype=np.uint8)
        rep_mask[list(best)] = 1
        gens = [tuple(int(v) for v in T.perms[i]) for i in T.generators_of(rep_mask)]
        rep = PermGroup(gens, self.group.degree)
        digest = hashlib.sha1(np.array(best, dtype=np.int64).tobytes()).hexdigest()[:10]
        self.classes.append(SubgroupClassRecord(
            representative=rep, class_size=len(conj),
            orbit_structure=rep.orbit_structure(), order=len(best),
            key=f"{len(best)}:{digest}", mask=rep_mask, conjugates=conj))
        return cid

    def _enumerate(self) -> None:
        T = self.table
        trivial = np.zeros(T.size, dtype=np.uint8)
        trivial[T.identity] = 1
        self._add_class(trivial)
        prime_power = [x for x in range(T.size) if _is_prime_power(int(T.orders[x]))]
        cyc = {x: np.array(T.cyclic_generators(x)) for x in prime_power}
        queue = deque([0])
        while queue:
            rec = self.classes[queue.popleft()]
            H = rec.mask
            N = T.normalizer(H)
            hgens = [T.index_of(g) for g in rec.representative.generators]
            seen = H.astype(bool).copy()
            for x in prime_power:
                if seen[x]:
                    continue
                # <H, x> is unchanged by x -> x^k and conjugate under N(H)
                seen[T.conj[np.ix_(N, cyc[x])]] = True
                K = H.copy()
                kernels.closure(T.mult, K, np.array(hgens + [x], dtype=np.int32))
                cid = self._add_class(K)
                if cid is not None:
                    queue.append(cid)

    def _finalize(self) -> None:
        self.classes.sort(key=lambda c: (c.order, c.key))
        for i, c in enumerate(self.classes):
            c.class_id = i
        remap = {}
        for i, c in enumerate(self.classes):
            for row in c.conjugates:
                remap[row.tobytes()] = i
        self._class_of = remap
        self.all_packed = np.array([np.frombuffer(k, dtype=np.uint8) for k in remap])
        self.all_class_ids = np.array(list(remap.values()))

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def subgroup_count(self) -> int:
        return len(self._class_of)

    def class_of(self, H: PermGroup) -> int:
        return self._class_of[self.table.pack(self.table.mask_of(H))]

    def contained_in_conjugate(self, h: int, g: int) -> bool:
        """Is the representative of class ``h`` inside some conjugate of class ``g``'s?"""
        hp = np.packbits(self.classes[h].mask)
        conj = self.classes[g].conjugates
        return bool(((conj & hp) == hp).all(axis=1).any())

    def classes_below(self, g: int) -> set[int]:
        """Class ids of all subgroups of the representative of class ``g``."""
        gp = np.packbits(self.classes[g].mask)
        inside = ((self.all_packed & gp) == self.all_packed).all(axis=1)
        return set(self.all_class_ids[inside].tolist())

    def subgroups_below_count(self, g: int) -> int:
        gp = np.packbits(self.classes[g].mask)
        return int(((self.all_packed & gp) == self.all_packed).all(axis=1).sum())


def catalog(W: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> SubgroupCatalog:
    cat = getattr(W, "_catalog", None)
    if cat is None:
        cat = SubgroupCatalog(W, bound)
        W._catalog = cat
    return cat


def subgroup_classes(W: PermGroup, strategy: str = "exhaustive",
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> list[SubgroupClassRecord]:
    """One record per conjugacy class of subgroups, ordered by (order, key)."""
    if strategy == "none":
        return []
    if strategy != "exhaustive":
        raise ValueError(f"unknown strategy {strategy!r}")
    return list(catalog(W, bound).classes)
