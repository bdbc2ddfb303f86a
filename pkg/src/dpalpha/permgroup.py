"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain.

Permutations are tuples of 0-based images. Text formats (cycle notation)
use 1-based points. Composition is functional: ``compose(p, q)`` applies
``q`` first.
"""
from __future__ import annotations

import random
import re
from itertools import product
from math import prod
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (CapacityError, ConjugacyUndecided, ContainmentError,
                     MalformedPermutationError, ParseError)

Perm = tuple[int, ...]

CONJUGACY_SWEEP_BOUND = 10**5


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(map(p.__getitem__, q))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(g: Perm, h: Perm) -> Perm:
    """g h g^-1: maps g(i) to g(h(i))."""
    out = [0] * len(h)
    for i, x in enumerate(h):
        out[g[i]] = g[x]
    return tuple(out)


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def validate(p: Sequence[int], n: int) -> Perm:
    p = tuple(int(x) for x in p)
    if len(p) != n or sorted(p) != list(range(n)):
        raise MalformedPermutationError(f"not a permutation of {n} points: {p}")
    return p


def element_order(p: Perm) -> int:
    from math import lcm
    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            out = lcm(out, k)
    return out


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse ``(1,2)(5,7)`` style notation on points ``1..n``."""
    text = text.strip()
    img = list(range(n))
    if text in ("", "()"):
        return tuple(img)
    rest = _CYCLE_RE.sub("", text).strip()
    if rest:
        raise MalformedPermutationError(f"unexpected text {rest!r} in {text!r}")
    seen = set()
    for body in _CYCLE_RE.findall(text):
        try:
            pts = [int(t) for t in body.replace(",", " ").split()]
        except ValueError as exc:
            raise MalformedPermutationError(f"bad cycle ({body})") from exc
        for x in pts:
            if not 1 <= x <= n:
                raise MalformedPermutationError(f"point {x} outside 1..{n}")
            if x in seen:
                raise MalformedPermutationError(f"point {x} repeated in {text!r}")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def format_cycles(p: Perm) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) or "()"


def read_generator_file(path, n: int) -> list[Perm]:
    """One permutation per line in cycle notation; ``#`` comments allowed."""
    gens = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                gens.append(parse_cycles(line, n))
            except MalformedPermutationError as exc:
                raise ParseError(str(exc), line=lineno) from exc
    return gens


def write_generator_file(path, gens: Iterable[Perm], comment: str = "") -> None:
    with open(path, "w") as fh:
        for c in comment.splitlines():
            fh.write(f"# {c}\n")
        for g in gens:
            fh.write(format_cycles(g) + "\n")


class PermGroup:
    """Subgroup of Sym(n) given by generators, with a stabilizer chain."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: int):
        self.degree = degree
        gens = [validate(g, degree) for g in generators]
        self.generators: tuple[Perm, ...] = tuple(g for g in gens if not is_identity(g))
        self.base: list[int] = []
        self._strong: list[list[Perm]] = []
        self._trans: list[dict[int, Perm]] = []
        self._schreier_sims()
        self.order = prod(len(t) for t in self._trans)
        self._elements = None
        self._table = None

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.degree}, ngens={len(self.generators)})"

    # stabilizer chain

    def _orbit_transversal(self, level: int) -> None:
        b = self.base[level]
        trans = {b: identity(self.degree)}
        queue = [b]
        gens = self._strong[level]
        for x in queue:
            u = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = compose(s, u)
                    queue.append(y)
        self._trans[level] = trans

    def _sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for j in range(start, len(self.base)):
            x = g[self.base[j]]
            u = self._trans[j].get(x)
            if u is None:
                return g, j
            g = compose(inverse(u), g)
        return g, len(self.base)

    def _add_base_point(self, g: Perm) -> None:
        b = next(i for i, x in enumerate(g) if x != i)
        self.base.append(b)
        self._strong.append([])
        self._trans.append({})

    def _schreier_sims(self) -> None:
        if not self.generators:
            return
        for g in self.generators:
            if all(g[b] == b for b in self.base):
                self._add_base_point(g)
        for j in range(len(self.base)):
            self._strong[j] = [g for g in self.generators
                               if all(g[b] == b for b in self.base[:j])]
            self._orbit_transversal(j)
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            trans = self._trans[i]
            for x, u in list(trans.items()):
                for s in self._strong[i]:
                    y = s[x]
                    h = compose(inverse(trans[y]), compose(s, u))
                    if is_identity(h):
                        continue
                    residue, j = self._sift(h, i + 1)
                    if j < len(self.base) or not is_identity(residue):
                        if j == len(self.base):
                            self._add_base_point(residue)
                        for level in range(i + 1, j + 1):
                            self._strong[level].append(residue)
                            self._orbit_transversal(level)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # queries

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        residue, j = self._sift(g)
        return j == len(self.base) and is_identity(residue)

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def transversal_sizes(self) -> list[int]:
        return [len(t) for t in self._trans]

    def orbits(self) -> list[list[int]]:
        """Orbits on points, each sorted, listed by (size, min element)."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, x in enumerate(g):
                a, b = find(i), find(x)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values(), key=lambda o: (len(o), o[0]))

    def orbit_structure(self) -> tuple[int, ...]:
        return tuple(sorted(len(o) for o in self.orbits()))

    def elements(self, limit: Optional[int] = None) -> list[Perm]:
        """All elements, sorted lexicographically by image tuple."""
        if limit is not None and self.order > limit:
            raise CapacityError(f"group of order {self.order} exceeds element bound {limit}")
        if self._elements is None:
            levels = [list(t.values()) for t in self._trans]
            out = []
            for combo in product(*levels):
                g = identity(self.degree)
                for u in reversed(combo):
                    g = compose(u, g)
                out.append(g)
            out.sort()
            self._elements = out
        return self._elements

    def iter_elements(self) -> Iterator[Perm]:
        """All elements in chain order, without materializing the list."""
        levels = [list(t.values()) for t in self._trans]
        ident = identity(self.degree)
        for combo in product(*levels):
            g = ident
            for u in reversed(combo):
                g = compose(u, g)
            yield g

    def random_element(self, rng: random.Random) -> Perm:
        g = identity(self.degree)
        for t in reversed(self._trans):
            g = compose(rng.choice(list(t.values())), g)
        return g

    def conjugated(self, g: Perm) -> "PermGroup":
        return PermGroup([conjugate(g, h) for h in self.generators], self.degree)

    def equals(self, other: "PermGroup") -> bool:
        return (self.order == other.order and self.degree == other.degree
                and self.is_subgroup_of(other))


def group_from_generators(gens: Iterable[Sequence[int]], n: int) -> PermGroup:
    return PermGroup(gens, n)


def orbits(G: PermGroup) -> list[list[int]]:
    return G.orbits()


def _require_subgroup(W: PermGroup, *groups: PermGroup) -> None:
    for H in groups:
        if not H.is_subgroup_of(W):
            raise ContainmentError("subgroup is not contained in the ambient group")


def _conjugates_into(W: PermGroup, gens: Sequence[Perm], target: PermGroup,
                     candidates: Iterable[Perm]) -> Optional[Perm]:
    for g in candidates:
        if all(target.contains(conjugate(g, h)) for h in gens):
            return g
    return None


def are_conjugate(W: PermGroup, H1: PermGroup, H2: PermGroup) -> tuple[bool, Optional[Perm]]:
    """Decide whether g H1 g^-1 == H2 for some g in W; returns (answer, witness).

    Groups of order up to ``CONJUGACY_SWEEP_BOUND`` are swept completely.
    Beyond that only the first-level coset representatives are tried, and
    :class:`ConjugacyUndecided` is raised if none of them works.
    """
    _require_subgroup(W, H1, H2)
    if H1.order != H2.order or H1.orbit_structure() != H2.orbit_structure():
        return False, None
    if not H1.generators:
        return True, identity(W.degree)
    if H1.equals(H2):
        return True, identity(W.degree)
    if W.order <= CONJUGACY_SWEEP_BOUND:
        g = _conjugates_into(W, H1.generators, H2, W.iter_elements())
        return (g is not None), g
    reps = list(W._trans[0].values()) if W._trans else []
    g = _conjugates_into(W, H1.generators, H2, reps)
    if g is not None:
        return True, g
    raise ConjugacyUndecided(f"no witness among {len(reps)} coset representatives "
                             f"of a point stabilizer in a group of order {W.order}")


def contained_in_conjugate(W: PermGroup, H: PermGroup, G: PermGroup) -> bool:
    """True iff H is contained in g G g^-1 for some g in W.

    Two strategies, chosen by which candidate list is shorter: sweep the
    conjugates of G, or test conjugacy of H against the subgroups of G of
    the right order.
    """
    _require_subgroup(W, H, G)
    if G.order % H.order:
        return False
    if not H.generators or H.is_subgroup_of(G):
        return True
    if W.order > CONJUGACY_SWEEP_BOUND:
        g = _conjugates_into(W, H.generators, G,
                             [inverse(u) for u in W._trans[0].values()])
        if g is not None:
            return True
        raise ConjugacyUndecided("bounded conjugate sweep found no witness")
    from .subgroups import subgroup_classes, DEFAULT_ENUMERATION_BOUND
    n_conjugates = W.order // normalizer_order(W, G)
    n_subgroups = None
    if G.order <= DEFAULT_ENUMERATION_BOUND:
        same = [c for c in subgroup_classes(G) if c.order == H.order]
        n_subgroups = sum(c.class_size for c in same)
    if n_subgroups is None or n_conjugates <= n_subgroups:
        # g^-1 H g <= G for some g  <=>  H <= g G g^-1
        return _conjugates_into(W, H.generators, G,
                                (inverse(g) for g in W.iter_elements())) is not None
    for c in same:
        if are_conjugate(W, H, c.representative)[0]:
            return True
    return False


def normalizer_order(W: PermGroup, G: PermGroup) -> int:
    if W.order > CONJUGACY_SWEEP_BOUND:
        raise CapacityError("normalizer computation needs a sweepable ambient group")
    return sum(1 for g in W.iter_elements()
               if all(G.contains(conjugate(g, h)) for h in G.generators))
