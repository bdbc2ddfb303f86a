"""Subgroup generator files shipped with the package.

Each group is described by permutations of the blown-up points (1-based
images) or by roots whose reflections generate it; the files in ``data/``
hold the induced permutations of the lines and can be rebuilt with
``python -m dpalpha.shipped``.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .geometry import enumerate_lines, point_permutation, root_permutation, weyl_generators
from .permgroup import PermGroup, read_generator_file, write_generator_file


@dataclass(frozen=True)
class ShippedGroup:
    name: str
    degree: int
    description: str
    points: tuple[tuple[int, ...], ...] = ()
    roots: tuple[tuple[int, ...], ...] = ()
    weyl: bool = False

    @property
    def filename(self) -> str:
        return f"d{self.degree}_{self.name}.gens"

    def generators(self) -> list[tuple[int, ...]]:
        if self.weyl:
            return list(weyl_generators(self.degree).generators)
        cfg = enumerate_lines(self.degree)
        gens = [point_permutation(self.degree, p) for p in self.points]
        gens += [root_permutation(cfg, r) for r in self.roots]
        return gens


def _swap(r: int, i: int, j: int) -> tuple[int, ...]:
    img = list(range(1, r + 1))
    img[i - 1], img[j - 1] = j, i
    return tuple(img)


def _cycle(r: int, pts: list[int]) -> tuple[int, ...]:
    img = list(range(1, r + 1))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a - 1] = b
    return tuple(img)


SHIPPED = (
    ShippedGroup("trivial", 3, "split cubic surface"),
    ShippedGroup("reflection", 3, "reflection in E1-E2", points=(_swap(6, 1, 2),)),
    ShippedGroup("s3xs3", 3, "S3 x S3 permuting the point triples {1,2,3} and {4,5,6}",
                 points=(_swap(6, 1, 2), _cycle(6, [1, 2, 3]), _swap(6, 4, 5), _cycle(6, [4, 5, 6]))),
    ShippedGroup("s4", 3, "S4 permuting points 1..4", points=(_swap(6, 1, 2), _cycle(6, [1, 2, 3, 4]))),
    ShippedGroup("s5", 3, "S5 permuting points 1..5", points=(_swap(6, 1, 2), _cycle(6, [1, 2, 3, 4, 5]))),
    ShippedGroup("s6", 3, "S6 permuting all six points",
                 points=(_swap(6, 1, 2), _cycle(6, [1, 2, 3, 4, 5, 6]))),
    ShippedGroup("weyl", 3, "full Weyl group W(E6)", weyl=True),
    ShippedGroup("case_I", 3, "reflection group of case I",
                 roots=(
                        (0, 0, 0, 1, 0, 0, -1),
                        (1, -1, 0, 0, -1, -1, 0),
                        (1, 0, -1, 0, 0, -1, -1),
                        (1, 0, 0, -1, -1, -1, 0),
                        (1, 0, 0, -1, 0, -1, -1),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_II.i", 3, "reflection group of case II.i",
                 roots=(
                        (0, 0, 0, 1, 0, 0, -1),
                        (0, 0, 1, 0, 0, 0, -1),
                        (1, 0, -1, 0, -1, 0, -1),
                        (1, 0, 0, -1, -1, -1, 0),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_II.ii", 3, "reflection group of case II.ii",
                 roots=(
                        (0, 0, 0, 0, 1, 0, -1),
                        (0, 1, 0, 0, -1, 0, 0),
                        (1, -1, 0, 0, -1, 0, -1),
                        (1, 0, 0, -1, 0, -1, -1),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_II.iii", 3, "reflection group of case II.iii",
                 roots=(
                        (0, 0, 0, 0, 0, 1, -1),
                        (0, 0, 0, 0, 1, -1, 0),
                        (0, 0, 1, -1, 0, 0, 0),
                        (0, 1, -1, 0, 0, 0, 0),
                        (1, -1, -1, -1, 0, 0, 0))),
    ShippedGroup("case_II.iv", 3, "reflection group of case II.iv",
                 roots=(
                        (0, 0, 0, 0, 1, -1, 0),
                        (0, 0, 1, 0, 0, -1, 0),
                        (1, -1, -1, 0, -1, 0, 0),
                        (1, -1, 0, -1, 0, 0, -1),
                        (1, 0, 0, 0, -1, -1, -1))),
    ShippedGroup("case_III.i", 3, "reflection group of case III.i",
                 roots=(
                        (1, -1, 0, 0, 0, -1, -1),
                        (1, 0, -1, -1, 0, -1, 0),
                        (1, 0, 0, -1, -1, 0, -1),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_III.ii", 3, "reflection group of case III.ii",
                 roots=(
                        (0, 0, 0, 1, -1, 0, 0),
                        (0, 0, 0, 1, 0, -1, 0),
                        (1, 0, 0, -1, -1, -1, 0),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_III.iii", 3, "reflection group of case III.iii",
                 roots=(
                        (0, 0, 0, 0, 1, 0, -1),
                        (0, 0, 1, -1, 0, 0, 0),
                        (0, 1, -1, 0, 0, 0, 0),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_III.iv", 3, "reflection group of case III.iv",
                 roots=(
                        (0, 0, 0, 0, 0, 1, -1),
                        (1, -1, -1, 0, -1, 0, 0),
                        (1, 0, 0, 0, -1, -1, -1),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_III.v", 3, "reflection group of case III.v",
                 roots=(
                        (1, -1, 0, -1, -1, 0, 0),
                        (1, 0, -1, -1, -1, 0, 0),
                        (1, 0, 0, -1, -1, 0, -1),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_IV.i", 3, "reflection group of case IV.i",
                 roots=(
                        (1, 0, -1, -1, -1, 0, 0),
                        (1, 0, -1, 0, -1, -1, 0),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_IV.ii", 3, "reflection group of case IV.ii",
                 roots=(
                        (0, 0, 0, 1, 0, -1, 0),
                        (0, 1, 0, 0, -1, 0, 0),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_IV.iii", 3, "reflection group of case IV.iii",
                 roots=(
                        (0, 0, 0, 1, 0, -1, 0),
                        (1, -1, 0, -1, 0, -1, 0),
                        (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_V.i", 3, "reflection group of case V.i",
                 roots=((0, 1, 0, 0, 0, -1, 0), (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_V.ii", 3, "reflection group of case V.ii",
                 roots=((1, 0, -1, 0, 0, -1, -1), (2, -1, -1, -1, -1, -1, -1))),
    ShippedGroup("case_VI", 3, "reflection group of case VI",
                 roots=((2, -1, -1, -1, -1, -1, -1),)),
    ShippedGroup("case_VII", 3, "reflection group of case VII",
                 roots=()),
    ShippedGroup("trivial", 4, "split quartic del Pezzo surface"),
    ShippedGroup("reflection", 4, "reflection in E1-E2", points=(_swap(5, 1, 2),)),
    ShippedGroup("s3xs2", 4, "S3 x S2 permuting {1,2,3} and {4,5}",
                 points=(_swap(5, 1, 2), _cycle(5, [1, 2, 3]), _swap(5, 4, 5))),
    ShippedGroup("s4", 4, "S4 permuting points 1..4", points=(_swap(5, 1, 2), _cycle(5, [1, 2, 3, 4]))),
    ShippedGroup("s5", 4, "S5 permuting all five points",
                 points=(_swap(5, 1, 2), _cycle(5, [1, 2, 3, 4, 5]))),
    ShippedGroup("weyl", 4, "full Weyl group W(D5)", weyl=True),
    ShippedGroup("trivial", 2, "split degree-2 surface"),
    ShippedGroup("reflection", 2, "reflection in E1-E2", points=(_swap(7, 1, 2),)),
    ShippedGroup("trivial", 1, "split degree-1 surface"),
    ShippedGroup("reflection", 1, "reflection in E1-E2", points=(_swap(8, 1, 2),)),
)


def data_dir() -> Path:
    return Path(str(resources.files("dpalpha") / "data"))


def shipped_path(degree: int, name: str) -> Path:
    return data_dir() / f"d{degree}_{name}.gens"


def load_shipped(degree: int, name: str) -> PermGroup:
    n = len(enumerate_lines(degree).lines)
    return PermGroup(read_generator_file(shipped_path(degree, name), n), n)


def find(degree: int, name: str) -> Optional[ShippedGroup]:
    return next((g for g in SHIPPED if (g.degree, g.name) == (degree, name)), None)


def write_all(target: Optional[Path] = None) -> list[Path]:
    target = Path(target) if target else data_dir()
    out = []
    for g in SHIPPED:
        path = target / g.filename
        write_generator_file(path, g.generators(),
                             comment=f"degree {g.degree}: {g.description}\n"
                                     f"permutations of the {len(enumerate_lines(g.degree).lines)} "
                                     "lines in lexicographic order")
        out.append(path)
    return out


if __name__ == "__main__":
    for p in write_all():
        print(p)
