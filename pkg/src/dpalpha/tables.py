"""Reference values for the rho-maximal cases in degrees 4 and 3, and spot values in degrees 2 and 1."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F


@dataclass(frozen=True)
class CaseRow:
    case: str
    alpha: F
    rho: int
    classes: int            # conjugacy classes of subgroups with this parent
    parent_order: int
    orbit_structures: int   # orbit partitions (up to conjugacy) among those classes
    maximal: tuple[int, ...]

    @property
    def rational_lines(self) -> int:
        return self.maximal.count(1)


def _s(*parts) -> tuple[int, ...]:
    out = []
    for p in parts:
        out.extend(p if isinstance(p, list) else [p])
    return tuple(sorted(out))


DEGREE_FOUR = (
    CaseRow("I", F(1), 1, 98, 1920, 7, _s(16)),
    CaseRow("II.i", F(1), 2, 50, 192, 12, _s(8, 8)),
    CaseRow("II.i", F(1), 2, 7, 24, 1, _s(2, 2, 6, 6)),
    CaseRow("II.i", F(1), 2, 11, 48, 2, _s(4, 4, 8)),
    CaseRow("II.ii", F(2, 3), 2, 5, 120, 2, _s(1, 5, 10)),
    CaseRow("III.i", F(1, 2), 3, 5, 24, 1, _s(4, 4, 4, 4)),
    CaseRow("III.i", F(1, 2), 3, 5, 8, 3, _s(2, 2, 2, 2, 4, 4)),
    CaseRow("III.ii", F(1, 3), 3, 5, 24, 3, _s(1, 1, 4, 4, 6)),
    CaseRow("III.ii", F(1, 3), 3, 3, 12, 1, _s(1, 1, 2, 3, 3, 6)),
    CaseRow("IV.i", F(1, 6), 4, 2, 4, 1, _s([2] * 8)),
    CaseRow("IV.ii", F(1, 9), 4, 2, 4, 2, _s(1, 1, 1, 1, 2, 2, 2, 2, 4)),
    CaseRow("IV.ii", F(1, 9), 4, 2, 6, 1, _s(1, 1, 1, 1, 3, 3, 3, 3)),
    CaseRow("V", F(1, 36), 5, 1, 2, 1, _s([1] * 8, [2] * 4)),
    CaseRow("VI", F(1, 180), 6, 1, 1, 1, _s([1] * 16)),
)

CUBIC = (
    CaseRow("I", F(1), 1, 137, 51840, 22, _s(27)),
    CaseRow("II.i", F(1), 2, 98, 1920, 22, _s(1, 10, 16)),
    CaseRow("II.ii", F(4, 3), 2, 16, 720, 5, _s(6, 6, 15)),
    CaseRow("II.iii", F(2), 2, 11, 72, 3, _s(3, 3, 6, 6, 9)),
    CaseRow("II.iv", F(3, 2), 2, 8, 240, 2, _s(2, 5, 10, 10)),
    CaseRow("III.i", F(1, 2), 3, 33, 192, 13, _s(1, 1, 1, 8, 8, 8)),
    CaseRow("III.ii", F(1), 3, 6, 36, 3, _s(3, 3, 3, 3, 3, 3, 9)),
    CaseRow("III.iii", F(1), 3, 7, 24, 2, _s(1, 2, 2, 3, 3, 4, 6, 6)),
    CaseRow("III.iv", F(5, 6), 3, 11, 48, 5, _s(1, 2, 2, 4, 4, 6, 8)),
    CaseRow("III.v", F(17, 24), 3, 5, 120, 2, _s(1, 1, 5, 5, 5, 10)),
    CaseRow("IV.i", F(5, 18), 4, 5, 24, 3, _s(1, 1, 1, 1, 1, 4, 4, 4, 4, 6)),
    CaseRow("IV.ii", F(7, 18), 4, 4, 8, 3, _s(1, 1, 1, 2, 2, 2, 2, 2, 2, 4, 4, 4)),
    CaseRow("IV.iii", F(3, 8), 4, 3, 12, 1, _s(1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 6)),
    CaseRow("V.i", F(1, 8), 5, 2, 4, 2, _s([1] * 7, [2] * 8, 4)),
    CaseRow("V.ii", F(5, 48), 5, 2, 6, 1, _s([1] * 9, [3] * 6)),
    CaseRow("VI", F(1, 30), 6, 1, 2, 1, _s([1] * 15, [2] * 6)),
    CaseRow("VII", F(1, 120), 7, 1, 1, 1, _s([1] * 27)),
)

# alpha values of the rho-maximal cases by Picard rank; repeated entries occur twice
DEGREE_TWO_BY_RANK = {
    1: (F(1),),
    2: (F(1), F(2), F(2), F(7, 3), F(3), F(3), F(4)),
    3: (F(1), F(5, 3), F(11, 6), F(2), F(9, 4), F(5, 2), F(8, 3), F(3), F(3)),
    4: (F(2, 3), F(11, 12), F(11, 9), F(13, 9), F(19, 12), F(5, 3), F(2)),
    5: (F(17, 36), F(2, 3), F(13, 18), F(1)),
    6: (F(7, 30), F(13, 45)),
    7: (F(1, 10),),
    8: (F(1, 30),),
}
DEGREE_ONE_BY_RANK = {
    1: (F(1),),
    2: (F(2), F(4), F(4), F(16, 3), F(6), F(7), F(8), F(10)),
    3: (F(3), F(4), F(6), F(77, 12), F(23, 3), F(26, 3), F(9), F(32, 3), F(11), F(11), F(14)),
    4: (F(4), F(35, 6), F(20, 3), F(31, 4), F(85, 9), F(92, 9), F(31, 3), F(13)),
    5: (F(4), F(355, 72), F(41, 6), F(31, 4), F(103, 12), F(92, 9)),
    6: (F(178, 45), F(16, 3), F(94, 15)),
    7: (F(59, 20), F(18, 5)),
    8: (F(29, 15),),
    9: (F(1),),
}

# counts of subgroup classes, orbit partitions and rho-maximal classes per degree
CLASS_COUNTS = {
    4: {"classes": 197, "orbit_structures": 38, "rho_maximal": 14},
    3: {"classes": 350, "orbit_structures": 91, "rho_maximal": 17},
    2: {"classes": 8074, "orbit_structures": 1071, "rho_maximal": 32},
    1: {"classes": 62092, "orbit_structures": 13975, "rho_maximal": 41},
}
