from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from type.utils import get_family_kind_name


class FamilyKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    T_STAR = "T"
    U_STAR = "U"
    SPIDER = "spider"
    CYCLE_WITH_PATHS = "cycle_with_paths"


class Regime(Enum):
    HIGH = "high-delta"
    LOW = "low-delta"


@dataclass(frozen=True)
class FamilySpec:
    """
    Symbolic description of a graph family. Fields left as None are unconstrained
    when the spec is used for membership tests, e.g. FamilySpec(SPIDER, n=9, delta=4)
    matches every spider with four legs on nine vertices.
    """
    kind: FamilyKind
    n: Optional[int] = None
    delta: Optional[int] = None
    cycle_len: Optional[int] = None
    legs: Optional[Tuple[int, ...]] = None

    def describe(self) -> str:
        legs = ",".join(str(leg) for leg in sorted(self.legs)) if self.legs is not None else "*"
        return get_family_kind_name(
            self.kind.value,
            n=self.n if self.n is not None else "n",
            delta=self.delta if self.delta is not None else "D",
            cycle_len=self.cycle_len if self.cycle_len is not None else "l",
            legs=legs,
        )


@dataclass(frozen=True)
class BoundRegime:
    n: int
    delta: int
    alpha: float
    regime: Regime
