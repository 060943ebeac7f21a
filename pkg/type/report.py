from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Any, Dict, List, Optional, Tuple, Union

from type.graph import Graph


class Theorem(IntEnum):
    TREES = 1
    UNICYCLIC = 2
    UNICYCLIC_RANKING = 3

    @classmethod
    def from_class(cls, name: str) -> "Theorem":
        mapping = {"tree": cls.TREES, "trees": cls.TREES, "unicyclic": cls.UNICYCLIC}
        if name.lower() not in mapping:
            raise ValueError(f"Invalid graph class: {name}")
        return mapping[name.lower()]


class ReportStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    REFUSED = "refused"
    EMPTY = "empty"


@dataclass(frozen=True)
class RootResult:
    value: float
    bracket: Tuple[float, float]
    residual: float
    iterations: int


@dataclass(frozen=True)
class RewriteOutcome:
    before: Graph
    after: Graph
    alpha: float
    delta_chi: float


def round_significant(x: Optional[float], digits: int) -> Optional[float]:
    if x is None:
        return None
    return float(f"{x:.{digits}g}")


@dataclass
class VerificationReport:
    n: int
    delta: Union[int, str]
    alpha: float
    graph_class: str
    status: ReportStatus = ReportStatus.PASSED
    regime: Optional[str] = None
    brute_max: Optional[float] = None
    bound: Optional[float] = None
    relative_gap: Optional[float] = None
    extremal_set: List[str] = field(default_factory=list)
    expected_set: List[str] = field(default_factory=list)
    witnesses: List[str] = field(default_factory=list)     # graph6 of the extremal graphs
    violations: List[str] = field(default_factory=list)    # graph6 of graphs breaking a claim
    characterization_ok: bool = False
    k_values: List[int] = field(default_factory=list)
    k_expected: Optional[int] = None
    second_max: Optional[float] = None
    second_expected: Optional[float] = None
    second_set: List[str] = field(default_factory=list)
    graph_count: int = 0
    runtime: float = 0.0
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status is ReportStatus.PASSED

    @property
    def n_extremal(self) -> int:
        return len(self.extremal_set)

    def to_dict(self, digits: int = 15, timing: bool = False) -> Dict[str, Any]:
        """Serialisable view; real values rounded to `digits` significant digits."""
        data = {
            "n": self.n,
            "delta": self.delta,
            "alpha": self.alpha,
            "class": self.graph_class,
            "status": self.status.value,
            "regime": self.regime,
            "brute_max": round_significant(self.brute_max, digits),
            "bound": round_significant(self.bound, digits),
            "relative_gap": round_significant(self.relative_gap, digits),
            "extremal_set": list(self.extremal_set),
            "expected_set": list(self.expected_set),
            "witnesses": list(self.witnesses),
            "violations": list(self.violations),
            "characterization_ok": self.characterization_ok,
            "k_values": list(self.k_values),
            "k_expected": self.k_expected,
            "second_max": round_significant(self.second_max, digits),
            "second_expected": round_significant(self.second_expected, digits),
            "second_set": list(self.second_set),
            "graph_count": self.graph_count,
            "message": self.message,
        }
        if timing:
            data["runtime"] = round(self.runtime, 6)
        return data


@dataclass
class LemmaSuiteResult:
    lemma: str
    seed: int
    instances: int
    alphas: Tuple[float, ...]
    checks: int = 0
    min_delta: Optional[float] = None
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checks > 0
