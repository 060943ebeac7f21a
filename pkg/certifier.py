import time
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from config import RELATIVE_TOLERANCE
from graph_core import canonical_form, degree, write_graph6
from indices import chi_alpha
from type.family import Regime
from type.graph import Graph
from type.report import ReportStatus, VerificationReport


class Certifier(ABC):
    """
    Brute-force certification of a maximum-index statement over one class of graphs with
    fixed order and maximum degree. Subclasses supply the searched universe, the closed-form
    bound and the predicted extremal family; certify() compares them.
    """
    graph_class: str = ""

    def __init__(self, tolerance: float = RELATIVE_TOLERANCE, ceiling: Optional[int] = None):
        self.tolerance = tolerance
        self.ceiling = ceiling

    @abstractmethod
    def alpha_range(self) -> Tuple[float, float]:
        """ (low, high): the statement is claimed for low <= alpha < high. """
        pass

    @abstractmethod
    def max_order(self) -> int:
        """ Largest n the universe can be enumerated for. """
        pass

    @abstractmethod
    def universe(self, n: int, delta: int) -> List[Graph]:
        """ Every graph of the class with order n and maximum degree delta, up to isomorphism. """
        pass

    @abstractmethod
    def regime(self, n: int, delta: int) -> Regime:
        pass

    @abstractmethod
    def bound(self, n: int, delta: int, alpha: float) -> float:
        pass

    @abstractmethod
    def expected_family(self, n: int, delta: int) -> List[Graph]:
        """ Graphs the statement predicts attain the bound. """
        pass

    @abstractmethod
    def expected_k(self, n: int, delta: int) -> Optional[int]:
        pass

    @abstractmethod
    def branch_k(self, g: Graph) -> int:
        """ Number of degree-two neighbours of the maximum-degree vertex counted by the statement. """
        pass

    def refusal(self, n: int, delta: int, alpha: float) -> Optional[str]:
        low, high = self.alpha_range()
        if not low <= alpha < high:
            return f"alpha={alpha} is outside the claimed range [{low:.10g}, {high:g})"
        if n < 3:
            return f"n={n} is below 3"
        if n > self.max_order():
            return f"n={n} exceeds the enumeration ceiling {self.max_order()}"
        if not 2 <= delta <= n - 1:
            return f"delta={delta} is outside [2, {n - 1}]"
        return None

    @staticmethod
    def max_degree_vertex(g: Graph) -> int:
        degrees = g.degrees()
        return degrees.index(max(degrees))

    def certify(self, n: int, delta: int, alpha: float) -> VerificationReport:
        start = time.perf_counter()
        report = VerificationReport(n=n, delta=delta, alpha=alpha, graph_class=self.graph_class)

        reason = self.refusal(n, delta, alpha)
        if reason is not None:
            report.status = ReportStatus.REFUSED
            report.message = reason
            return report

        graphs = self.universe(n, delta)
        report.graph_count = len(graphs)
        report.regime = self.regime(n, delta).value
        if not graphs:
            report.status = ReportStatus.EMPTY
            report.message = f"no {self.graph_class} with n={n} and maximum degree {delta}"
            report.runtime = time.perf_counter() - start
            return report

        values = [chi_alpha(g, alpha) for g in graphs]
        brute = max(values)
        bound = self.bound(n, delta, alpha)
        slack = self.tolerance * abs(bound)

        extremal = [g for g, v in zip(graphs, values) if abs(v - brute) <= self.tolerance * abs(brute)]
        above = [g for g, v in zip(graphs, values) if v > bound + slack]
        expected = self.expected_family(n, delta)

        extremal_forms = {canonical_form(g): g for g in extremal}
        expected_forms = {canonical_form(g): g for g in expected}
        unexpected = [extremal_forms[f] for f in sorted(set(extremal_forms) - set(expected_forms))]
        missing = [expected_forms[f] for f in sorted(set(expected_forms) - set(extremal_forms))]

        report.brute_max = brute
        report.bound = bound
        report.relative_gap = (bound - brute) / abs(bound)
        report.extremal_set = [f.decode("ascii") for f in sorted(extremal_forms)]
        report.expected_set = [f.decode("ascii") for f in sorted(expected_forms)]
        report.witnesses = [write_graph6(extremal_forms[f]) for f in sorted(extremal_forms)]
        report.violations = [write_graph6(g) for g in above + unexpected + missing]
        report.characterization_ok = not unexpected and not missing and abs(bound - brute) <= slack

        report.k_expected = self.expected_k(n, delta)
        if report.k_expected is not None:
            report.k_values = [self.branch_k(extremal_forms[f]) for f in sorted(extremal_forms)]
        k_ok = report.k_expected is None or all(k == report.k_expected for k in report.k_values)

        if report.characterization_ok and not above and k_ok:
            report.status = ReportStatus.PASSED
        else:
            report.status = ReportStatus.FAILED
            report.message = (
                f"{len(above)} above bound, {len(unexpected)} unexpected extremal, "
                f"{len(missing)} predicted but not extremal, k ok: {k_ok}"
            )
        report.runtime = time.perf_counter() - start
        return report


def degree_two_neighbours(g: Graph, v: int, exclude: frozenset = frozenset()) -> int:
    return sum(1 for w in g.adjacency[v] if w not in exclude and degree(g, w) == 2)
