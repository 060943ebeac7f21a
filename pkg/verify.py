"""
Brute-force certification of the three maximum statements:

* trees with n vertices and maximum degree delta (alpha_1 <= alpha < 0),
* unicyclic graphs with n vertices and maximum degree delta (-1 <= alpha < 0),
* the first and second maximum over all unicyclic graphs with n vertices (-1 <= alpha < 0).

Each cell of a grid yields one VerificationReport; out-of-claim cells are refused, never
extrapolated.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from certifier import Certifier, degree_two_neighbours
from config import (
    FORMULA_TOLERANCE,
    RELATIVE_TOLERANCE,
    TREE_CEILING,
    UNICYCLIC_CEILING,
)
from enumeration import all_trees, all_unicyclic, filter_max_degree
from families import (
    all_cycles_with_paths,
    all_spiders,
    cycle_graph,
    cycle_with_paths,
    path_graph,
    second_max_unicyclic_value,
    tree_bound,
    tree_regime,
    unicyclic_bound,
    unicyclic_regime,
    unicyclic_U,
    tree_T,
)
from graph_core import canonical_form, classify, write_graph6
from indices import chi_alpha
from numerics import alpha1
from type.errors import ChiError, PreconditionError
from type.family import Regime
from type.graph import Graph, StructureTag
from type.report import ReportStatus, Theorem, VerificationReport

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1)
def tree_alpha_floor() -> float:
    return alpha1().value


class TreeCertifier(Certifier):
    graph_class = StructureTag.TREE.value

    def alpha_range(self) -> Tuple[float, float]:
        return tree_alpha_floor(), 0.0

    def max_order(self) -> int:
        return TREE_CEILING if self.ceiling is None else self.ceiling

    def universe(self, n: int, delta: int) -> List[Graph]:
        return list(filter_max_degree(all_trees(n, self.max_order()), delta))

    def regime(self, n: int, delta: int) -> Regime:
        return tree_regime(n, delta)

    def bound(self, n: int, delta: int, alpha: float) -> float:
        return tree_bound(n, delta, alpha)

    def expected_family(self, n: int, delta: int) -> List[Graph]:
        if delta == 2:
            return [path_graph(n)]
        if self.regime(n, delta) is Regime.HIGH:
            return [tree_T(n, delta)]
        return all_spiders(n, delta)

    def expected_k(self, n: int, delta: int) -> Optional[int]:
        if delta == 2:
            return None
        return n - delta - 1 if self.regime(n, delta) is Regime.HIGH else delta

    def branch_k(self, g: Graph) -> int:
        return degree_two_neighbours(g, self.max_degree_vertex(g))


class UnicyclicCertifier(Certifier):
    graph_class = StructureTag.UNICYCLIC.value

    def alpha_range(self) -> Tuple[float, float]:
        return -1.0, 0.0

    def max_order(self) -> int:
        return UNICYCLIC_CEILING if self.ceiling is None else self.ceiling

    def universe(self, n: int, delta: int) -> List[Graph]:
        return list(filter_max_degree(all_unicyclic(n, self.max_order()), delta))

    def regime(self, n: int, delta: int) -> Regime:
        return unicyclic_regime(n, delta)

    def bound(self, n: int, delta: int, alpha: float) -> float:
        return unicyclic_bound(n, delta, alpha)

    def expected_family(self, n: int, delta: int) -> List[Graph]:
        if delta == 2:
            return [cycle_graph(n)]
        if self.regime(n, delta) is Regime.HIGH:
            return [unicyclic_U(n, delta)]
        return all_cycles_with_paths(n, delta)

    def expected_k(self, n: int, delta: int) -> Optional[int]:
        if delta == 2:
            return None
        return n - delta - 1 if self.regime(n, delta) is Regime.HIGH else delta - 2

    def branch_k(self, g: Graph) -> int:
        # cycle neighbours of the branch vertex are not counted
        cycle = frozenset(classify(g).cycle or ())
        return degree_two_neighbours(g, self.max_degree_vertex(g), exclude=cycle)


def verify_theorem1(
    n: int,
    delta: int,
    alpha: float,
    ceiling: Optional[int] = None,
    tolerance: float = RELATIVE_TOLERANCE,
) -> VerificationReport:
    return TreeCertifier(tolerance, ceiling).certify(n, delta, alpha)


def verify_theorem2(
    n: int,
    delta: int,
    alpha: float,
    ceiling: Optional[int] = None,
    tolerance: float = RELATIVE_TOLERANCE,
) -> VerificationReport:
    return UnicyclicCertifier(tolerance, ceiling).certify(n, delta, alpha)


def _levels(graphs: Sequence[Graph], values: Sequence[float], tolerance: float) -> List[Tuple[float, List[Graph]]]:
    """Distinct index values in decreasing order, each with the graphs attaining it."""
    ranked = sorted(zip(values, graphs), key=lambda item: -item[0])
    levels: List[Tuple[float, List[Graph]]] = []
    for value, g in ranked:
        if levels and abs(levels[-1][0] - value) <= tolerance * abs(levels[-1][0]):
            levels[-1][1].append(g)
        else:
            levels.append((value, [g]))
    return levels


def _forms(graphs: Iterable[Graph]) -> List[str]:
    return sorted(canonical_form(g).decode("ascii") for g in graphs)


def verify_theorem3(
    n: int,
    alpha: float,
    ceiling: Optional[int] = None,
    tolerance: float = RELATIVE_TOLERANCE,
) -> VerificationReport:
    """Ranks every unicyclic graph on n vertices; C_n must be the unique maximum and the
    second level must be exactly U_(4,3) (n = 4) or the cycles carrying one path of length >= 2."""
    if n < 4:
        raise PreconditionError(f"the unicyclic ranking needs n >= 4, got {n}")
    start = time.perf_counter()
    ceiling = UNICYCLIC_CEILING if ceiling is None else ceiling
    report = VerificationReport(n=n, delta="all", alpha=alpha, graph_class=StructureTag.UNICYCLIC.value)

    if not -1.0 <= alpha < 0.0:
        report.status = ReportStatus.REFUSED
        report.message = f"alpha={alpha} is outside the claimed range [-1, 0)"
        return report
    if n > ceiling:
        report.status = ReportStatus.REFUSED
        report.message = f"n={n} exceeds the enumeration ceiling {ceiling}"
        return report

    graphs = list(all_unicyclic(n, ceiling))
    report.graph_count = len(graphs)
    levels = _levels(graphs, [chi_alpha(g, alpha) for g in graphs], tolerance)
    (top, top_graphs), (second, second_graphs) = levels[0], levels[1]

    if n == 4:
        second_family = [unicyclic_U(4, 3)]
        second_value = 2 * 4 ** alpha + 2 * 5 ** alpha
        report.k_expected = 0
    else:
        second_family = [cycle_with_paths(length, [n - length]) for length in range(3, n - 1)]
        second_value = second_max_unicyclic_value(n, alpha)
        report.k_expected = 1
    top_value = n * 4 ** alpha

    report.brute_max = top
    report.bound = top_value
    report.relative_gap = (top_value - top) / abs(top_value)
    report.extremal_set = _forms(top_graphs)
    report.expected_set = _forms([cycle_graph(n)])
    report.witnesses = [write_graph6(g) for g in sorted(top_graphs, key=canonical_form)]
    report.second_max = second
    report.second_expected = second_value
    report.second_set = _forms(second_graphs)
    certifier = UnicyclicCertifier(tolerance, ceiling)
    report.k_values = [certifier.branch_k(g) for g in sorted(second_graphs, key=canonical_form)]

    top_ok = report.extremal_set == report.expected_set and abs(top - top_value) <= FORMULA_TOLERANCE * abs(top_value)
    second_ok = (
        report.second_set == _forms(second_family)
        and abs(second - second_value) <= tolerance * abs(second_value)
    )
    gap_ok = top - second > tolerance * abs(top)
    k_ok = all(k == report.k_expected for k in report.k_values)
    report.characterization_ok = top_ok and second_ok

    offenders = [g for g in top_graphs if canonical_form(g) != canonical_form(cycle_graph(n))]
    offenders += [g for g in second_graphs if canonical_form(g).decode("ascii") not in _forms(second_family)]
    report.violations = [write_graph6(g) for g in offenders]

    if top_ok and second_ok and gap_ok and k_ok:
        report.status = ReportStatus.PASSED
    else:
        report.status = ReportStatus.FAILED
        report.message = f"top ok: {top_ok}, second ok: {second_ok}, gap ok: {gap_ok}, k ok: {k_ok}"
    report.runtime = time.perf_counter() - start
    return report


# --- Grids ---

Cell = Tuple[int, int, Union[int, str], float, Optional[int], float]


def _theorem(value: Union[int, str, Theorem]) -> Theorem:
    if isinstance(value, Theorem):
        return value
    if isinstance(value, str) and not value.isdigit():
        return Theorem.from_class(value)
    try:
        return Theorem(int(value))
    except ValueError:
        raise ValueError(f"Invalid theorem: {value}")


def _run_cell(cell: Cell) -> VerificationReport:
    theorem, n, delta, alpha, ceiling, tolerance = cell
    try:
        if theorem == Theorem.UNICYCLIC_RANKING:
            return verify_theorem3(n, alpha, ceiling, tolerance)
        if theorem == Theorem.TREES:
            return verify_theorem1(n, delta, alpha, ceiling, tolerance)
        return verify_theorem2(n, delta, alpha, ceiling, tolerance)
    except ChiError as e:
        graph_class = StructureTag.TREE.value if theorem == Theorem.TREES else StructureTag.UNICYCLIC.value
        return VerificationReport(
            n=n, delta=delta, alpha=alpha, graph_class=graph_class,
            status=ReportStatus.REFUSED, message=str(e),
        )


def grid_cells(
    theorem: Theorem,
    n_range: Iterable[int],
    alphas: Iterable[float],
    deltas: Optional[Iterable[int]] = None,
    ceiling: Optional[int] = None,
    tolerance: float = RELATIVE_TOLERANCE,
) -> List[Cell]:
    alphas = list(alphas)
    deltas = None if deltas is None else list(deltas)
    cells: List[Cell] = []
    for n in n_range:
        if theorem == Theorem.UNICYCLIC_RANKING:
            cells.extend((int(theorem), n, "all", alpha, ceiling, tolerance) for alpha in alphas)
            continue
        for delta in (range(2, n) if deltas is None else deltas):
            cells.extend((int(theorem), n, delta, alpha, ceiling, tolerance) for alpha in alphas)
    return cells


def verify_grid(
    n_range: Iterable[int],
    alphas: Iterable[float],
    theorem: Union[int, str, Theorem],
    deltas: Optional[Iterable[int]] = None,
    ceiling: Optional[int] = None,
    workers: int = 1,
    tolerance: float = RELATIVE_TOLERANCE,
) -> List[VerificationReport]:
    """
    Runs the verifier for `theorem` over every (n, delta, alpha) cell. Deltas default to
    2..n-1 per n and are ignored for the unicyclic ranking. Reports come back in cell order
    whatever the worker count.
    """
    theorem = _theorem(theorem)
    cells = grid_cells(theorem, n_range, alphas, deltas, ceiling, tolerance)
    logger.info(f"Verifying {len(cells)} cells for {theorem.name.lower()} with {workers} worker(s)")

    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(_run_cell, cells))
    else:
        reports = [_run_cell(cell) for cell in cells]

    for report in reports:
        if report.status is ReportStatus.FAILED:
            logger.warning(
                f"FAILED n={report.n} delta={report.delta} alpha={report.alpha}: {report.message}"
            )
        else:
            logger.debug(f"{report.status.value} n={report.n} delta={report.delta} alpha={report.alpha}")
    return reports
