"""
Named extremal families of trees and unicyclic graphs, and the closed-form maxima of the
general sum-connectivity index over T(n, delta) and U(n, delta).

Every constructor puts the center (or the distinguished cycle vertex) at index 0 and
attaches legs in ascending length order, so equal parameters give identical graphs.
"""

import math
from typing import Iterator, List, Optional, Sequence, Tuple

from graph_core import (
    attach_path,
    classify,
    degree,
    is_isomorphic,
    make_graph,
    max_degree,
)
from type.errors import FamilyDomainError, PreconditionError
from type.family import BoundRegime, FamilyKind, FamilySpec, Regime
from type.graph import Graph, StructureTag


def path_graph(n: int) -> Graph:
    if n < 1:
        raise FamilyDomainError(f"path order must be at least 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyDomainError(f"cycle order must be at least 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


# --- Regimes ---

def _check_delta_range(n: int, delta: int) -> None:
    if n < 3 or not 2 <= delta <= n - 1:
        raise FamilyDomainError(f"need n >= 3 and 2 <= delta <= n-1, got n={n}, delta={delta}")


def tree_regime(n: int, delta: int) -> Regime:
    """High when delta >= ceil(n/2), low when delta <= floor((n-1)/2)."""
    _check_delta_range(n, delta)
    return Regime.HIGH if 2 * delta >= n else Regime.LOW


def unicyclic_regime(n: int, delta: int) -> Regime:
    """High when delta >= ceil((n+2)/2), low when delta <= floor((n+1)/2)."""
    _check_delta_range(n, delta)
    return Regime.HIGH if 2 * delta >= n + 2 else Regime.LOW


def bound_regime(graph_class: str, n: int, delta: int, alpha: float) -> BoundRegime:
    if graph_class == StructureTag.TREE.value:
        return BoundRegime(n, delta, alpha, tree_regime(n, delta))
    if graph_class == StructureTag.UNICYCLIC.value:
        return BoundRegime(n, delta, alpha, unicyclic_regime(n, delta))
    raise ValueError(f"Invalid graph class: {graph_class}")


# --- Constructors ---

def _with_legs(base: Graph, legs: Sequence[int]) -> Graph:
    g = base
    for leg in sorted(legs):
        g = attach_path(g, 0, leg)
    return g


def tree_T(n: int, delta: int) -> Graph:
    """Center of degree delta with 2*delta+1-n pendants and n-delta-1 paths of length two."""
    if n < 3 or not (2 * delta >= n and delta <= n - 1):
        raise FamilyDomainError(
            f"T_(n,delta) needs n >= 3 and {math.ceil(n / 2)} <= delta <= {n - 1}; "
            f"got n={n}, delta={delta}"
        )
    legs = [1] * (2 * delta + 1 - n) + [2] * (n - delta - 1)
    return _with_legs(make_graph(1, []), legs)


def unicyclic_U(n: int, delta: int) -> Graph:
    """Triangle whose vertex 0 carries 2*delta-n-1 pendants and n-delta-1 paths of length two."""
    if n < 4 or not (2 * delta >= n + 2 and delta <= n - 1):
        raise FamilyDomainError(
            f"U_(n,delta) needs n >= 4 and {math.ceil((n + 2) / 2)} <= delta <= {n - 1}; "
            f"got n={n}, delta={delta}"
        )
    legs = [1] * (2 * delta - n - 1) + [2] * (n - delta - 1)
    return _with_legs(cycle_graph(3), legs)


def spider_tree(legs: Sequence[int]) -> Graph:
    legs = list(legs)
    if len(legs) < 3:
        raise FamilyDomainError(f"a spider needs at least 3 legs, got {len(legs)}")
    if min(legs) < 2:
        raise FamilyDomainError(f"every spider leg must have length >= 2, got {sorted(legs)}")
    return _with_legs(make_graph(1, []), legs)


def cycle_with_paths(cycle_len: int, legs: Sequence[int]) -> Graph:
    legs = list(legs)
    if cycle_len < 3:
        raise FamilyDomainError(f"cycle length must be at least 3, got {cycle_len}")
    if not legs:
        raise FamilyDomainError("no legs given; use cycle_graph for a bare cycle")
    if min(legs) < 2:
        raise FamilyDomainError(f"every leg must have length >= 2, got {sorted(legs)}")
    return _with_legs(cycle_graph(cycle_len), legs)


def leg_partitions(total: int, parts: int, minimum: int = 2) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing tuples of `parts` integers >= minimum that sum to total."""
    def extend(prefix: Tuple[int, ...], low: int, left: int, remaining: int):
        if remaining == 0:
            if left == 0:
                yield prefix
            return
        for leg in range(low, left // remaining + 1):
            yield from extend(prefix + (leg,), leg, left - leg, remaining - 1)

    if parts < 1:
        return
    yield from extend((), minimum, total, parts)


def all_spiders(n: int, delta: int) -> List[Graph]:
    return [spider_tree(legs) for legs in leg_partitions(n - 1, delta)]


def all_cycles_with_paths(n: int, delta: int) -> List[Graph]:
    graphs = []
    for cycle_len in range(3, n + 1):
        for legs in leg_partitions(n - cycle_len, delta - 2):
            graphs.append(cycle_with_paths(cycle_len, legs))
    return graphs


# --- Closed forms ---

def _check_alpha(alpha: float) -> None:
    if not math.isfinite(alpha):
        raise PreconditionError(f"alpha must be a finite real, got {alpha!r}")


def tree_bound(n: int, delta: int, alpha: float) -> float:
    """Maximum of chi_alpha over trees with n vertices and maximum degree delta."""
    _check_alpha(alpha)
    if tree_regime(n, delta) is Regime.HIGH:
        return ((delta + 2) ** alpha - (delta + 1) ** alpha + 3 ** alpha) * (n - delta - 1) \
            + delta * (delta + 1) ** alpha
    return ((delta + 2) ** alpha + 3 ** alpha - 4 ** alpha) * delta + (n - delta - 1) * 4 ** alpha


def unicyclic_bound(n: int, delta: int, alpha: float) -> float:
    """Maximum of chi_alpha over unicyclic graphs with n vertices and maximum degree delta."""
    _check_alpha(alpha)
    if unicyclic_regime(n, delta) is Regime.HIGH:
        return (n - delta - 1) * 3 ** alpha + (n - delta + 1) * (delta + 2) ** alpha \
            + (2 * delta - n - 1) * (delta + 1) ** alpha + 4 ** alpha
    return (delta - 2) * 3 ** alpha + delta * (delta + 2) ** alpha + (n - 2 * delta + 2) * 4 ** alpha


def tree_index_by_k(n: int, delta: int, k: int, alpha: float) -> float:
    """
    chi_alpha of a tree whose only vertex of degree > 2 has degree delta, k of its
    neighbours having degree two and the rest being pendants.
    """
    _check_alpha(alpha)
    return (delta - k) * (delta + 1) ** alpha + k * (delta + 2) ** alpha + k * 3 ** alpha \
        + (n - delta - k - 1) * 4 ** alpha


def unicyclic_index_by_k(n: int, delta: int, k: int, alpha: float) -> float:
    """
    chi_alpha of a cycle carrying delta-2 paths at one vertex, k of them of length >= 2.
    """
    _check_alpha(alpha)
    return k * 3 ** alpha + (k + 2) * (delta + 2) ** alpha + (delta - k - 2) * (delta + 1) ** alpha \
        + (n - delta - k) * 4 ** alpha


def second_max_unicyclic_value(n: int, alpha: float) -> float:
    _check_alpha(alpha)
    if n < 5:
        raise FamilyDomainError(
            f"second maximum formula needs n >= 5, got n={n}; for n = 4 use chi_alpha(U_(4,3))"
        )
    return (n - 4) * 4 ** alpha + 3 * 5 ** alpha + 3 ** alpha


def delta3_pendant_vs_path_gap(n: int, alpha: float) -> float:
    """
    Difference between the two candidates for a unique degree-three cycle vertex:
    one pendant neighbour versus a path of length >= 2. Equals 2*4^a - 5^a - 3^a.
    """
    _check_alpha(alpha)
    pendant = (n - 2) * 4 ** alpha + 2 * 5 ** alpha
    path = (n - 4) * 4 ** alpha + 3 * 5 ** alpha + 3 ** alpha
    return pendant - path


# --- Membership ---

def _branch_legs(g: Graph, root: int, blocked: frozenset) -> Optional[Tuple[int, ...]]:
    """Sizes of the components hanging from root outside `blocked`, or None if one is not a path."""
    legs = []
    for start in g.adjacency[root]:
        if start in blocked:
            continue
        previous, current, length = root, start, 1
        while True:
            onward = [w for w in g.adjacency[current] if w != previous]
            if not onward:
                break
            if len(onward) > 1 or onward[0] in blocked or onward[0] == root:
                return None
            previous, current = current, onward[0]
            length += 1
        legs.append(length)
    return tuple(sorted(legs))


def _spider_legs(g: Graph) -> Optional[Tuple[int, ...]]:
    if classify(g).tag is not StructureTag.TREE:
        return None
    branch = [v for v in range(g.n) if degree(g, v) >= 3]
    if len(branch) != 1:
        return None
    center = branch[0]
    if any(degree(g, w) != 2 for w in g.adjacency[center]):
        return None
    return _branch_legs(g, center, frozenset())


def _cycle_legs(g: Graph) -> Optional[Tuple[int, int, Tuple[int, ...]]]:
    info = classify(g)
    if info.tag is not StructureTag.UNICYCLIC:
        return None
    cycle = frozenset(info.cycle)
    if any(degree(g, v) >= 3 for v in range(g.n) if v not in cycle):
        return None
    branch = [v for v in info.cycle if degree(g, v) >= 3]
    if len(branch) != 1:
        return None
    v = branch[0]
    off_cycle = [w for w in g.adjacency[v] if w not in cycle]
    if any(degree(g, w) != 2 for w in off_cycle):
        return None
    legs = _branch_legs(g, v, cycle)
    if legs is None:
        return None
    return len(info.cycle), degree(g, v), legs


def is_member(g: Graph, spec: FamilySpec) -> bool:
    if spec.n is not None and g.n != spec.n:
        return False
    kind = spec.kind

    if kind is FamilyKind.PATH:
        return classify(g).tag is StructureTag.TREE and max_degree(g) <= 2
    if kind is FamilyKind.CYCLE:
        return classify(g).tag is StructureTag.UNICYCLIC and max_degree(g) == 2

    if kind in (FamilyKind.T_STAR, FamilyKind.U_STAR):
        delta = spec.delta if spec.delta is not None else max_degree(g)
        try:
            reference = tree_T(g.n, delta) if kind is FamilyKind.T_STAR else unicyclic_U(g.n, delta)
        except FamilyDomainError:
            return False
        return is_isomorphic(g, reference)

    if kind is FamilyKind.SPIDER:
        legs = _spider_legs(g)
        if legs is None:
            return False
        if spec.delta is not None and len(legs) != spec.delta:
            return False
        return spec.legs is None or legs == tuple(sorted(spec.legs))

    if kind is FamilyKind.CYCLE_WITH_PATHS:
        found = _cycle_legs(g)
        if found is None:
            return False
        cycle_len, delta, legs = found
        if spec.cycle_len is not None and cycle_len != spec.cycle_len:
            return False
        if spec.delta is not None and delta != spec.delta:
            return False
        if spec.legs is not None and legs != tuple(sorted(spec.legs)):
            return False
        return min(legs) >= 2

    raise ValueError(f"Invalid family kind: {kind}")


def build(spec: FamilySpec) -> Graph:
    """Constructs the single graph a fully specified FamilySpec describes."""
    kind = spec.kind
    if kind is FamilyKind.PATH:
        return path_graph(spec.n)
    if kind is FamilyKind.CYCLE:
        return cycle_graph(spec.n)
    if kind is FamilyKind.T_STAR:
        return tree_T(spec.n, spec.delta)
    if kind is FamilyKind.U_STAR:
        return unicyclic_U(spec.n, spec.delta)
    if kind is FamilyKind.SPIDER:
        return spider_tree(spec.legs or ())
    if kind is FamilyKind.CYCLE_WITH_PATHS:
        return cycle_with_paths(spec.cycle_len or 0, spec.legs or ())
    raise ValueError(f"Invalid family kind: {kind}")
