"""Degree-based topological indices."""

import math
from typing import Tuple

from type.errors import PreconditionError
from type.graph import Graph


def _check_alpha(alpha: float) -> None:
    if not math.isfinite(alpha):
        raise PreconditionError(f"alpha must be a finite real, got {alpha!r}")


def edge_weight_profile(g: Graph) -> Tuple[int, ...]:
    """Ascending degree sums d(u) + d(v), one entry per edge."""
    deg = g.degrees()
    return tuple(sorted(deg[u] + deg[v] for u, v in g.edges()))


def edge_product_profile(g: Graph) -> Tuple[int, ...]:
    deg = g.degrees()
    return tuple(sorted(deg[u] * deg[v] for u, v in g.edges()))


def _power_sum(entries: Tuple[int, ...], alpha: float) -> float:
    # fsum is exactly rounded, so the result does not depend on summation order.
    return math.fsum(float(s) ** alpha for s in entries)


def chi_alpha(g: Graph, alpha: float) -> float:
    """General sum-connectivity index; 0.0 for an edgeless graph."""
    _check_alpha(alpha)
    return _power_sum(edge_weight_profile(g), alpha)


def sum_connectivity(g: Graph) -> float:
    return chi_alpha(g, -0.5)


def randic_alpha(g: Graph, alpha: float) -> float:
    """General Randic index; randic_alpha(g, -0.5) is the Randic index."""
    _check_alpha(alpha)
    return _power_sum(edge_product_profile(g), alpha)


def chi_from_profile(profile: Tuple[int, ...], alpha: float) -> float:
    _check_alpha(alpha)
    return _power_sum(profile, alpha)
