"""
Exhaustive generation of non-isomorphic trees and unicyclic graphs.

Trees on n vertices are grown from trees on n-1 vertices by adding a leaf at every
vertex; unicyclic graphs are every tree plus every admissible chord. Both are deduplicated
by canonical_form and yielded in canonical-form order.

The labelled-enumeration oracle (Prufer sequences, pairwise isomorphism through networkx)
is independent of canonical_form and is used to cross-check the class counts.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from config import TREE_CEILING, UNICYCLIC_CEILING
from graph_core import (
    attach_path,
    canonical_form,
    from_networkx,
    make_graph,
    max_degree,
    to_networkx,
    write_graph6,
)
from type.errors import CeilingExceededError, PreconditionError
from type.graph import EnumerationRequest, Graph, StructureTag

logger = logging.getLogger(__name__)


def _sorted_classes(found: Dict[bytes, Graph]) -> Tuple[Graph, ...]:
    return tuple(found[form] for form in sorted(found))


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (make_graph(1, []),)
    found: Dict[bytes, Graph] = {}
    for tree in _tree_classes(n - 1):
        for v in range(tree.n):
            grown = attach_path(tree, v, 1)
            found.setdefault(canonical_form(grown), grown)
    logger.debug(f"{len(found)} tree classes on {n} vertices")
    return _sorted_classes(found)


@lru_cache(maxsize=None)
def _unicyclic_classes(n: int) -> Tuple[Graph, ...]:
    found: Dict[bytes, Graph] = {}
    for tree in _tree_classes(n):
        edges = list(tree.edges())
        for i in range(n):
            for j in range(i + 1, n):
                if not tree.has_edge(i, j):
                    g = make_graph(n, edges + [(i, j)])
                    found.setdefault(canonical_form(g), g)
    logger.debug(f"{len(found)} unicyclic classes on {n} vertices")
    return _sorted_classes(found)


def all_trees(n: int, ceiling: Optional[int] = None) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    ceiling = TREE_CEILING if ceiling is None else ceiling
    if n < 1:
        raise PreconditionError(f"tree order must be at least 1, got {n}")
    if n > ceiling:
        raise CeilingExceededError("all_trees", n, ceiling)
    return iter(_tree_classes(n))


def all_unicyclic(n: int, ceiling: Optional[int] = None) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs with n vertices and n edges."""
    ceiling = UNICYCLIC_CEILING if ceiling is None else ceiling
    if n < 3:
        raise PreconditionError(f"unicyclic order must be at least 3, got {n}")
    if n > ceiling:
        raise CeilingExceededError("all_unicyclic", n, ceiling)
    return iter(_unicyclic_classes(n))


def filter_max_degree(stream: Iterable[Graph], delta: int) -> Iterator[Graph]:
    """Graphs whose maximum degree equals delta exactly."""
    return (g for g in stream if max_degree(g) == delta)


def run_request(request: EnumerationRequest) -> Iterator[Graph]:
    if request.graph_class is StructureTag.TREE:
        stream = all_trees(request.n, request.ceiling)
    elif request.graph_class is StructureTag.UNICYCLIC:
        stream = all_unicyclic(request.n, request.ceiling)
    else:
        raise PreconditionError(f"cannot enumerate class {request.graph_class.value!r}")
    if request.max_degree is not None:
        if not 2 <= request.max_degree <= request.n - 1:
            raise PreconditionError(
                f"maximum degree must lie in [2, {request.n - 1}], got {request.max_degree}"
            )
        stream = filter_max_degree(stream, request.max_degree)
    return stream


def write_graph6_file(graphs: Iterable[Graph], path: str) -> int:
    count = 0
    with open(path, 'w') as file:
        for g in graphs:
            file.write(write_graph6(g) + '\n')
            count += 1
    logger.info(f"Wrote {count} graphs to {path}")
    return count


# --- Labelled-enumeration oracle ---

def labeled_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on vertices 0..n-1, one per Prufer sequence."""
    if n == 1:
        yield make_graph(1, [])
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield from_networkx(nx.from_prufer_sequence(list(sequence)))


def prufer_count(n: int) -> int:
    return sum(1 for _ in itertools.product(range(n), repeat=max(n - 2, 0)))


def labeled_unicyclic(n: int) -> Iterator[Graph]:
    """Every labelled connected graph with n vertices and n edges, each exactly once."""
    seen = set()
    for tree in labeled_trees(n):
        edges = list(tree.edges())
        for i in range(n):
            for j in range(i + 1, n):
                if tree.has_edge(i, j):
                    continue
                key = frozenset(edges + [(i, j)])
                if key not in seen:
                    seen.add(key)
                    yield make_graph(n, key)


def oracle_classes(graphs: Iterable[Graph]) -> List[Graph]:
    """Pairwise deduplication with networkx isomorphism, bucketed by degree sequence."""
    buckets: Dict[Tuple[int, ...], List[nx.Graph]] = {}
    representatives: List[Graph] = []
    for g in graphs:
        key = tuple(sorted(g.degrees()))
        h = to_networkx(g)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
            representatives.append(g)
    return representatives
