from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Tuple


class StructureTag(Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """
    Immutable undirected simple graph on vertices 0..n-1.

    Build instances through graph_core.make_graph, which enforces the invariants
    (no loops, symmetric, sorted and duplicate-free neighbor tuples).
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    _edge_count: int = field(default=0, repr=False, compare=False)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yields each edge once as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


@dataclass(frozen=True)
class StructureClass:
    tag: StructureTag
    cycle: Optional[Tuple[int, ...]] = None  # only for unicyclic graphs, in walk order


@dataclass(frozen=True)
class EnumerationRequest:
    n: int
    graph_class: StructureTag
    max_degree: Optional[int] = None
    ceiling: Optional[int] = None  # None means the configured default for the class
