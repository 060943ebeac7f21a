"""
Graph construction, structural predicates, canonical forms and text formats.

Vertices are dense integers 0..n-1. Every Graph handed out by this module satisfies the
invariants documented on type.graph.Graph.
"""

from collections import Counter, defaultdict, deque
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from config import GENERAL_CEILING
from type.errors import (
    CeilingExceededError,
    Graph6ParseError,
    GraphConstructionError,
    InputParseError,
    PreconditionError,
)
from type.graph import Graph, StructureClass, StructureTag

GRAPH6_HEADER = ">>graph6<<"


def make_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Builds a Graph from an edge list; repeated pairs are merged."""
    if not isinstance(n, int) or n < 1:
        raise GraphConstructionError(f"vertex count must be a positive integer, got {n!r}")

    neighbor_sets = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphConstructionError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphConstructionError(f"self-loop at vertex {u}")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets)
    edge_count = sum(len(nbrs) for nbrs in adjacency) // 2
    return Graph(n=n, adjacency=adjacency, _edge_count=edge_count)


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not (0 <= v < g.n):
        raise PreconditionError(f"vertex {v!r} is outside [0, {g.n})")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adjacency[v])


def max_degree(g: Graph) -> int:
    return max(len(nbrs) for nbrs in g.adjacency)


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def _cycle_of_unicyclic(g: Graph) -> Tuple[int, ...]:
    # Strip pendant vertices until only the 2-regular cycle remains.
    deg = list(g.degrees())
    removed = [False] * g.n
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        removed[v] = True
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)

    on_cycle = [v for v in range(g.n) if not removed[v]]
    start = on_cycle[0]
    walk = [start]
    previous, current = None, start
    while True:
        nxt = min(w for w in g.adjacency[current] if not removed[w] and w != previous)
        if nxt == start:
            break
        walk.append(nxt)
        previous, current = current, nxt
    return tuple(walk)


def classify(g: Graph) -> StructureClass:
    if not is_connected(g):
        return StructureClass(StructureTag.OTHER)
    if g.edge_count == g.n - 1:
        return StructureClass(StructureTag.TREE)
    if g.edge_count == g.n:
        return StructureClass(StructureTag.UNICYCLIC, _cycle_of_unicyclic(g))
    return StructureClass(StructureTag.OTHER)


def attach_path(g: Graph, v: int, r: int) -> Graph:
    """
    Attaches a path on r new vertices to v. The new vertices are n..n+r-1 in path order
    and vertex n is joined to v; r = 1 attaches a pendant vertex.
    """
    _check_vertex(g, v)
    if not isinstance(r, int) or r < 1:
        raise PreconditionError(f"path length must be at least 1, got {r!r}")
    n = g.n
    new_edges = [(v, n)] + [(n + i, n + i + 1) for i in range(r - 1)]
    return make_graph(n + r, list(g.edges()) + new_edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Returns the graph with vertex v renamed perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise PreconditionError("relabeling must be a permutation of the vertex set")
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def edge_set(g: Graph) -> frozenset:
    return frozenset(g.edges())


# --- Canonical forms ---

def _rooted_code(g: Graph, root: int, blocked: frozenset = frozenset()) -> str:
    """Nested-parentheses code of the tree hanging from root, never entering `blocked`."""
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in parent and w not in blocked:
                parent[w] = v
                order.append(w)
                stack.append(w)

    child_codes = defaultdict(list)
    code = ""
    for v in reversed(order):
        code = "(" + "".join(sorted(child_codes[v])) + ")"
        if parent[v] is not None:
            child_codes[parent[v]].append(code)
    return code


def tree_centers(g: Graph) -> List[int]:
    if g.n <= 2:
        return list(range(g.n))
    deg = list(g.degrees())
    leaves = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(leaves)
        next_leaves = []
        for leaf in leaves:
            deg[leaf] = 0
            for w in g.adjacency[leaf]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        next_leaves.append(w)
        leaves = next_leaves
    return sorted(leaves)


def _tree_form(g: Graph) -> str:
    return min(_rooted_code(g, c) for c in tree_centers(g))


def _unicyclic_form(g: Graph, cycle: Tuple[int, ...]) -> str:
    blocked_all = frozenset(cycle)
    codes = [_rooted_code(g, c, blocked_all - {c}) for c in cycle]
    length = len(codes)
    candidates = []
    for seq in (codes, codes[::-1]):
        for shift in range(length):
            candidates.append(tuple(seq[shift:] + seq[:shift]))
    return "|".join(min(candidates))


def _refine(g: Graph, colors: List[int]) -> List[int]:
    # Colour refinement; new colours are ranks of (old colour, neighbour colours) signatures.
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(colors)):
            return refined
        colors = refined


def _matrix_bits(g: Graph, order: List[int]) -> str:
    bits = []
    for j in range(g.n):
        for i in range(j):
            bits.append("1" if g.has_edge(order[i], order[j]) else "0")
    return "".join(bits)


def _general_form(g: Graph) -> str:
    best: Optional[str] = None

    def search(colors: List[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        cells = Counter(colors)
        if len(cells) == g.n:
            order = sorted(range(g.n), key=colors.__getitem__)
            bits = _matrix_bits(g, order)
            if best is None or bits < best:
                best = bits
            return
        target = min((size, color) for color, size in cells.items() if size > 1)[1]
        for v in range(g.n):
            if colors[v] == target:
                search([2 * c + (1 if w == v else 0) for w, c in enumerate(colors)])

    search([len(nbrs) for nbrs in g.adjacency])
    return best


def canonical_form(g: Graph, ceiling: int = GENERAL_CEILING) -> bytes:
    """
    Byte string that is equal for two graphs exactly when they are isomorphic.

    Trees use center-rooted nested-parentheses codes, connected unicyclic graphs the
    cycle sequence of hanging-tree codes minimised over rotations and reflections, and
    every other graph the minimum upper-triangle adjacency bit string found by colour
    refinement plus individualisation (only up to `ceiling` vertices).
    """
    info = classify(g)
    if info.tag is StructureTag.TREE:
        body = "T" + _tree_form(g)
    elif info.tag is StructureTag.UNICYCLIC:
        body = "U" + _unicyclic_form(g, info.cycle)
    else:
        if g.n > ceiling:
            raise CeilingExceededError("canonical_form", g.n, ceiling)
        body = "G" + _general_form(g)
    return f"{g.n}:{body}".encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# --- networkx interop and text formats ---

def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return make_graph(h.number_of_nodes(), h.edges())


def write_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def parse_graph6(text: str) -> Graph:
    data = text.rstrip("\r\n")
    offset = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not data:
        raise Graph6ParseError("empty graph6 string", offset)

    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"invalid graph6 character {ch!r}", offset + i)

    if data[0] != "~":
        n, header_len = ord(data[0]) - 63, 1
    elif len(data) >= 4 and data[1] != "~":
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        header_len = 4
    else:
        raise Graph6ParseError("unsupported or truncated graph6 length header", offset)

    if n < 1:
        raise Graph6ParseError("graph6 string encodes an empty graph", offset)
    expected = (n * (n - 1) // 2 + 5) // 6
    payload = len(data) - header_len
    if payload != expected:
        bad = offset + header_len + min(payload, expected)
        raise Graph6ParseError(
            f"expected {expected} payload bytes for n={n}, found {payload}", bad
        )
    return from_networkx(nx.from_graph6_bytes(data.encode("ascii")))


def read_edge_list(text: str, first_line: int = 1) -> Graph:
    """Parses the "n / u v / u v ..." format; '#' starts a comment."""
    lines = [
        (first_line + i, raw.split("#", 1)[0].strip())
        for i, raw in enumerate(text.splitlines())
    ]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise InputParseError("missing vertex count", first_line)

    head_no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise InputParseError(f"vertex count expected, got {head!r}", head_no) from None

    edges = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputParseError(f"expected two vertex indices, got {line!r}", no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputParseError(f"non-integer vertex in {line!r}", no) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InputParseError(f"invalid edge {line!r} for n={n}", no)
        edges.append((u, v))
    try:
        return make_graph(n, edges)
    except GraphConstructionError as e:
        raise InputParseError(str(e), head_no) from None


def read_graphs(text: str) -> List[Tuple[int, Graph]]:
    """
    Reads either graph6 lines or edge-list blocks separated by blank lines.
    Returns (line number, graph) pairs; errors name the offending line.
    """
    lines = text.splitlines()
    first = next((line.strip() for line in lines if line.strip() and not line.startswith("#")), "")
    graphs = []
    if first[:1].isdigit():
        block, start = [], None
        for no, raw in enumerate(lines + [""], start=1):
            if raw.strip():
                if start is None:
                    start = no
                block.append(raw)
            elif block:
                graphs.append((start, read_edge_list("\n".join(block), start)))
                block, start = [], None
        return graphs

    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append((no, parse_graph6(line)))
        except Graph6ParseError as e:
            raise InputParseError(str(e), no) from None
    return graphs
