"""
The two index-increasing rewrites used to push a graph towards the extremal shapes:

* path merge: replacing two paths P_a, P_b hanging at u by one path P_(a+b);
* reroute: moving the edge u-u2 to u'-u2, where u' is the far end of a path attached to u.

Plus seeded random suites that check the claimed index increase on many instances.
"""

import logging
import random
from typing import Iterable, Optional, Tuple

import networkx as nx

from config import DEFAULT_SEED, LEMMA1_ALPHAS, LEMMA2_ALPHAS, LEMMA_INSTANCES
from graph_core import (
    attach_path,
    degree,
    from_networkx,
    make_graph,
    to_networkx,
    write_graph6,
)
from indices import chi_alpha
from numerics import alpha1, eta
from type.errors import PreconditionError
from type.graph import Graph
from type.report import LemmaSuiteResult, RewriteOutcome

logger = logging.getLogger(__name__)


def index_delta(before: Graph, after: Graph, alpha: float) -> float:
    return chi_alpha(after, alpha) - chi_alpha(before, alpha)


def lemma1_setup(q: Graph, u: int, a: int, b: int) -> Tuple[Graph, Graph]:
    """
    G1 attaches paths of a and b vertices to u (u gains two neighbours); G2 attaches a
    single path of a+b vertices (u gains one). In G1 the P_a vertices are numbered first.
    """
    if q.n < 2:
        raise PreconditionError(f"Q needs at least two vertices, got {q.n}")
    if not nx.is_connected(to_networkx(q)):
        raise PreconditionError("Q must be connected")
    if not 0 <= u < q.n:
        raise PreconditionError(f"vertex {u} is outside [0, {q.n})")
    if b < 1 or a < b:
        raise PreconditionError(f"need a >= b >= 1, got a={a}, b={b}")
    g1 = attach_path(attach_path(q, u, a), u, b)
    g2 = attach_path(q, u, a + b)
    return g1, g2


def _path_entry(h: Graph, u: int, u_prime: int) -> Optional[int]:
    """Neighbour of u on the path that ends at u', or None if u' does not end such a path."""
    previous, current = u_prime, h.adjacency[u_prime][0]
    if current == u:
        return u_prime
    while degree(h, current) == 2:
        nxt = next(w for w in h.adjacency[current] if w != previous)
        if nxt == u:
            return current
        previous, current = current, nxt
    return None


def lemma2_reroute(h: Graph, u: int, u2: int, u_prime: int) -> Graph:
    """H' = H - u u2 + u' u2. Degrees are measured in H; u must have degree three there."""
    for v in (u, u2, u_prime):
        if not 0 <= v < h.n:
            raise PreconditionError(f"vertex {v} is outside [0, {h.n})")
    if u2 not in h.adjacency[u]:
        raise PreconditionError(f"u2={u2} is not a neighbour of u={u}")
    if degree(h, u_prime) != 1:
        raise PreconditionError(f"u'={u_prime} is not a pendant vertex")
    if degree(h, u) != 3:
        raise PreconditionError(f"u={u} must have degree 3 in H, has {degree(h, u)}")
    if degree(h, u2) > 3:
        raise PreconditionError(
            f"d_H(u2) = {degree(h, u2)} > 3; the index increase is only claimed for d_H(u2) <= 3"
        )
    entry = _path_entry(h, u, u_prime)
    if entry is None or entry == u2:
        raise PreconditionError(f"u'={u_prime} is not the end of a path attached to u={u} away from u2")

    edges = [e for e in h.edges() if e != (min(u, u2), max(u, u2))]
    edges.append((u_prime, u2))
    return make_graph(h.n, edges)


def lemma1_outcome(q: Graph, u: int, a: int, b: int, alpha: float) -> RewriteOutcome:
    g1, g2 = lemma1_setup(q, u, a, b)
    return RewriteOutcome(before=g1, after=g2, alpha=alpha, delta_chi=index_delta(g1, g2, alpha))


def lemma2_outcome(h: Graph, u: int, u2: int, u_prime: int, alpha: float) -> RewriteOutcome:
    after = lemma2_reroute(h, u, u2, u_prime)
    return RewriteOutcome(before=h, after=after, alpha=alpha, delta_chi=index_delta(h, after, alpha))


def lemma2_distance_one_delta(d1: int, d2: int, alpha: float) -> float:
    """Index change of the reroute when u' is adjacent to u; d1, d2 are degrees of u1, u2 in H."""
    return (d1 + 2) ** alpha + (d2 + 2) ** alpha - (d1 + 3) ** alpha - (d2 + 3) ** alpha


def lemma2_lower_bound(alpha: float) -> float:
    """Lower bound on the reroute's index change when u' is at distance >= 2 from u."""
    return float(eta(alpha))


# --- Random instances ---

def random_connected_graph(rng: random.Random, order: int, max_extra_edges: int = 2) -> Graph:
    """Random labelled tree (via a Prufer sequence) plus up to max_extra_edges chords."""
    if order == 1:
        return make_graph(1, [])
    tree = nx.from_prufer_sequence([rng.randrange(order) for _ in range(order - 2)])
    g = from_networkx(tree)
    non_edges = [(i, j) for i in range(order) for j in range(i + 1, order) if not g.has_edge(i, j)]
    extra = rng.sample(non_edges, min(len(non_edges), rng.randint(0, max_extra_edges)))
    return make_graph(order, list(g.edges()) + extra)


def random_lemma1_instance(rng: random.Random) -> Tuple[Graph, int, int, int]:
    q = random_connected_graph(rng, rng.randint(2, 8))
    u = rng.randrange(q.n)
    b = rng.randint(1, 4)
    a = rng.randint(b, 4)
    return q, u, a, b


def random_lemma2_instance(rng: random.Random) -> Tuple[Graph, int, int, int]:
    """Returns (h, u, u2, u') with u of degree 2 in M, d(u2) <= 3 and a path P_a (1 <= a <= 4) at u."""
    while True:
        m = random_connected_graph(rng, rng.randint(3, 8))
        candidates = [
            (u, u2)
            for u in range(m.n) if degree(m, u) == 2
            for u2 in m.adjacency[u] if degree(m, u2) <= 3
        ]
        if candidates:
            break
    u, u2 = rng.choice(candidates)
    h = attach_path(m, u, rng.randint(1, 4))
    return h, u, u2, h.n - 1


def _run_suite(
    lemma: str,
    seed: int,
    count: int,
    alphas: Tuple[float, ...],
    draw,
    rewrite,
) -> LemmaSuiteResult:
    rng = random.Random(seed)
    result = LemmaSuiteResult(lemma=lemma, seed=seed, instances=count, alphas=alphas)
    for index in range(count):
        instance = draw(rng)
        before, after = rewrite(*instance)
        for alpha in alphas:
            delta = index_delta(before, after, alpha)
            result.checks += 1
            if result.min_delta is None or delta < result.min_delta:
                result.min_delta = delta
            if not delta > 0:
                result.failures.append({
                    "instance": index,
                    "alpha": alpha,
                    "delta_chi": delta,
                    "before": write_graph6(before),
                    "after": write_graph6(after),
                })
    logger.info(
        f"{lemma}: {result.checks} checks on {count} instances (seed {seed}), "
        f"{len(result.failures)} failures, min delta {result.min_delta}"
    )
    return result


def run_lemma1_suite(
    seed: int = DEFAULT_SEED,
    count: int = LEMMA_INSTANCES,
    alphas: Optional[Iterable[float]] = None,
) -> LemmaSuiteResult:
    if alphas is None:
        alphas = (alpha1().value + 1e-6,) + LEMMA1_ALPHAS
    return _run_suite("path-merge", seed, count, tuple(alphas), random_lemma1_instance, lemma1_setup)


def run_lemma2_suite(
    seed: int = DEFAULT_SEED,
    count: int = LEMMA_INSTANCES,
    alphas: Optional[Iterable[float]] = None,
) -> LemmaSuiteResult:
    alphas = LEMMA2_ALPHAS if alphas is None else alphas

    def rewrite(h, u, u2, u_prime):
        return h, lemma2_reroute(h, u, u2, u_prime)

    return _run_suite("reroute", seed, count, tuple(alphas), random_lemma2_instance, rewrite)
