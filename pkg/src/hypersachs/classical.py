"""Ordinary graphs (k=2): exact characteristic polynomial, the edge/cycle
subgraph expansion of its coefficients, Euler-circuit weights, and codegree
thresholds.

Everything here is independent of the rooting engine on purpose; the test
suite plays the two against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NotConnected, NotVeblen, SizeExceeded
from .hypergraph import (
    MultiHypergraph,
    is_connected,
    is_veblen,
    require_simple,
    veblen_partitions,
)
from .linalg import charpoly_int
from .rooting import assoc_coeff
from .traces import codegree_coefficients

MAX_CHARPOLY_VERTICES = 12
MAX_PARTITION_EDGES = 8
MAX_TRAIL_EDGES = 12


def _require_graph(G: MultiHypergraph) -> None:
    if G.k != 2:
        raise DomainError(f"expected an ordinary graph (k=2), got k={G.k}")


@dataclass(frozen=True)
class ElementarySubgraph:
    """A subgraph whose components are single edges or cycles.

    Cycles are stored as vertex tuples in traversal order starting at their
    smallest vertex, with the smaller neighbor second.
    """

    edge_components: tuple[tuple[int, int], ...]
    cycle_components: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.edge_components) + len(self.cycle_components)

    @property
    def cycle_count(self) -> int:
        return len(self.cycle_components)

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.edge_components) + sum(
            len(c) for c in self.cycle_components
        )

    @property
    def sign_weight(self) -> int:
        return (-1) ** self.component_count * 2**self.cycle_count


def _cycles_of_graph(G: MultiHypergraph) -> list[tuple[int, ...]]:
    """All cycle subgraphs, each listed once.

    Canonical listing: start at the cycle's smallest vertex, go toward the
    smaller of its two cycle neighbors.
    """
    adj: dict[int, set[int]] = {}
    for (u, v), _ in G.edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    cycles: list[tuple[int, ...]] = []

    def extend(start: int, path: list[int], on_path: set[int]) -> None:
        cur = path[-1]
        for w in sorted(adj[cur]):
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(start, path, on_path)
                on_path.discard(w)
                path.pop()

    for s in sorted(adj):
        extend(s, [s], {s})
    return cycles


def elementary_subgraphs(G: MultiHypergraph, d: int) -> list[ElementarySubgraph]:
    """All elementary subgraphs of the simple graph G on exactly d vertices."""
    _require_graph(G)
    require_simple(G)
    if d < 0:
        raise DomainError("vertex count must be nonnegative")
    edges = [e for e, _ in G.edges]
    cycles = _cycles_of_graph(G)
    # pieces in a fixed order; a subgraph is an increasing piece selection
    pieces: list[tuple[frozenset[int], int]] = [
        (frozenset(e), i) for i, e in enumerate(edges)
    ] + [(frozenset(c), len(edges) + i) for i, c in enumerate(cycles)]
    out: list[ElementarySubgraph] = []

    def rec(i: int, used: frozenset[int], chosen: list[int], left: int) -> None:
        if left == 0:
            es = tuple(edges[j] for j in chosen if j < len(edges))
            cs = tuple(cycles[j - len(edges)] for j in chosen if j >= len(edges))
            out.append(ElementarySubgraph(es, cs))
            return
        for j in range(i, len(pieces)):
            verts, idx = pieces[j]
            if len(verts) <= left and not verts & used:
                chosen.append(idx)
                rec(j + 1, used | verts, chosen, left - len(verts))
                chosen.pop()

    rec(0, frozenset(), [], d)
    return out


def charpoly_graph(G: MultiHypergraph) -> tuple[int, ...]:
    """Characteristic polynomial of the 0/1 adjacency matrix, as the
    coefficient tuple (1, a_1, ..., a_n) of x^n + a_1 x^{n-1} + ... + a_n."""
    _require_graph(G)
    require_simple(G)
    if G.n > MAX_CHARPOLY_VERTICES:
        raise SizeExceeded(f"charpoly oracle bounded at {MAX_CHARPOLY_VERTICES} vertices")
    n = G.n
    A = [[0] * n for _ in range(n)]
    for (u, v), _ in G.edges:
        A[u - 1][v - 1] = 1
        A[v - 1][u - 1] = 1
    return charpoly_int(A)


def harary_sachs_coeffs(G: MultiHypergraph, d: int) -> int:
    """Coefficient of x^{n-d} in charpoly_graph(G), by summing signed weights
    of elementary subgraphs on d vertices."""
    _require_graph(G)
    require_simple(G)
    if d > G.n:
        raise DomainError(f"d={d} exceeds the vertex count {G.n}")
    return sum(H.sign_weight for H in elementary_subgraphs(G, d))


def graph_assoc_coeff(G: MultiHypergraph) -> Fraction:
    """Associated coefficient of a connected even multigraph, from first
    principles: closed trails through every edge copy, over rotations and
    copy relabelings.

    Counts pointed closed trails T over distinguishable edge copies; every
    circular trail is aperiodic in the copies, so T / (#copies) is the
    circuit count and C = T / (#copies * prod_e m(e)!).
    """
    _require_graph(G)
    if not is_veblen(G):
        raise NotVeblen("trail counting needs every degree even")
    if not is_connected(G):
        raise NotConnected("trail counting needs a connected multigraph")
    copies: list[tuple[int, int]] = []
    for (u, v), m in G.edges:
        copies.extend([(u, v)] * m)
    L = len(copies)
    if L == 0:
        raise DomainError("empty multigraph has no circuits")
    if L > MAX_TRAIL_EDGES:
        raise SizeExceeded(f"trail counting bounded at {MAX_TRAIL_EDGES} edge copies")
    touch: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(copies):
        touch.setdefault(u, []).append(i)
        touch.setdefault(v, []).append(i)
    full = (1 << L) - 1

    def walks(cur: int, used: int, home: int) -> int:
        if used == full:
            return 1 if cur == home else 0
        t = 0
        for i in touch[cur]:
            bit = 1 << i
            if not used & bit:
                u, v = copies[i]
                t += walks(v if cur == u else u, used | bit, home)
        return t

    T = sum(walks(s, 0, s) for s in touch)
    q, r = divmod(T, L)
    assert r == 0, "pointed trail count must split into rotation classes"
    return Fraction(q, math.prod(math.factorial(m) for _, m in G.edges))


def partition_sum_check(G: MultiHypergraph) -> Fraction:
    """Signed sum over partitions of G's edge multiset into connected even
    parts: parts P get weight (-1)^{|P|+1} prod C(part), repeated parts
    divided out by their count factorial.

    Evaluates to 1 when G is a doubled edge, 2 when G is a simple cycle, and
    0 for every other connected even multigraph.
    """
    _require_graph(G)
    if not is_veblen(G):
        raise NotVeblen("partition sum needs every degree even")
    if not is_connected(G):
        raise NotConnected("partition sum needs a connected multigraph")
    if G.edge_count > MAX_PARTITION_EDGES:
        raise SizeExceeded(f"partition sum bounded at {MAX_PARTITION_EDGES} edge copies")
    total = Fraction(0)
    for parts in veblen_partitions(G, parts_connected=True):
        term = Fraction((-1) ** (len(parts) + 1))
        seen: dict[MultiHypergraph, int] = {}
        for part in parts:
            term *= assoc_coeff(part)
            seen[part] = seen.get(part, 0) + 1
        for cnt in seen.values():
            term /= math.factorial(cnt)
        total += term
    return total


def threshold_single_edge(v: int) -> int:
    """Largest nonzero codegree for a host that is one edge plus v-3 isolated
    vertices (k=3)."""
    if v < 3:
        raise DomainError("a 3-uniform edge needs at least 3 ambient vertices")
    return 9 * 2 ** (v - 3)


def single_edge_profile(v: int, t: int) -> int:
    """Codegree-3t coefficient of the single-edge host on v vertices:
    (-1)^t binom(3*2^{v-3}, t).  Zero once t passes the binomial width."""
    if v < 3:
        raise DomainError("a 3-uniform edge needs at least 3 ambient vertices")
    if t < 0:
        raise DomainError("t must be nonnegative")
    return (-1) ** t * math.comb(3 * 2 ** (v - 3), t)


@dataclass(frozen=True)
class ThresholdReport:
    """Largest codegree with a nonzero coefficient, up to the search bound.

    threshold is None when every coefficient in 1..dmax vanishes.  exact is
    True only when a closed form certifies the value; otherwise the result is
    a lower bound for the true threshold.
    """

    host: MultiHypergraph
    vertex_count: int
    dmax: int
    threshold: int | None
    witness: Fraction | None
    exact: bool = False

    def describe(self) -> str:
        if self.threshold is None:
            return f"no nonzero coefficient found at codegrees 1..{self.dmax}"
        kind = "exactly" if self.exact else "at least (search bound)"
        return (
            f"threshold {kind} {self.threshold} "
            f"(c_{self.threshold} = {self.witness})"
        )


def _is_single_edge_host(host: MultiHypergraph) -> bool:
    return len(host.edges) == 1 and host.edges[0][1] == 1


def threshold_search(host: MultiHypergraph, dmax: int) -> ThresholdReport:
    """Scan codegrees 1..dmax for the last nonzero coefficient."""
    require_simple(host)
    if dmax < 1:
        raise DomainError("dmax must be at least 1")
    table = codegree_coefficients(host, dmax)
    threshold = None
    witness = None
    for d in range(dmax, 0, -1):
        c = table.coefficient(d)
        if c != 0:
            threshold = d
            witness = c
            break
    exact = False
    if (
        host.k == 3
        and _is_single_edge_host(host)
        and threshold is not None
        and threshold == threshold_single_edge(host.n)
    ):
        exact = True
    return ThresholdReport(host, host.n, dmax, threshold, witness, exact)
