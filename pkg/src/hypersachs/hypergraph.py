"""k-uniform multi-hypergraph values and their structural predicates.

Vertices are the contiguous integers 1..n; n is stored explicitly so that
isolated vertices survive round-trips (they matter for the ambient factor
(k-1)^n in the coefficient formula).  Edges are sorted k-tuples of distinct
vertices with a positive multiplicity; the edge map is kept sorted so values
hash and compare deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError

Edge = tuple[int, ...]
EdgeMultiset = tuple[tuple[Edge, int], ...]


@dataclass(frozen=True)
class MultiHypergraph:
    k: int
    n: int
    edges: EdgeMultiset

    @classmethod
    def build(cls, k: int, n: int, edges=()) -> "MultiHypergraph":
        """Normalize and validate an edge collection.

        Each item of `edges` is either an iterable of vertices (multiplicity
        1, repeats accumulate) or a pair (vertices, multiplicity).
        """
        if k < 2:
            raise DomainError(f"uniformity k must be >= 2, got {k}")
        if n < 0:
            raise DomainError(f"vertex count n must be >= 0, got {n}")
        acc: dict[Edge, int] = {}
        for item in edges:
            if (
                isinstance(item, tuple)
                and len(item) == 2
                and not isinstance(item[0], int)
            ):
                verts, mult = item
            else:
                verts, mult = item, 1
            edge = tuple(sorted(verts))
            if len(edge) != k or len(set(edge)) != k:
                raise DomainError(
                    f"edge {tuple(verts)} must have exactly {k} distinct vertices"
                )
            if edge[0] < 1 or edge[-1] > n:
                raise DomainError(f"edge {edge} has a vertex outside 1..{n}")
            if mult < 1:
                raise DomainError(f"edge {edge} has nonpositive multiplicity {mult}")
            acc[edge] = acc.get(edge, 0) + mult
        return cls(k=k, n=n, edges=tuple(sorted(acc.items())))

    # ------------------------------------------------------------------
    # basic views

    def multiplicity(self, edge) -> int:
        target = tuple(sorted(edge))
        for e, m in self.edges:
            if e == target:
                return m
        return 0

    @property
    def edge_count(self) -> int:
        """Total number of edges counted with multiplicity."""
        return sum(m for _, m in self.edges)

    @property
    def support(self) -> tuple[Edge, ...]:
        return tuple(e for e, _ in self.edges)

    def degrees(self) -> dict[int, int]:
        """Degree (with multiplicity) of every vertex 1..n, zeros included."""
        deg = {v: 0 for v in range(1, self.n + 1)}
        for e, m in self.edges:
            for v in e:
                deg[v] += m
        return deg

    @property
    def non_isolated(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for e, _ in self.edges:
            seen.update(e)
        return tuple(sorted(seen))

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, m in self.edges)

    def relabeled(self, mapping: dict[int, int], n: int) -> "MultiHypergraph":
        """Apply an injective vertex relabeling; vertices outside `mapping` are dropped
        only if no edge touches them."""
        edges = []
        for e, m in self.edges:
            edges.append((tuple(mapping[v] for v in e), m))
        return MultiHypergraph.build(self.k, n, edges)

    def with_multiplicities(self, mults: tuple[int, ...]) -> "MultiHypergraph":
        """Sub-multigraph on the same vertex set given per-edge multiplicities
        aligned with `self.edges` (zero drops the edge)."""
        assert len(mults) == len(self.edges)
        edges = [
            (e, c) for (e, _), c in zip(self.edges, mults) if c > 0
        ]
        return MultiHypergraph(self.k, self.n, tuple(edges))


# Simple hypergraphs (all multiplicities 1) share the representation; use
# `is_simple` / `require_simple` where the distinction matters.
SimpleHypergraph = MultiHypergraph


def require_simple(H: MultiHypergraph) -> None:
    if not H.is_simple:
        raise DomainError("operation requires a simple hypergraph (all multiplicities 1)")


def flatten(H: MultiHypergraph) -> MultiHypergraph:
    """Forget multiplicities: the simple hypergraph on the same support."""
    return MultiHypergraph(H.k, H.n, tuple((e, 1) for e, _ in H.edges))


def component_supports(H: MultiHypergraph) -> list[frozenset[int]]:
    """Vertex sets of the connected components (isolated vertices dropped),
    ordered by smallest member."""
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, _ in H.edges:
        for v in e:
            parent.setdefault(v, v)
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def components(H: MultiHypergraph) -> list[MultiHypergraph]:
    """Connected components as standalone hypergraphs.

    Each component is relabeled order-preservingly onto 1..m so the value is
    well-formed on its own; isolated vertices of the input do not appear.
    """
    out = []
    for verts in component_supports(H):
        ordered = sorted(verts)
        mapping = {v: i + 1 for i, v in enumerate(ordered)}
        edges = [
            (tuple(mapping[v] for v in e), m)
            for e, m in H.edges
            if e[0] in verts
        ]
        out.append(MultiHypergraph.build(H.k, len(ordered), edges))
    return out


def is_connected(H: MultiHypergraph) -> bool:
    return len(component_supports(H)) == 1


def is_veblen(H: MultiHypergraph) -> bool:
    """True iff every positive vertex degree is divisible by k."""
    deg: dict[int, int] = {}
    for e, m in H.edges:
        for v in e:
            deg[v] = deg.get(v, 0) + m
    return all(d % H.k == 0 for d in deg.values())


def _veblen_subvectors(H: MultiHypergraph) -> list[tuple[int, ...]]:
    """All nonzero multiplicity vectors mu <= m(H) (aligned with H.edges)
    whose sub-multigraph has every degree divisible by k."""
    k = H.k
    edge_list = [e for e, _ in H.edges]
    out = []
    for combo in itertools.product(*(range(m + 1) for _, m in H.edges)):
        if not any(combo):
            continue
        deg: dict[int, int] = {}
        for e, c in zip(edge_list, combo):
            if c:
                for v in e:
                    deg[v] = deg.get(v, 0) + c
        if all(d % k == 0 for d in deg.values()):
            out.append(combo)
    return out


def veblen_partitions(
    H: MultiHypergraph, parts_connected: bool = False
) -> tuple[tuple[MultiHypergraph, ...], ...]:
    """All multisets of Veblen sub-multigraphs whose multiplicities sum to H's.

    Parts live on H's vertex set and need not be vertex-disjoint.  Each
    partition is reported once, parts in decreasing multiplicity-vector order
    (largest part first).  With parts_connected=True only connected parts are
    allowed.

    Precondition: is_veblen(H).
    """
    from .errors import NotVeblen

    if not is_veblen(H):
        raise NotVeblen("edge partitions are defined for Veblen hypergraphs only")
    if not H.edges:
        return ((),)
    candidates = _veblen_subvectors(H)
    if parts_connected:
        candidates = [
            c for c in candidates if is_connected(H.with_multiplicities(c))
        ]
    candidates.sort(reverse=True)
    total = tuple(m for _, m in H.edges)
    results: list[tuple[tuple[int, ...], ...]] = []

    def rec(remaining: tuple[int, ...], start: int, chosen: list[tuple[int, ...]]):
        if not any(remaining):
            results.append(tuple(chosen))
            return
        for i in range(start, len(candidates)):
            cand = candidates[i]
            if all(c <= r for c, r in zip(cand, remaining)):
                chosen.append(cand)
                rec(tuple(r - c for r, c in zip(remaining, cand)), i, chosen)
                chosen.pop()

    rec(total, 0, [])
    return tuple(
        tuple(H.with_multiplicities(vec) for vec in partition)
        for partition in results
    )
