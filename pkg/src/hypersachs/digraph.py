"""Directed multigraph machinery: Eulerian tests, arborescence counts via the
matrix-tree determinant, and Euler-circuit counts via the BEST formula, plus a
small brute-force circuit counter used as an oracle.

Parallel arcs are stored as multiplicities but circuits are counted as if the
copies were distinguishable (the convention the BEST formula uses); circuits
are counted up to cyclic rotation of the arc sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DomainError, NotEulerian, SizeExceeded
from .linalg import bareiss_det

Arc = tuple[int, int]
ArcMultiset = tuple[tuple[Arc, int], ...]


@dataclass(frozen=True)
class MultiDigraph:
    vertices: tuple[int, ...]
    arcs: ArcMultiset

    @classmethod
    def build(cls, vertices, arcs=()) -> "MultiDigraph":
        """Normalize an arc collection; items are (u, v) pairs (multiplicity 1,
        repeats accumulate) or ((u, v), multiplicity) pairs."""
        vset = tuple(sorted(set(vertices)))
        members = set(vset)
        acc: dict[Arc, int] = {}
        for item in arcs:
            if len(item) == 2 and isinstance(item[0], tuple):
                (u, v), mult = item
            else:
                (u, v), mult = item, 1
            if u == v:
                raise DomainError(f"loop arc at vertex {u} not supported")
            if u not in members or v not in members:
                raise DomainError(f"arc ({u},{v}) touches a vertex outside the graph")
            if mult < 1:
                raise DomainError(f"arc ({u},{v}) has nonpositive multiplicity {mult}")
            acc[(u, v)] = acc.get((u, v), 0) + mult
        return cls(vertices=vset, arcs=tuple(sorted(acc.items())))

    @property
    def arc_count(self) -> int:
        return sum(m for _, m in self.arcs)

    def out_degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for (u, _), m in self.arcs:
            deg[u] += m
        return deg

    def in_degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for (_, v), m in self.arcs:
            deg[v] += m
        return deg

    @property
    def non_isolated(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for (u, v), _ in self.arcs:
            seen.add(u)
            seen.add(v)
        return tuple(sorted(seen))


def is_eulerian(D: MultiDigraph) -> bool:
    """Balanced at every vertex and weakly connected on the non-isolated support."""
    indeg = D.in_degrees()
    outdeg = D.out_degrees()
    if any(indeg[v] != outdeg[v] for v in D.vertices):
        return False
    support = D.non_isolated
    if not support:
        return False
    adj: dict[int, set[int]] = {v: set() for v in support}
    for (u, v), _ in D.arcs:
        adj[u].add(v)
        adj[v].add(u)
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(support)


def arborescence_count(D: MultiDigraph, root: int) -> int:
    """Number of spanning in-trees of D converging to `root`, by the directed
    matrix-tree theorem: determinant of the out-degree Laplacian with the
    root's row and column deleted, evaluated fraction-free."""
    if root not in D.vertices:
        raise DomainError(f"root {root} is not a vertex")
    support = list(D.non_isolated)
    if root not in support:
        support.append(root)
        support.sort()
    if len(support) == 1:
        return 1
    index = {v: i for i, v in enumerate(support)}
    n = len(support)
    lap = [[0] * n for _ in range(n)]
    for (u, v), m in D.arcs:
        lap[index[u]][index[u]] += m
        lap[index[u]][index[v]] -= m
    r = index[root]
    minor = [
        [lap[i][j] for j in range(n) if j != r] for i in range(n) if i != r
    ]
    det = bareiss_det(minor)
    assert det >= 0, "arborescence count cannot be negative"
    return det


def euler_circuit_count(D: MultiDigraph) -> int:
    """|E(D)| circuits by BEST: arborescences to any root times the product of
    (in-degree - 1) factorials; parallel arc copies distinguishable, circuits
    up to rotation."""
    if not is_eulerian(D):
        raise NotEulerian("Euler circuit count requires a balanced, connected digraph")
    support = D.non_isolated
    tau = arborescence_count(D, support[0])
    indeg = D.in_degrees()
    count = tau
    for v in support:
        count *= factorial(indeg[v] - 1)
    return count


def euler_circuit_count_bruteforce(D: MultiDigraph, max_arcs: int = 10) -> int:
    """Oracle: exhaustively enumerate Euler tours (distinguishable arc copies)
    and divide by the tour length to collapse rotations."""
    if not is_eulerian(D):
        raise NotEulerian("Euler circuit count requires a balanced, connected digraph")
    total_arcs = D.arc_count
    if total_arcs > max_arcs:
        raise SizeExceeded(f"brute-force circuit count limited to {max_arcs} arcs")
    support = D.non_isolated
    out_by_vertex: dict[int, list[Arc]] = {v: [] for v in support}
    for (u, v), _ in D.arcs:
        out_by_vertex[u].append((u, v))
    remaining = {arc: m for arc, m in D.arcs}

    def walks(current: int, left: int, start: int) -> int:
        if left == 0:
            return 1 if current == start else 0
        total = 0
        for arc in out_by_vertex[current]:
            if remaining[arc] > 0:
                remaining[arc] -= 1
                total += walks(arc[1], left - 1, start)
                remaining[arc] += 1
        return total

    pointed = sum(walks(s, total_arcs, s) for s in support)
    for _, m in D.arcs:
        pointed *= factorial(m)
    circuits, rem = divmod(pointed, total_arcs)
    assert rem == 0, "pointed tour count must be divisible by the tour length"
    return circuits
