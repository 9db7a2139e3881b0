"""Builders shared across test modules."""

from itertools import combinations

from hypersachs.hypergraph import MultiHypergraph


def graph2(n, edges):
    """Ordinary graph as a 2-uniform multi-hypergraph."""
    return MultiHypergraph.build(2, n, edges)


def all_labeled_graphs(n):
    """Every simple graph on the labeled vertex set 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph2(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng, n, p):
    pairs = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return graph2(n, pairs)


def random_3graph(rng, n, p):
    triples = [e for e in combinations(range(1, n + 1), 3) if rng.random() < p]
    return MultiHypergraph.build(3, n, triples)


def all_simple_3graphs(n):
    """Every simple 3-uniform hypergraph on the labeled vertex set 1..n."""
    triples = list(combinations(range(1, n + 1), 3))
    for mask in range(1 << len(triples)):
        yield MultiHypergraph.build(
            3, n, [t for i, t in enumerate(triples) if mask >> i & 1]
        )


def disjoint_union(H1, H2):
    """Vertex-disjoint union, H2 shifted past H1's vertex range."""
    assert H1.k == H2.k
    shift = H1.n
    edges = list(H1.edges)
    for e, m in H2.edges:
        edges.append((tuple(v + shift for v in e), m))
    return MultiHypergraph.build(H1.k, H1.n + H2.n, edges)
