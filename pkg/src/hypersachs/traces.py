"""Spectral power sums and characteristic-polynomial coefficients of uniform
hypergraphs, all in exact rational arithmetic.

Two independent assembly routes are computed and compared:

* the trace route: power sums of order d come from connected class data
  (coefficient times labeled count), and Newton's identities turn power sums
  into polynomial coefficients;
* the direct route: the exponential formula over connected classes produces
  each coefficient as a sum over multisets of components.

`trace_bruteforce` is a from-scratch oracle for the power sums: it expands the
defining operator formula into pointed closed walks on the host and weighs
each arc profile by the number of ways to realize it as a union of edge stars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .canon import CanonicalCode, canonical_form
from .errors import ConsistencyFailure, SizeExceeded
from .hypergraph import MultiHypergraph, require_simple
from .veblen_enum import connected_infragraph_classes


@dataclass(frozen=True)
class TraceVector:
    """Power sums of orders 1..len(values) for a host."""

    host: MultiHypergraph
    values: tuple[Fraction, ...]

    def trace(self, d: int) -> Fraction:
        if not 1 <= d <= len(self.values):
            raise IndexError(f"trace order {d} outside 1..{len(self.values)}")
        return self.values[d - 1]


@dataclass(frozen=True)
class CoefficientTable:
    """Characteristic-polynomial coefficients c_0..c_D of a host, with c_0=1,
    optionally with per-order breakdowns into isomorphism-class contributions."""

    host: MultiHypergraph
    name: str | None
    max_codegree: int
    coefficients: tuple[Fraction, ...]
    breakdown: dict[int, tuple[tuple[CanonicalCode, Fraction], ...]] | None = None

    def coefficient(self, d: int) -> Fraction:
        return self.coefficients[d]


def trace_d(host: MultiHypergraph, d: int) -> Fraction:
    """Power sum of order d: d*(k-1)^n times the sum over connected classes
    realized in the host of (associated coefficient) * (labeled count)."""
    require_simple(host)
    if d < 1:
        raise ValueError("trace order must be >= 1")
    scale = d * Fraction(host.k - 1) ** host.n
    total = Fraction(0)
    for rec in connected_infragraph_classes(host, d, with_coeffs=True):
        total += rec.assoc_coeff * rec.labeled_count
    return scale * total


def trace_vector(host: MultiHypergraph, max_order: int) -> TraceVector:
    return TraceVector(
        host=host,
        values=tuple(trace_d(host, d) for d in range(1, max_order + 1)),
    )


def _star_decomposition_count(arcs_out: dict[int, int], stars: list[tuple[tuple[int, ...], int]], d_i: int) -> int:
    """Number of ordered length-d_i sequences of stars at a fixed root whose
    arc multiset equals arcs_out; stars are (other-endpoints, weight) pairs."""
    remaining = dict(arcs_out)

    def rec(idx: int) -> Fraction:
        if idx == len(stars):
            return Fraction(1) if all(c == 0 for c in remaining.values()) else Fraction(0)
        heads, weight = stars[idx]
        cap = min(remaining[w] for w in heads) if all(w in remaining for w in heads) else 0
        total = Fraction(0)
        for m in range(cap + 1):
            if m:
                for w in heads:
                    remaining[w] -= m
            sub = rec(idx + 1)
            if m:
                for w in heads:
                    remaining[w] += m
            if sub:
                total += Fraction(weight**m, factorial(m)) * sub
        return total

    value = rec(0) * factorial(d_i)
    assert value.denominator == 1
    return value.numerator


def trace_bruteforce(host: MultiHypergraph, d: int, budget: int = 10_000_000) -> Fraction:
    """Power sum of order d computed from the defining operator expansion.

    Pointed closed walks of length d*(k-1) on the non-isolated vertices are
    grouped by arc profile; each profile is weighted by the per-vertex count
    of star sequences realizing its out-arcs, divided by out-degree
    factorials, times the profile factorials.  The walk space is capped at
    `budget` (m^L with m support vertices) and exceeding it raises.
    """
    if d < 1:
        raise ValueError("trace order must be >= 1")
    k = host.k
    L = d * (k - 1)
    support = host.non_isolated
    m = len(support)
    if m == 0:
        return Fraction(0)
    if m**L > budget:
        raise SizeExceeded(f"walk space {m}^{L} exceeds budget {budget}")
    nbrs: dict[int, set[int]] = {v: set() for v in support}
    stars_at: dict[int, list[tuple[tuple[int, ...], int]]] = {v: [] for v in support}
    for e, mult in host.edges:
        for v in e:
            others = tuple(sorted(w for w in e if w != v))
            nbrs[v].update(others)
            stars_at[v].append((others, mult))

    profiles: dict[tuple, int] = {}
    arc_counts: dict[tuple[int, int], int] = {}

    def walk(cur: int, left: int, start: int) -> None:
        if left == 0:
            if cur == start:
                key = tuple(sorted(arc_counts.items()))
                profiles[key] = profiles.get(key, 0) + 1
            return
        for nxt in nbrs[cur]:
            arc = (cur, nxt)
            arc_counts[arc] = arc_counts.get(arc, 0) + 1
            walk(nxt, left - 1, start)
            arc_counts[arc] -= 1
            if arc_counts[arc] == 0:
                del arc_counts[arc]

    for s in support:
        walk(s, L, s)

    total = Fraction(0)
    for key, walk_count in profiles.items():
        out: dict[int, int] = {}
        for (u, _), c in key:
            out[u] = out.get(u, 0) + c
        if any(o % (k - 1) != 0 for o in out.values()):
            continue
        factor = Fraction(1)
        ok = True
        for u, o in out.items():
            arcs_out = {v: c for (x, v), c in key if x == u}
            w_u = _star_decomposition_count(arcs_out, stars_at[u], o // (k - 1))
            if w_u == 0:
                ok = False
                break
            factor *= Fraction(w_u, factorial(o))
        if not ok:
            continue
        for _, c in key:
            factor *= factorial(c)
        total += walk_count * factor
    return Fraction(k - 1) ** (host.n - 1) * total


def schur_P(d: int, ts) -> Fraction:
    """d-th complete-homogeneous-style polynomial in the power-sum inputs:
    P_0 = 1, P_d = (1/d) * sum_{j=1..d} j * ts[j-1] * P_{d-j}."""
    if d < 0:
        raise ValueError("order must be >= 0")
    tvals = [Fraction(t) for t in ts]
    if len(tvals) < d:
        raise ValueError(f"need at least {d} inputs, got {len(tvals)}")
    P = [Fraction(1)] + [Fraction(0)] * d
    for i in range(1, d + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            acc += j * tvals[j - 1] * P[i - j]
        P[i] = acc / i
    return P[d]


def _class_terms(host: MultiHypergraph, max_d: int):
    """(edge count, code, representative, term value) for each connected class
    realized in the host with at most max_d edges; the term is the class's
    additive weight -(k-1)^n * coeff * count."""
    sign_scale = -(Fraction(host.k - 1) ** host.n)
    out = []
    for dd in range(1, max_d + 1):
        for rec in connected_infragraph_classes(host, dd, with_coeffs=True):
            out.append((dd, rec.code, rec.representative, sign_scale * rec.assoc_coeff * rec.labeled_count))
    return out


def _direct_coefficients(host: MultiHypergraph, max_d: int) -> list[Fraction]:
    """Exponential-formula assembly: coefficients of prod_G exp(x_G z^{d_G})
    truncated at z^max_d."""
    poly = [Fraction(0)] * (max_d + 1)
    poly[0] = Fraction(1)
    for dd, _code, _rep, x in _class_terms(host, max_d):
        nxt = [Fraction(0)] * (max_d + 1)
        for t in range(max_d + 1):
            if poly[t] == 0:
                continue
            mu = 0
            power = Fraction(1)
            while t + dd * mu <= max_d:
                nxt[t + dd * mu] += poly[t] * power / factorial(mu)
                mu += 1
                power *= x
        poly = nxt
    return poly


def _disjoint_union(parts: list[MultiHypergraph]) -> MultiHypergraph:
    k = parts[0].k
    offset = 0
    edges = []
    for part in parts:
        for e, mult in part.edges:
            edges.append((tuple(v + offset for v in e), mult))
        offset += part.n
    return MultiHypergraph.build(k, offset, edges)


def _breakdown_for(host: MultiHypergraph, d: int) -> tuple[tuple[CanonicalCode, Fraction], ...]:
    """Per-class contributions to c_d: one entry per Veblen class with d edges
    realized in the host (components may repeat), summing to c_d."""
    terms = _class_terms(host, d)
    entries: list[tuple[CanonicalCode, Fraction]] = []

    def rec(idx: int, left: int, chosen: list[tuple[int, int]], weight: Fraction):
        if left == 0:
            parts = []
            for t_idx, mu in chosen:
                parts.extend([terms[t_idx][2]] * mu)
            code = canonical_form(_disjoint_union(parts))
            entries.append((code, weight))
            return
        if idx == len(terms):
            return
        dd, _code, _rep, x = terms[idx]
        rec(idx + 1, left, chosen, weight)
        mu = 1
        power = x
        while dd * mu <= left:
            chosen.append((idx, mu))
            rec(idx + 1, left - dd * mu, chosen, weight * power / factorial(mu))
            chosen.pop()
            mu += 1
            power *= x

    rec(0, d, [], Fraction(1))
    entries.sort(key=lambda pair: pair[0].blob)
    return tuple(entries)


def codegree_coefficients(
    host: MultiHypergraph,
    max_codegree: int,
    name: str | None = None,
    with_breakdown: bool = False,
) -> CoefficientTable:
    """Coefficients c_0..c_max_codegree of the host's characteristic
    polynomial (c_d multiplies x^(t-d) with t the polynomial degree).

    Both assembly routes are evaluated; disagreement raises
    ConsistencyFailure and agreement returns the trace-route values.
    """
    require_simple(host)
    if max_codegree < 0:
        raise ValueError("max_codegree must be >= 0")
    traces = [trace_d(host, j) for j in range(1, max_codegree + 1)]
    ts = [-traces[j - 1] / j for j in range(1, max_codegree + 1)]
    via_traces = [schur_P(dv, ts) for dv in range(max_codegree + 1)]
    direct = _direct_coefficients(host, max_codegree)
    for dv in range(max_codegree + 1):
        if via_traces[dv] != direct[dv]:
            raise ConsistencyFailure(
                f"coefficient c_{dv} differs between assembly routes: "
                f"{via_traces[dv]} (power sums) vs {direct[dv]} (direct)"
            )
    breakdown = None
    if with_breakdown:
        breakdown = {
            dv: _breakdown_for(host, dv) for dv in range(1, max_codegree + 1)
        }
        for dv, entries in breakdown.items():
            assert sum((val for _, val in entries), Fraction(0)) == via_traces[dv]
    return CoefficientTable(
        host=host,
        name=name,
        max_codegree=max_codegree,
        coefficients=tuple(via_traces),
        breakdown=breakdown,
    )
