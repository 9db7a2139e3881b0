"""Closed form for the associated coefficient of the complete k-graph on k+1
vertices (the simplex).

Euler rootings of the simplex correspond to derangements of [k+1]: edge
complement-of-i gets rooted at sigma(i).  Per derangement the arborescence
count factors over cycle lengths l as (k^l + (-1)^{l+1}), up to division by
(k+1)^2, so the total scales to an integer constant

    C_k = [ sum over derangements of prod_cycles (k^l + (-1)^{l+1}) ]
          / ((k-1)(k+1)^2)

computed here either by grouping derangements by cycle type (partitions with
parts >= 2) or by an exponential-formula recurrence that avoids enumerating
partitions altogether.  The divisor (k-1)(k+1)^2 reproduces every published
value; printed variants that drop a (k+1) do not, and the normalization is
asserted (NormalizationFailure on inexact division).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial, prod

from .digraph import MultiDigraph
from .errors import DomainError, NormalizationFailure
from .linalg import poly_exact_div, poly_mul

MAX_K = 1000
CONTRIBUTION_CAP = 2000


@dataclass(frozen=True)
class PartitionMin2:
    """Partition with every part >= 2, non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 2 for p in self.parts):
            raise DomainError(f"parts must be >= 2, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError(f"parts must be non-increasing, got {self.parts}")

    @property
    def m(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out


@dataclass(frozen=True)
class SimplexCoefficientReport:
    """C_k with its scaled form C_H = C_k/(k-1)^k, optional per-cycle-type
    contributions (omitted when the partition count exceeds the cap), and the
    exact-ratio decimal string C_k/((k+1)! k^{k+1})."""

    k: int
    C_k: int
    C_H: Fraction
    contributions: tuple[tuple[PartitionMin2, int], ...] | None
    asymptotic_ratio: str


def partitions_min2(m: int) -> tuple[PartitionMin2, ...]:
    """All partitions of m with parts >= 2, in descending lexicographic order."""
    if m < 0:
        raise DomainError("m must be >= 0")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 1, -1):
            if rest - p == 1:
                continue
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return tuple(PartitionMin2(parts) for parts in gen(m, m))


def derangements_by_type(p: PartitionMin2) -> int:
    """Number of permutations of [m] with cycle type p; fixed-point-free since
    every part is >= 2."""
    m = p.m
    denom = prod(p.parts) * prod(
        factorial(v) for v in p.multiplicities().values()
    )
    count, rem = divmod(factorial(m), denom)
    assert rem == 0
    return count


def cycle_factor(k: int, length: int) -> int:
    """Per-cycle arborescence factor k^l + (-1)^{l+1}."""
    return k**length + (-1) ** (length + 1)


def _derangement_cycle_sum(k: int) -> int:
    """sum over derangements of [k+1] of prod_cycles cycle_factor, via the
    exponential-formula recurrence Q_d = sum_j f(j) (d-1)!/(d-j)! Q_{d-j}."""
    m = k + 1
    Q = [0] * (m + 1)
    Q[0] = 1
    fact = [factorial(i) for i in range(m + 1)]
    for d in range(2, m + 1):
        acc = 0
        for j in range(2, d + 1):
            acc += cycle_factor(k, j) * (fact[d - 1] // fact[d - j]) * Q[d - j]
        Q[d] = acc
    return Q[m]


def _min2_partition_count(m: int) -> int:
    """Count of partitions of m with all parts >= 2 (p(m) - p(m-1) for m >= 1)."""
    dp = [0] * (m + 1)
    dp[0] = 1
    for part in range(2, m + 1):
        for s in range(part, m + 1):
            dp[s] += dp[s - part]
    return dp[m]


def _ratio_string(num: int, den: int) -> str:
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(num) / Decimal(den))


def asymptotic_report(k: int) -> str:
    """Exact ratio C_k / ((k+1)! * k^(k+1)) rendered to 12 significant decimal
    digits; the only decimal-style output in the package."""
    if k < 2:
        raise DomainError("k must be >= 2")
    C_k = _compute_Ck(k)
    return _ratio_string(C_k, factorial(k + 1) * k ** (k + 1))


def _compute_Ck(k: int) -> int:
    S = _derangement_cycle_sum(k)
    C_k, rem = divmod(S, (k - 1) * (k + 1) ** 2)
    if rem != 0:
        raise NormalizationFailure(
            f"derangement sum {S} is not divisible by (k-1)(k+1)^2 at k={k}"
        )
    return C_k


def simplex_Ck(k: int) -> SimplexCoefficientReport:
    """Full report for the simplex constant C_k, 2 <= k <= 1000.

    Per-partition contributions are included when the number of cycle types is
    at most CONTRIBUTION_CAP; their sum is asserted against the recurrence.
    """
    if not 2 <= k <= MAX_K:
        raise DomainError(f"k must be in 2..{MAX_K}, got {k}")
    S = _derangement_cycle_sum(k)
    C_k, rem = divmod(S, (k - 1) * (k + 1) ** 2)
    if rem != 0:
        raise NormalizationFailure(
            f"derangement sum {S} is not divisible by (k-1)(k+1)^2 at k={k}"
        )
    contributions = None
    if _min2_partition_count(k + 1) <= CONTRIBUTION_CAP:
        entries = []
        total = 0
        for p in partitions_min2(k + 1):
            contr = derangements_by_type(p) * prod(
                cycle_factor(k, length) for length in p.parts
            )
            entries.append((p, contr))
            total += contr
        assert total == S, "cycle-type contributions must sum to the recurrence value"
        contributions = tuple(entries)
    return SimplexCoefficientReport(
        k=k,
        C_k=C_k,
        C_H=Fraction(C_k, (k - 1) ** k),
        contributions=contributions,
        asymptotic_ratio=_ratio_string(C_k, factorial(k + 1) * k ** (k + 1)),
    )


@dataclass(frozen=True)
class SpectrumPrediction:
    """Predicted eigenvalue multiset of M_sigma - J (permutation matrix minus
    all-ones) for a permutation of [size]: every l-th root of unity per
    l-cycle, with one eigenvalue 1 removed overall, plus the integer 1-size.

    Roots of unity are kept symbolic as (cycle_length, exponent) pairs.
    """

    size: int
    cycle_lengths: tuple[int, ...]
    unity_roots: tuple[tuple[int, int], ...]
    integer_eigenvalue: int

    def charpoly(self) -> tuple[int, ...]:
        """Predicted characteristic polynomial det(xI - (M_sigma - J)),
        leading coefficient first: (x + size - 1) * prod(x^l - 1) / (x - 1)."""
        poly = (1,)
        for length in self.cycle_lengths:
            poly = poly_mul(poly, (1,) + (0,) * (length - 1) + (-1,))
        poly = poly_exact_div(poly, (1, -1))
        return poly_mul(poly, (1, self.size - 1))


def _cycles_of(sigma: tuple[int, ...]) -> list[list[int]]:
    m = len(sigma)
    if sorted(sigma) != list(range(1, m + 1)):
        raise DomainError(f"not a permutation of 1..{m}: {sigma}")
    seen = [False] * (m + 1)
    cycles = []
    for start in range(1, m + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = sigma[x - 1]
        cycles.append(cyc)
    return cycles


def predicted_spectrum_MJ(sigma) -> SpectrumPrediction:
    """Spectrum of M_sigma - J predicted from sigma's cycle type alone."""
    sigma = tuple(sigma)
    cycles = _cycles_of(sigma)
    lengths = tuple(len(c) for c in cycles)
    roots: list[tuple[int, int]] = []
    removed = False
    for length in lengths:
        for j in range(length):
            if j == 0 and not removed:
                removed = True
                continue
            roots.append((length, j))
    return SpectrumPrediction(
        size=len(sigma),
        cycle_lengths=lengths,
        unity_roots=tuple(roots),
        integer_eigenvalue=1 - len(sigma),
    )


def simplex_orientation(k: int, sigma) -> MultiDigraph:
    """Orientation of the simplex on [k+1] determined by a derangement: the
    edge omitting i is rooted at sigma(i), contributing arcs sigma(i) -> w for
    every other vertex w of that edge."""
    sigma = tuple(sigma)
    m = k + 1
    if len(sigma) != m:
        raise DomainError(f"permutation must have length {m}")
    cycles = _cycles_of(sigma)
    if any(len(c) == 1 for c in cycles):
        raise DomainError("rooting requires a fixed-point-free permutation")
    arcs = []
    for i in range(1, m + 1):
        root = sigma[i - 1]
        for w in range(1, m + 1):
            if w != i and w != root:
                arcs.append((root, w))
    return MultiDigraph.build(range(1, m + 1), arcs)


def simplex_tau_formula(k: int, p: PartitionMin2) -> int:
    """Arborescence count of a derangement orientation from its cycle type:
    prod of cycle factors divided by (k+1)^2, asserted integral."""
    value = prod(cycle_factor(k, length) for length in p.parts)
    tau, rem = divmod(value, (k + 1) ** 2)
    assert rem == 0, "cycle-factor product must be divisible by (k+1)^2"
    return tau
