"""Exact solvers: saturation number, matching number, independence number.

The saturation number s(G) is the size of a smallest maximal matching.  The
main solver is a branch-and-bound over vertex decisions; a deliberately
naive subset-enumeration oracle (:func:`saturation_bruteforce`) provides an
independent second route for validation and never shares code with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import ResourceLimitError
from ..graph import Graph, Matching
from .backend import ENV_VAR, backend_name, get_kernels

__all__ = [
    "SolverCaps",
    "SaturationResult",
    "DEFAULT_CAPS",
    "ENV_VAR",
    "backend_name",
    "bounds",
    "greedy_small_maximal",
    "independence_number",
    "matching_number",
    "saturation_bruteforce",
    "saturation_exact",
]


@dataclass(frozen=True)
class SolverCaps:
    """Resource caps for the exponential routines; all overridable."""

    max_n_exact: int = 32
    max_n_matching: int = 64
    max_n_independence: int = 32
    max_edges_brute: int = 24


DEFAULT_CAPS = SolverCaps()


@dataclass(frozen=True)
class SaturationResult:
    """Saturation value plus the companion quantities reported with it.

    ``witness`` is a maximal matching of size ``value`` when the value came
    from search; formula- and oracle-derived results carry no witness.
    ``lower_bound_independence`` is None when the graph exceeds the
    independence cap.
    """

    value: int
    witness: Matching | None
    matching_number: int
    unsaturated_count: int
    lower_bound_half_alpha: Fraction
    lower_bound_independence: Fraction | None
    method: str

    def __post_init__(self):
        if self.witness is not None and self.witness.size != self.value:
            raise ValueError(
                f"witness has {self.witness.size} edges but value is {self.value}"
            )


def greedy_small_maximal(g: Graph) -> list[tuple[int, int]]:
    """Deterministic small maximal matching: repeatedly take the edge that
    dominates the most not-yet-dominated edges (lex-smallest on ties)."""
    edges = g.edge_list
    masks = [(1 << u) | (1 << v) for u, v in edges]
    covered = 0
    out: list[tuple[int, int]] = []
    while True:
        best_i = -1
        best_score = -1
        for i, (u, v) in enumerate(edges):
            if covered & masks[i]:
                continue
            score = sum(
                1
                for j, mj in enumerate(masks)
                if not covered & mj and mj & masks[i]
            )
            if score > best_score:
                best_score = score
                best_i = i
        if best_i < 0:
            return out
        covered |= masks[best_i]
        out.append(edges[best_i])


def matching_number(
    g: Graph, caps: SolverCaps = DEFAULT_CAPS, backend: str | None = None
) -> tuple[int, Matching]:
    """Maximum matching size and a witness."""
    if g.n > caps.max_n_matching:
        raise ResourceLimitError(
            f"n={g.n} exceeds the matching-number cap {caps.max_n_matching}"
        )
    kern = get_kernels(backend)
    size, edges = kern.max_matching_search(g.adj_bits, g.n)
    return size, Matching(g, frozenset(edges))


def independence_number(
    g: Graph, caps: SolverCaps = DEFAULT_CAPS, backend: str | None = None
) -> int:
    """Maximum independent set size."""
    if g.n > caps.max_n_independence:
        raise ResourceLimitError(
            f"n={g.n} exceeds the independence cap {caps.max_n_independence}"
        )
    kern = get_kernels(backend)
    return kern.independence_search(g.adj_bits, g.n)


def saturation_exact(
    g: Graph, caps: SolverCaps = DEFAULT_CAPS, backend: str | None = None
) -> SaturationResult:
    """Exact saturation number with witness, matching number, and bounds.

    Deterministic for a given labeled graph: the search takes the lowest
    undecided vertex, partners in ascending order, then the stay-unmatched
    branch, and keeps the first optimum it completes.
    """
    if g.n > caps.max_n_exact:
        raise ResourceLimitError(
            f"n={g.n} exceeds the exact-solver cap {caps.max_n_exact}"
        )
    kern = get_kernels(backend)
    seed = len(greedy_small_maximal(g)) + 1
    size, edges, found = kern.saturation_search(g.adj_bits, g.n, seed)
    if not found:  # pragma: no cover - the greedy matching is always reachable
        raise RuntimeError("search failed to reach any maximal matching")
    witness = Matching(g, frozenset(edges))
    alpha_prime, _ = matching_number(g, caps, backend)
    alpha = (
        independence_number(g, caps, backend)
        if g.n <= caps.max_n_independence
        else None
    )
    return SaturationResult(
        value=size,
        witness=witness,
        matching_number=alpha_prime,
        unsaturated_count=g.n - 2 * alpha_prime,
        lower_bound_half_alpha=Fraction(alpha_prime, 2),
        lower_bound_independence=None if alpha is None else Fraction(g.n - alpha, 2),
        method="exact",
    )


def saturation_bruteforce(g: Graph, caps: SolverCaps = DEFAULT_CAPS) -> int:
    """Oracle: minimum size over all edge subsets that are maximal matchings.

    Enumerates subsets in increasing cardinality and stops at the first size
    that admits one, which equals the minimum over all subsets.  Kept free of
    any branch-and-bound machinery on purpose.
    """
    if g.edge_count > caps.max_edges_brute:
        raise ResourceLimitError(
            f"|E|={g.edge_count} exceeds the brute-force edge cap {caps.max_edges_brute}"
        )
    edges = g.edge_list
    masks = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)
    for k in range(m + 1):
        for combo in combinations(range(m), k):
            covered = 0
            disjoint = True
            for i in combo:
                if covered & masks[i]:
                    disjoint = False
                    break
                covered |= masks[i]
            if not disjoint:
                continue
            if all(covered & mask for mask in masks):
                return k
    raise AssertionError("unreachable: the full edge set dominates every edge")


def bounds(
    g: Graph, caps: SolverCaps = DEFAULT_CAPS, backend: str | None = None
) -> tuple[Fraction, Fraction]:
    """The two classical lower bounds on s(G) as exact rationals:
    half the matching number, and half the vertex count outside a maximum
    independent set."""
    alpha_prime, _ = matching_number(g, caps, backend)
    alpha = independence_number(g, caps, backend)
    return Fraction(alpha_prime, 2), Fraction(g.n - alpha, 2)
