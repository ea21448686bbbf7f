"""Closed-form saturation numbers for structured families.

Each function reproduces one published case rule verbatim, including rules
whose case tables are known to be incomplete (see the claims catalog and the
expected-discrepancy manifest); the audit machinery, not this module, decides
which rules match the exact solver.  All arithmetic is exact integer
arithmetic; negative floor divisions are intentional where they appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UnsupportedParameterError
from .graph import Graph


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class CoronaStats:
    """Order and matching data of a corona core graph."""

    n: int
    alpha_prime: int

    def __post_init__(self):
        if self.n < 0 or self.alpha_prime < 0 or 2 * self.alpha_prime > self.n:
            raise DomainError(
                f"inconsistent corona stats n={self.n}, alpha'={self.alpha_prime}"
            )

    @property
    def l(self) -> int:
        """Number of vertices missed by a maximum matching."""
        return self.n - 2 * self.alpha_prime

    @property
    def has_perfect(self) -> bool:
        return self.l == 0 and self.n % 2 == 0

    @classmethod
    def from_graph(cls, g: Graph, caps=None, backend: str | None = None) -> "CoronaStats":
        from . import solver

        alpha_prime, _ = solver.matching_number(
            g, caps or solver.DEFAULT_CAPS, backend
        )
        return cls(n=g.n, alpha_prime=alpha_prime)


# ---------------------------------------------------------------------------
# paths, cycles, wheels


def s_path(n: int) -> int:
    """ceil(n/3) when n = 2 mod 3, else floor(n/3)."""
    if n < 1:
        raise DomainError(f"s_path needs n >= 1, got {n}")
    return _ceil_div(n, 3) if n % 3 == 2 else n // 3


def s_cycle(n: int) -> int:
    """ceil(n/3)."""
    if n < 3:
        raise DomainError(f"s_cycle needs n >= 3, got {n}")
    return _ceil_div(n, 3)


def s_wheel(n: int) -> int:
    """1 + s_path(n - 2) for a wheel of total order n (hub plus rim)."""
    if n < 4:
        raise DomainError(f"s_wheel needs n >= 4, got {n}")
    return 1 + s_path(n - 2)


# ---------------------------------------------------------------------------
# edge deletion


def s_cycle_minus_edge(n: int) -> int:
    """Deleting any cycle edge leaves a path: s_path(n)."""
    if n < 3:
        raise DomainError(f"s_cycle_minus_edge needs n >= 3, got {n}")
    return s_path(n)


def _check_edge_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise DomainError(f"edge index i={i} outside 1..{n - 1} for a path of order {n}")


def s_path_minus_edge_paper(n: int, i: int) -> int:
    """The published three-case rule for removing the i-th path edge.

    Reproduced verbatim, known gaps included: the audit finds interior
    indices where it disagrees with :func:`s_path_minus_edge_exact`.
    """
    _check_edge_index(n, i)
    base = s_path(n)
    if n % 3 == 2 and (i == 1 or i == n - 1 or (n % 2 == 0 and i == n // 2)):
        return base - 1
    if n % 3 == 1 and i in (2, n - 2):
        return base + 1
    return base


def s_path_minus_edge_exact(n: int, i: int) -> int:
    """Ground truth via the split decomposition: s_path(i) + s_path(n - i)."""
    _check_edge_index(n, i)
    left = s_path(i) if i >= 1 else 0
    right = s_path(n - i) if n - i >= 1 else 0
    return left + right


# ---------------------------------------------------------------------------
# corona products


def s_corona_empty(stats: CoronaStats, m: int) -> int:
    """Core with m pendant-independent satellites per vertex: alpha' + l.

    Independent of m; equals n/2 whenever the core has a perfect matching.
    """
    if m < 1:
        raise DomainError(f"satellite order must be >= 1, got {m}")
    return stats.alpha_prime + stats.l


def s_corona_path(stats: CoronaStats, m: int) -> int:
    """n*s_path(m), plus alpha' + l exactly when m = 1 mod 3."""
    if m < 1:
        raise DomainError(f"satellite path order must be >= 1, got {m}")
    total = stats.n * s_path(m)
    if m % 3 == 1:
        total += stats.alpha_prime + stats.l
    return total


def s_corona_cycle(stats: CoronaStats, m: int) -> int:
    """n*s_cycle(m), plus alpha' + l exactly when m = 0 mod 3."""
    if m < 3:
        raise DomainError(f"satellite cycle order must be >= 3, got {m}")
    total = stats.n * s_cycle(m)
    if m % 3 == 0:
        total += stats.alpha_prime + stats.l
    return total


def s_k1_corona_bounds(s_g: int) -> tuple[int, int]:
    """Sandwich for a single-vertex core: s(G) <= s(K1 o G) <= 1 + s(G)."""
    if s_g < 0:
        raise DomainError(f"saturation number cannot be negative, got {s_g}")
    return s_g, s_g + 1


def s_k1_corona_path(n: int) -> int:
    """s(K1 o P_n): 1 + s_path(n) when n = 1 mod 3, else s_path(n)."""
    value = s_path(n)
    return value + 1 if n % 3 == 1 else value


def s_k1_corona_cycle(n: int) -> int:
    """s(K1 o C_n): 1 + s_cycle(n) when n = 0 mod 3, else s_cycle(n)."""
    value = s_cycle(n)
    return value + 1 if n % 3 == 0 else value


def s_k1_corona_wheel(n: int) -> int:
    """s(K1 o W_n): 1 + s_wheel(n) when n = 0 mod 3, else s_wheel(n)."""
    value = s_wheel(n)
    return value + 1 if n % 3 == 0 else value


def s_kbar_corona(m: int, s_k1_g: int) -> int:
    """m disjoint single-vertex coronas: m * s(K1 o G)."""
    if m < 1:
        raise DomainError(f"core order must be >= 1, got {m}")
    if s_k1_g < 0:
        raise DomainError(f"saturation number cannot be negative, got {s_k1_g}")
    return m * s_k1_g


def corona_bounds(n: int, s_g2: int, alpha_prime: int, l: int) -> tuple[int, int]:
    """General corona sandwich: n*s(G2) <= s(G1 o G2) <= n*s(G2) + alpha' + l."""
    if n < 1 or s_g2 < 0 or alpha_prime < 0 or l < 0 or 2 * alpha_prime + l != n:
        raise DomainError(
            f"inconsistent corona-bound arguments n={n}, s={s_g2}, "
            f"alpha'={alpha_prime}, l={l}"
        )
    low = n * s_g2
    return low, low + alpha_prime + l


# ---------------------------------------------------------------------------
# links and chains


def s_link_paths(m: int, n: int) -> int:
    """Link of n paths of order m (always equals s_path(m*n))."""
    if m < 1 or n < 1:
        raise DomainError(f"s_link_paths needs m, n >= 1, got m={m}, n={n}")
    base = n * s_path(m)
    if m % 3 == 0:
        return base
    if m % 3 == 1:
        return base + _ceil_div(n - 1, 3)
    return base - _ceil_div(n - 1, 3)


def s_chain_paths(m: int, n: int) -> int:
    """Chain of n paths of order m (always equals s_path(n*(m-1)+1))."""
    if n < 1:
        raise DomainError(f"s_chain_paths needs n >= 1, got {n}")
    if m < 1 or (m < 2 and n > 1):
        raise DomainError(
            f"s_chain_paths needs parts of order >= 2 to identify, got m={m}, n={n}"
        )
    base = n * s_path(m)
    if m % 3 == 0:
        return base - n // 3
    if m % 3 == 1:
        return base
    return base + (-2 * (n - 1)) // 3


#: (residue of m mod 3) -> list of (allowed distance set, adjustment function)
_LINK_CYCLE_ROWS = {
    0: [({1, 2, 3, 4, 5}, lambda n: 0)],
    1: [({1, 3, 4}, lambda n: -(n // 2)), ({2, 5}, lambda n: -(n - 1))],
    2: [({1, 4}, lambda n: -_ceil_div(n - 1, 3)), ({2, 3, 5}, lambda n: -(n // 2))],
}

_CHAIN_CYCLE_ROWS = {
    0: [({1, 2, 4, 5}, lambda n: -((n - 1) // 2)), ({3}, lambda n: 0)],
    1: [({1, 2, 3, 4, 5}, lambda n: -(n - 1))],
    2: [({1, 4}, lambda n: -_ceil_div(n, 2)), ({2, 3, 5}, lambda n: -(n - 1))],
}


def _cycle_row_value(rows, kind: str, m: int, n: int, d: int) -> int:
    if m < 3:
        raise DomainError(f"{kind} needs cycle order >= 3, got m={m}")
    if n < 1:
        raise DomainError(f"{kind} needs part count >= 1, got n={n}")
    if not 1 <= d <= m // 2:
        raise DomainError(
            f"{kind}: d={d} is not a distance on a cycle of order {m} (need 1..{m // 2})"
        )
    for dset, adjust in rows[m % 3]:
        if d in dset:
            return n * s_cycle(m) + adjust(n)
    raise UnsupportedParameterError(
        f"{kind}: no published case covers m={m} (residue {m % 3}) with d={d}"
    )


def s_link_cycles(m: int, n: int, d: int) -> int:
    """Link of n cycles of order m attached at distance d, per case table."""
    return _cycle_row_value(_LINK_CYCLE_ROWS, "s_link_cycles", m, n, d)


def s_chain_cycles(m: int, n: int, d: int) -> int:
    """Chain of n cycles of order m attached at distance d, per case table."""
    return _cycle_row_value(_CHAIN_CYCLE_ROWS, "s_chain_cycles", m, n, d)


def s_tri(n: int) -> int:
    """Chain of n triangles: floor((n-2)/2) + 2 (the floor is negative at n=1)."""
    if n < 1:
        raise DomainError(f"s_tri needs n >= 1, got {n}")
    return (n - 2) // 2 + 2


def s_sq(n: int) -> int:
    """Chain of n squares attached at opposite vertices: n + 1."""
    if n < 1:
        raise DomainError(f"s_sq needs n >= 1, got {n}")
    return n + 1
