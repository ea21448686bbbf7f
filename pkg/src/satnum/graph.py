"""Immutable simple graphs, matching predicates, and structural products.

Vertices are always labeled 0..n-1.  Labeling conventions for the product
operations are fixed so that witnesses and golden files reproduce exactly:

* ``disjoint_union``: the second operand is shifted by ``g1.n``.
* ``corona``: core vertices keep their labels; the i-th satellite copy
  occupies the block ``n1 + i*n2 .. n1 + (i+1)*n2 - 1``.
* ``link``: blocks are shifted by cumulative offsets, in order.
* ``chain``: identified vertices keep the earlier block's label; the other
  vertices of a block receive fresh labels in local order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError, ParseError

#: Default structural cap; a single 64-bit word holds one vertex set.
DEFAULT_MAX_VERTICES = 64

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable value objects: equality and hashing follow the
    vertex count and the edge set, and every structural operation returns a
    new graph.  Safe to share between threads.
    """

    n: int
    edges: frozenset[Edge]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges as a sorted tuple of (min, max) pairs."""
        return tuple(sorted(self.edges))

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex (bit v of ``adj_bits[u]`` = edge uv)."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbr)

    def adj_array(self) -> np.ndarray:
        """Adjacency bitmasks as a uint64 vector (requires n <= 64)."""
        if self.n > 64:
            raise GraphError(f"bitmask adjacency needs n <= 64, got n={self.n}")
        return np.array(self.adj_bits, dtype=np.uint64)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def new_graph(
    n: int,
    edges: Iterable[Sequence[int]] = (),
    *,
    max_n: int | None = DEFAULT_MAX_VERTICES,
) -> Graph:
    """Build a normalized graph; duplicate pairs in either orientation collapse.

    Raises :class:`GraphError` for out-of-range endpoints, self-loops, or a
    vertex count beyond ``max_n`` (pass ``max_n=None`` to lift the cap).
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    if max_n is not None and n > max_n:
        raise GraphError(f"vertex count {n} exceeds the structural cap {max_n}")
    norm: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        norm.add(_norm_edge(u, v))
    return Graph(n, frozenset(norm))


# ---------------------------------------------------------------------------
# matchings


def matching_defect(g: Graph, edges: Iterable[Sequence[int]]) -> str | None:
    """Reason the edge list is not a matching of ``g``, or None if it is one."""
    seen = set()
    used = 0
    for e in edges:
        u, v = int(e[0]), int(e[1])
        key = _norm_edge(u, v)
        if not (0 <= u < g.n and 0 <= v < g.n) or key not in g.edges:
            return f"edge ({u},{v}) is not an edge of the graph"
        if key in seen:
            continue
        seen.add(key)
        bits = (1 << key[0]) | (1 << key[1])
        if used & bits:
            shared = key[0] if used >> key[0] & 1 else key[1]
            return f"edges share vertex {shared}"
        used |= bits
    return None


def is_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    """True iff every edge is in ``g`` and no two edges share a vertex."""
    return matching_defect(g, edges) is None


def _covered_mask(edges: Iterable[Sequence[int]]) -> int:
    mask = 0
    for u, v in edges:
        mask |= (1 << int(u)) | (1 << int(v))
    return mask


def is_maximal_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    """True iff the edges form a matching that dominates every edge of ``g``."""
    edges = [(int(e[0]), int(e[1])) for e in edges]
    if matching_defect(g, edges) is not None:
        return False
    mask = _covered_mask(edges)
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges)


def is_perfect_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    """True iff the edges form a matching covering every vertex."""
    edges = [(int(e[0]), int(e[1])) for e in edges]
    if matching_defect(g, edges) is not None:
        return False
    return _covered_mask(edges) == (1 << g.n) - 1 if g.n else True


def uncovered(g: Graph, edges: Iterable[Sequence[int]]) -> frozenset[int]:
    """Vertices incident to no edge of the matching.

    Raises :class:`GraphError` if the edge list is not a matching of ``g``.
    For a maximal matching the result is always an independent set.
    """
    edges = [(int(e[0]), int(e[1])) for e in edges]
    defect = matching_defect(g, edges)
    if defect is not None:
        raise GraphError(f"not a matching: {defect}")
    mask = _covered_mask(edges)
    return frozenset(v for v in range(g.n) if not mask >> v & 1)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no edge of ``g`` joins two of the given vertices."""
    vs = set()
    for v in vertices:
        v = int(v)
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        vs.add(v)
    return not any(u in vs and v in vs for u, v in g.edges)


@dataclass(frozen=True)
class Matching:
    """A validated matching bound to its graph."""

    graph: Graph
    edges: frozenset[Edge]

    def __post_init__(self):
        defect = matching_defect(self.graph, self.edges)
        if defect is not None:
            raise GraphError(f"not a matching: {defect}")
        object.__setattr__(
            self, "edges", frozenset(_norm_edge(u, v) for u, v in self.edges)
        )

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def is_maximal(self) -> bool:
        return is_maximal_matching(self.graph, self.edges)

    def is_perfect(self) -> bool:
        return is_perfect_matching(self.graph, self.edges)

    def uncovered(self) -> frozenset[int]:
        return uncovered(self.graph, self.edges)


# ---------------------------------------------------------------------------
# structural operations


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union with ``g2`` relabeled by offset ``g1.n``."""
    off = g1.n
    edges = list(g1.edge_list) + [(u + off, v + off) for u, v in g2.edge_list]
    return new_graph(g1.n + g2.n, edges)


def delete_edge(g: Graph, edge: Sequence[int]) -> Graph:
    """Same vertex set, edge set minus one existing edge."""
    key = _norm_edge(int(edge[0]), int(edge[1]))
    if key not in g.edges:
        raise GraphError(f"edge ({key[0]},{key[1]}) not present")
    return Graph(g.n, g.edges - {key})


def corona(g1: Graph, g2: Graph) -> Graph:
    """Corona product: one copy of ``g1``, ``g1.n`` copies of ``g2``, with
    core vertex i joined to every vertex of the i-th copy."""
    if g1.n < 1:
        raise GraphError("corona needs a nonempty core graph")
    n1, n2 = g1.n, g2.n
    edges: list[Edge] = list(g1.edge_list)
    for i in range(n1):
        off = n1 + i * n2
        edges.extend((off + u, off + v) for u, v in g2.edge_list)
        edges.extend((i, off + j) for j in range(n2))
    return new_graph(n1 * (1 + n2), edges)


def _check_anchor(g: Graph, v: int, what: str, index: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"{what} vertex {v} of part {index} outside 0..{g.n - 1}")


def link(parts: Sequence[tuple[Graph, int, int]]) -> Graph:
    """Join consecutive parts by a new edge from each exit to the next entry.

    ``parts`` is a sequence of (graph, entry, exit) triples; the first entry
    and last exit are unused anchors.
    """
    if not parts:
        raise GraphError("link needs at least one part")
    edges: list[Edge] = []
    off = 0
    prev_exit = -1
    for idx, (g, x, y) in enumerate(parts):
        _check_anchor(g, x, "entry", idx)
        _check_anchor(g, y, "exit", idx)
        edges.extend((off + u, off + v) for u, v in g.edge_list)
        if idx > 0:
            edges.append((prev_exit, off + x))
        prev_exit = off + y
        off += g.n
    return new_graph(off, edges)


def chain(parts: Sequence[tuple[Graph, int, int]]) -> Graph:
    """Join consecutive parts by identifying each exit with the next entry.

    Identified vertices keep the earlier block's label.  An interior part
    (neither first nor last) with entry == exit is rejected; unused anchors
    (the first entry and the last exit) may coincide with anything.
    """
    if not parts:
        raise GraphError("chain needs at least one part")
    k = len(parts)
    for idx, (g, x, y) in enumerate(parts):
        _check_anchor(g, x, "entry", idx)
        _check_anchor(g, y, "exit", idx)
        if k > 1 and 0 < idx < k - 1 and x == y:
            raise GraphError(f"part {idx} has entry == exit == {x}; interior parts need distinct anchors")
    edges: list[Edge] = []
    next_label = 0
    prev_exit = -1
    for idx, (g, x, y) in enumerate(parts):
        label = [0] * g.n
        for v in range(g.n):
            if idx > 0 and v == x:
                label[v] = prev_exit
            else:
                label[v] = next_label
                next_label += 1
        edges.extend((label[u], label[v]) for u, v in g.edge_list)
        prev_exit = label[y]
    return new_graph(next_label, edges)


# ---------------------------------------------------------------------------
# edge-list text format


def to_edgelist_text(g: Graph) -> str:
    """Serialize: header ``n m`` then one ``u v`` line per sorted edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str, *, max_n: int | None = DEFAULT_MAX_VERTICES) -> Graph:
    """Parse the edge-list format; ``#`` lines are comments, blanks ignored."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("edge list is empty: missing 'n m' header line")
    header = rows[0][1].split()
    if len(header) != 2:
        raise ParseError(f"line {rows[0][0]}: header must be 'n m', got {rows[0][1]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line {rows[0][0]}: header must be two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines found")
    edges = []
    for lineno, line in body:
        cols = line.split()
        if len(cols) != 2:
            raise ParseError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        try:
            edges.append((int(cols[0]), int(cols[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: edge endpoints must be integers") from None
    try:
        return new_graph(n, edges, max_n=max_n)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def write_edgelist(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_edgelist_text(g))


def read_edgelist(path, *, max_n: int | None = DEFAULT_MAX_VERTICES) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return from_edgelist_text(fh.read(), max_n=max_n)
