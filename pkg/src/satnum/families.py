"""Named graph families and a small expression language for building them.

Grammar::

    expr := NAME '(' arg {',' arg} ')'
    arg  := INTEGER | expr

Leaf constructors: path(n), cycle(n), wheel(n), empty(n), complete(n),
tri(n), sq(n), linkpath(m,k), chainpath(m,k), linkcyc(m,k,d), chaincyc(m,k,d).
Inner nodes: union(A,B), corona(A,B), deledge(A,u,v).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .errors import FamilyError, ParseError
from .graph import (
    Graph,
    chain,
    corona,
    delete_edge,
    disjoint_union,
    link,
    new_graph,
)

Arg = Union["FamilySpec", int]

# Argument kinds per constructor: "i" = integer, "s" = sub-expression.
SIGNATURES: dict[str, str] = {
    "path": "i",
    "cycle": "i",
    "wheel": "i",
    "empty": "i",
    "complete": "i",
    "tri": "i",
    "sq": "i",
    "linkpath": "ii",
    "chainpath": "ii",
    "linkcyc": "iii",
    "chaincyc": "iii",
    "union": "ss",
    "corona": "ss",
    "deledge": "sii",
}


@dataclass(frozen=True)
class FamilySpec:
    """Tree-shaped description of a parameterized family instance."""

    name: str
    args: tuple[Arg, ...]

    def __post_init__(self):
        sig = SIGNATURES.get(self.name)
        if sig is None:
            raise FamilyError(f"unknown family constructor {self.name!r}")
        if len(self.args) != len(sig):
            raise FamilyError(
                f"{self.name} takes {len(sig)} argument(s), got {len(self.args)}"
            )
        for pos, (kind, arg) in enumerate(zip(sig, self.args)):
            if kind == "i" and not isinstance(arg, int):
                raise FamilyError(f"{self.name}: argument {pos + 1} must be an integer")
            if kind == "s" and not isinstance(arg, FamilySpec):
                raise FamilyError(f"{self.name}: argument {pos + 1} must be a family expression")


def render(spec: FamilySpec) -> str:
    """Canonical text for a spec; ``parse_family(render(s)) == s``."""
    parts = [render(a) if isinstance(a, FamilySpec) else str(a) for a in spec.args]
    return f"{spec.name}({','.join(parts)})"


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, offset=self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {got}")
        self.pos += 1

    def parse_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.error("expected a family name")
        return self.text[start:self.pos]

    def parse_int(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_expr(self) -> FamilySpec:
        name_start = self.pos
        name = self.parse_name()
        sig = SIGNATURES.get(name)
        if sig is None:
            self.pos = name_start
            self.error(f"unknown family name {name!r}")
        self.skip_ws()
        self.expect("(")
        args: list[Arg] = []
        for i, kind in enumerate(sig):
            if i > 0:
                self.skip_ws()
                self.expect(",")
            self.skip_ws()
            if kind == "i":
                if self.peek().isalpha():
                    self.error(f"{name}: argument {i + 1} must be an integer")
                args.append(self.parse_int())
            else:
                if not self.peek().isalpha():
                    self.error(f"{name}: argument {i + 1} must be a family expression")
                args.append(self.parse_expr())
        self.skip_ws()
        if self.peek() == ",":
            self.error(f"{name} takes only {len(sig)} argument(s)")
        self.expect(")")
        return FamilySpec(name, tuple(args))


def parse_family(text: str) -> FamilySpec:
    """Parse a family expression; whitespace is insignificant.

    Raises :class:`ParseError` with a 1-based byte offset on unknown names,
    arity mismatches, ill-typed arguments, or unbalanced parentheses.
    """
    p = _Parser(text)
    p.skip_ws()
    spec = p.parse_expr()
    p.skip_ws()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return spec


# ---------------------------------------------------------------------------
# builders


def _path(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _wheel(n: int) -> Graph:
    # hub 0 joined to a rim cycle on 1..n-1; at n=3 the rim collapses to one edge
    rim = list(range(1, n))
    edges = [(0, v) for v in rim]
    for i in range(len(rim)):
        edges.append((rim[i], rim[(i + 1) % len(rim)]))
    return new_graph(n, edges)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def build(spec: FamilySpec) -> Graph:
    """Materialize a family instance, validating all numeric invariants."""
    name, args = spec.name, spec.args
    if name == "path":
        (n,) = args
        _require(n >= 1, f"path({n}): order must be >= 1")
        return _path(n)
    if name == "cycle":
        (n,) = args
        _require(n >= 3, f"cycle({n}): order must be >= 3")
        return _cycle(n)
    if name == "wheel":
        (n,) = args
        _require(n >= 3, f"wheel({n}): order must be >= 3")
        return _wheel(n)
    if name == "empty":
        (n,) = args
        _require(n >= 1, f"empty({n}): order must be >= 1")
        return new_graph(n, [])
    if name == "complete":
        (n,) = args
        _require(n >= 1, f"complete({n}): order must be >= 1")
        return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if name == "tri":
        (n,) = args
        _require(n >= 1, f"tri({n}): length must be >= 1")
        return chain([(_cycle(3), 0, 1)] * n)
    if name == "sq":
        (n,) = args
        _require(n >= 1, f"sq({n}): length must be >= 1")
        return chain([(_cycle(4), 0, 2)] * n)
    if name == "linkpath":
        m, k = args
        _require(m >= 1, f"linkpath({m},{k}): part order must be >= 1")
        _require(k >= 1, f"linkpath({m},{k}): part count must be >= 1")
        return link([(_path(m), 0, m - 1)] * k)
    if name == "chainpath":
        m, k = args
        _require(m >= 1, f"chainpath({m},{k}): part order must be >= 1")
        _require(k >= 1, f"chainpath({m},{k}): part count must be >= 1")
        _require(m >= 2 or k == 1, f"chainpath({m},{k}): parts need distinct endpoints to identify")
        return chain([(_path(m), 0, m - 1)] * k)
    if name in ("linkcyc", "chaincyc"):
        m, k, d = args
        _require(m >= 3, f"{name}({m},{k},{d}): cycle order must be >= 3")
        _require(k >= 1, f"{name}({m},{k},{d}): part count must be >= 1")
        _require(
            1 <= d <= m // 2,
            f"{name}({m},{k},{d}): attach distance must satisfy 1 <= d <= {m // 2}",
        )
        parts = [(_cycle(m), 0, d)] * k
        return link(parts) if name == "linkcyc" else chain(parts)
    if name == "union":
        a, b = args
        return disjoint_union(build(a), build(b))
    if name == "corona":
        a, b = args
        return corona(build(a), build(b))
    if name == "deledge":
        a, u, v = args
        g = build(a)
        if not g.has_edge(u, v):
            raise FamilyError(f"deledge: ({u},{v}) is not an edge of {render(a)}")
        return delete_edge(g, (u, v))
    raise FamilyError(f"unknown family constructor {name!r}")  # pragma: no cover


def build_family(text: str) -> Graph:
    """Parse and build in one step."""
    return build(parse_family(text))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p) sample; test helper only."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return new_graph(n, edges)
