"""Simple undirected graphs: DIMACS-style parsing, an exact backtracking
three-coloring oracle, seeded random generation, and the standard corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    EmptyEdgeSetError,
    ParseError,
    PartialColoringError,
    ValidationError,
)

Coloring = dict[int, int]  # vertex -> color in {1, 2, 3}


@dataclass(frozen=True)
class Graph:
    """Vertices are 1..n; edges are sorted pairs (u, v) with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def make(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValidationError(f"vertex count {n} is negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > n:
                raise ValidationError(f"edge ({u},{v}) outside 1..{n}")
            canon.add((u, v))
        return cls(n, frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def parse_graph(text) -> Graph:
    """Parse the DIMACS .col subset: "c" comments, one "p edge <n> <m>"
    header, then m lines "e <u> <v>". LF or CRLF, whitespace-separated.

    Duplicate edge lines collapse to a single edge.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    header = None
    edge_lines: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        kind = parts[0]
        if kind == "c":
            continue
        if kind == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer counts") from None
            continue
        if kind == "e":
            if header is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                edge_lines.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoints") from None
            continue
        raise ParseError(f"line {lineno}: unknown line type {kind!r}")
    if header is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    n, m = header
    if n < 0 or m < 0:
        raise ValidationError("problem line declares negative counts")
    if len(edge_lines) != m:
        raise ValidationError(
            f"problem line declares {m} edges but file has {len(edge_lines)}"
        )
    return Graph.make(n, edge_lines)


def to_col(G: Graph) -> str:
    """Render a graph back to canonical DIMACS .col text."""
    lines = [f"p edge {G.n} {G.m}"]
    lines.extend(f"e {u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


def is_three_coloring(G: Graph, phi: Mapping[int, int]) -> bool:
    """True iff phi colors every vertex in {1,2,3} with no monochromatic edge."""
    for v in range(1, G.n + 1):
        if v not in phi:
            raise PartialColoringError(f"vertex {v} has no color")
        if phi[v] not in (1, 2, 3):
            raise ValidationError(f"color {phi[v]!r} at vertex {v} is not in 1..3")
    return all(phi[u] != phi[v] for u, v in G.edges)


def three_color_backtracking(G: Graph) -> Coloring | None:
    """First proper three-coloring in deterministic order, or None.

    Vertices are tried in index order with colors 1, 2, 3; vertex 1 is
    pinned to color 1, which is safe for existence because colors can be
    permuted.
    """
    adj = G.adjacency()
    colors: Coloring = {}

    def extend(v: int) -> bool:
        if v > G.n:
            return True
        for c in (1,) if v == 1 else (1, 2, 3):
            if all(colors.get(u) != c for u in adj[v]):
                colors[v] = c
                if extend(v + 1):
                    return True
                del colors[v]
        return False

    return dict(colors) if extend(1) else None


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a Mersenne Twister seeded with `seed`.

    One uniform draw from random.Random(seed).random() is consumed per
    vertex pair in lexicographic order; the pair becomes an edge when the
    draw is < p. If no edge is drawn, one more draw picks a single edge
    uniformly, so the result is always usable as reduction input. The draw
    order is part of the contract: identical (n, p, seed) always yields
    the identical graph.
    """
    if n < 1:
        raise ValidationError(f"vertex count {n} must be at least 1")
    if not 0 <= p <= 1:
        raise ValidationError(f"edge probability {p} outside [0, 1]")
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if not pairs:
        raise EmptyEdgeSetError(f"no edge is possible on {n} vertex")
    rng = random.Random(seed)
    edges = {pair for pair in pairs if rng.random() < p}
    if not edges:
        edges = {pairs[min(int(rng.random() * len(pairs)), len(pairs) - 1)]}
    return Graph.make(n, edges)


# ---------------------------------------------------------------------------
# Standard corpus


def complete_graph(n: int) -> Graph:
    return Graph.make(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.make(n, [(v, v + 1) for v in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.make(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def petersen_graph() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(v, v + 5) for v in range(1, 6)]
    inner = [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)]
    return Graph.make(10, outer + spokes + inner)
