"""Finite simple graphs and the games they induce.

Vertices are 0..n-1, edges are unordered pairs stored as (u, v) with
u < v.  Product constructions relabel the pair (v, x) as v * |V(H)| + x.
The serialization dialect is the familiar one: comment lines start with
"c", the problem line is "p edge <n> <m>", and edge lines "e <u> <v>" are
1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .games import SynchronousGame

__all__ = [
    "Graph",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "suspension",
    "tensor_product",
    "cartesian_product",
    "strong_product",
    "coloring_game",
    "homomorphism_game",
    "parse_graph",
    "serialize_graph",
]


@dataclass(frozen=True)
class Graph:
    vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < v < self.vertices):
                raise ValueError(f"edge {e} is not an ordered in-range pair")

    @classmethod
    def from_edges(cls, vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            norm.add((u, v) if u < v else (v, u))
        return cls(vertices, frozenset(norm))

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(
            w for w in range(self.vertices) if w != v and self.adjacent(v, w)
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def suspension(g: Graph) -> Graph:
    """Adjoin one new vertex adjacent to every existing vertex."""
    apex = g.vertices
    extra = [(v, apex) for v in range(g.vertices)]
    return Graph.from_edges(g.vertices + 1, list(g.edges) + extra)


def _product(g: Graph, h: Graph, rule) -> Graph:
    n = h.vertices
    edges = []
    for u in range(g.vertices):
        for x in range(n):
            for v in range(g.vertices):
                for y in range(n):
                    p, q = u * n + x, v * n + y
                    if p < q and rule(u, x, v, y):
                        edges.append((p, q))
    return Graph.from_edges(g.vertices * n, edges)


def tensor_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, lambda u, x, v, y: g.adjacent(u, v) and h.adjacent(x, y))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    return _product(
        g,
        h,
        lambda u, x, v, y: (u == v and h.adjacent(x, y))
        or (g.adjacent(u, v) and x == y),
    )


def strong_product(g: Graph, h: Graph) -> Graph:
    return _product(
        g,
        h,
        lambda u, x, v, y: (u == v and h.adjacent(x, y))
        or (g.adjacent(u, v) and x == y)
        or (g.adjacent(u, v) and h.adjacent(x, y)),
    )


# --- games ---------------------------------------------------------------------


def homomorphism_game(g: Graph, h: Graph) -> SynchronousGame:
    """The game whose perfect deterministic strategies are the graph
    homomorphisms g -> h: equal questions need equal answers, and adjacent
    questions need adjacent answers."""
    if g.vertices < 1 or h.vertices < 1:
        raise ValueError("both graphs need at least one vertex")
    return SynchronousGame.from_predicate(
        g.vertices,
        h.vertices,
        lambda v, w, a, b: (a == b) if v == w else (not g.adjacent(v, w) or h.adjacent(a, b)),
    )


def coloring_game(g: Graph, colors: int) -> SynchronousGame:
    """The proper-coloring game; identical to the homomorphism game into
    the complete graph on the color set."""
    if colors < 1:
        raise ValueError("at least one color is required")
    return homomorphism_game(g, complete_graph(colors))


# --- serialization ---------------------------------------------------------------


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {g.vertices} {g.edge_count}"]
    for u, v in g.sorted_edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {lineno}: expected 'p edge <n> <m>'")
            header = (int(parts[2]), int(parts[3]))
            if header[0] < 0 or header[1] < 0:
                raise ValueError(f"line {lineno}: negative counts")
        elif parts[0] == "e":
            if header is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"line {lineno}: vertex out of range")
            if u == v:
                raise ValueError(f"line {lineno}: loop at vertex {u + 1}")
            edges.add((u, v) if u < v else (v, u))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {parts[0]!r}")
    if header is None:
        raise ValueError("missing problem line")
    return Graph(header[0], frozenset(edges))
