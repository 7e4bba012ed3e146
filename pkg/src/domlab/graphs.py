"""Simple undirected graphs with dense integer vertex ids.

Vertex ids always run 0..n-1.  Graphs are immutable: every edit returns a
new value, so instances can be shared freely across threads and used as
dictionary keys.

Named fixture graphs use a fixed numbering:

    k4            complete graph on 0..3
    k13           claw: center 0, leaves 1..3
    petersen      outer 5-cycle 0..4, inner vertices 5..9; spokes i--(i+5),
                  inner edges (5+i)--(5+((i+2) mod 5))
    prism         triangles 0-1-2 and 3-4-5 joined by the matching i--(i+3)
    c<k>          cycle 0-1-...-(k-1)-0, k >= 3
    p<k>          path 0-1-...-(k-1), k >= 1
    theta(a,b,c)  hubs 0 and 1 joined by three internally disjoint paths
                  with a, b and c internal vertices (at most one of them
                  may be 0); internals are numbered 2.. in path order
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max) order."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is a tuple of strictly increasing neighbor tuples, so every
    iteration over the graph is deterministic.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, row in enumerate(self.adj):
            prev = -1
            for u in row:
                if u <= prev:
                    raise ValueError(f"neighbors of {v} not strictly increasing")
                prev = u
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"edge {v}-{u} lacks its mirror")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def max_degree(self) -> int:
        return max((len(row) for row in self.adj), default=0)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v]) | {v}


def components(g: Graph, banned: Iterable[int] = ()) -> tuple[tuple[int, ...], ...]:
    """Connected components of g minus `banned`.

    Each component is a sorted vertex tuple; components are ordered by
    their smallest member.
    """
    seen = set(banned)
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    """True iff g has at most one component (the empty graph counts)."""
    return len(components(g)) <= 1


def is_cubic(g: Graph) -> bool:
    """True iff every vertex has degree exactly 3."""
    return all(len(row) == 3 for row in g.adj)


def _disjoint_paths(g: Graph, s: int, t: int, cap: int) -> int:
    """Maximum number of internally disjoint s-t paths, capped at `cap`.

    Unit-capacity max flow on the split digraph: vertex v becomes arc
    2v -> 2v+1 of capacity one (unbounded at the terminals), each edge
    contributes an arc of capacity one in both directions.
    """
    big = g.n
    capacity: dict[tuple[int, int], int] = {}

    def arc(a: int, b: int, c: int) -> None:
        capacity[(a, b)] = capacity.get((a, b), 0) + c
        capacity.setdefault((b, a), 0)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)

    succ: dict[int, list[int]] = {}
    for a, b in capacity:
        succ.setdefault(a, []).append(b)
    for a in succ:
        succ[a].sort()

    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {src: src}
        queue = deque([src])
        while queue and dst not in parent:
            a = queue.popleft()
            for b in succ.get(a, ()):
                if b not in parent and capacity[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if dst not in parent:
            break
        b = dst
        while b != src:
            a = parent[b]
            capacity[(a, b)] -= 1
            capacity[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum over non-adjacent pairs of the disjoint-path count.

    Complete graphs (including a single vertex) return n-1.
    """
    if g.n == 0:
        raise ValueError("vertex connectivity needs at least one vertex")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _disjoint_paths(g, s, t, best))
    return best


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Same vertices, edges minus `edges`; non-edges are rejected."""
    doomed = set()
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge")
        doomed.add(edge_key(u, v))
    adj = tuple(
        tuple(u for u in row if edge_key(v, u) not in doomed)
        for v, row in enumerate(g.adj)
    )
    return Graph(g.n, adj)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the surviving vertices.

    Returns (graph, remap) where remap[new_id] = original_id; surviving
    vertices are renumbered densely in increasing original order.
    """
    doomed = set(vertices)
    for v in doomed:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    remap = tuple(v for v in range(g.n) if v not in doomed)
    index = {old: new for new, old in enumerate(remap)}
    adj = tuple(
        tuple(index[u] for u in g.adj[old] if u not in doomed) for old in remap
    )
    return Graph(len(remap), adj), remap


def random_cubic(n: int, seed: int) -> Graph:
    """Connected random 3-regular graph via the pairing model.

    Pairings producing loops, parallel edges or a disconnected graph are
    rejected and redrawn, so the result is deterministic in (n, seed).
    """
    if n < 4 or n % 2:
        raise ValueError("a cubic graph needs an even vertex count n >= 4")
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges: set[Edge] = set()
        ok = True
        it = iter(stubs)
        for u, v in zip(it, it):
            if u == v or edge_key(u, v) in edges:
                ok = False
                break
            edges.add(edge_key(u, v))
        if not ok:
            continue
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def gnp_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic in (n, p, seed)."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def _prism() -> Graph:
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges)


def _theta(a: int, b: int, c: int) -> Graph:
    if min(a, b, c) < 0:
        raise ValueError("theta path lengths must be non-negative")
    if (a == 0) + (b == 0) + (c == 0) > 1:
        raise ValueError("at most one theta path may be a bare hub-hub edge")
    edges: list[Edge] = []
    nxt = 2
    for length in (a, b, c):
        if length == 0:
            edges.append((0, 1))
            continue
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


_THETA_RE = re.compile(r"theta\((\d+),(\d+),(\d+)\)")


def named_graph(name: str) -> Graph:
    """Standard fixture graph by name; see the module docstring for numbering."""
    key = name.strip().lower()
    if key == "k4":
        return _complete(4)
    if key == "k13":
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    if key == "petersen":
        return _petersen()
    if key == "prism":
        return _prism()
    m = re.fullmatch(r"c(\d+)", key)
    if m:
        return _cycle(int(m.group(1)))
    m = re.fullmatch(r"p(\d+)", key)
    if m:
        return _path(int(m.group(1)))
    m = _THETA_RE.fullmatch(key)
    if m:
        return _theta(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    raise ValueError(f"unknown graph name: {name!r}")


def is_graph_name(text: str) -> bool:
    """True iff `text` parses as a named fixture rather than a graph6 line."""
    key = text.strip().lower()
    if key in ("k4", "k13", "petersen", "prism"):
        return True
    return bool(
        re.fullmatch(r"c\d+", key)
        or re.fullmatch(r"p\d+", key)
        or _THETA_RE.fullmatch(key)
    )
