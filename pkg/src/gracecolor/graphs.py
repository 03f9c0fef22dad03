"""Simple undirected graphs: construction, named families, edge-list I/O.

Vertices are the integers 0..n-1.  Graph values are immutable after
construction and safe to share between concurrent searchers.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    edges holds normalized pairs (u, v) with u < v, sorted; adjacency is the
    per-vertex sorted neighbor tuple derived from edges.  Build instances via
    Graph.from_edges, which validates the invariants.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for prev, cur in zip(normalized, normalized[1:]):
            if prev == cur:
                raise ValueError(f"duplicate edge {cur}")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(normalized), tuple(tuple(sorted(a)) for a in adj))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def max_degree(g: Graph) -> int:
    """Largest vertex degree of g."""
    return max(len(a) for a in g.adjacency)


def regularity(g: Graph) -> int | None:
    """The common degree r if g is r-regular, else None."""
    degrees = {len(a) for a in g.adjacency}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == g.n


def diameter(g: Graph) -> int | float:
    """Longest shortest-path distance; math.inf if g is disconnected.

    Breadth-first search from every vertex; fine for the small graphs this
    package targets.
    """
    best = 0
    for source in range(g.n):
        dist = [-1] * g.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if -1 in dist:
            return float("inf")
        best = max(best, max(dist))
    return best


# ---------------------------------------------------------------------------
# Edge-list text format.
#
# First line "n m"; then m lines "u v" with u < v, sorted, LF-terminated.
# Lines starting with '#' are comments (input only).  serialize_graph emits
# the canonical form; parse_graph accepts unordered endpoints but rejects
# loops, duplicates, and out-of-range indices.
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document; raises GraphFormatError with line numbers."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphFormatError(f"invalid header n={a} m={b}", lineno)
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise GraphFormatError(f"self-loop on vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex index out of range for n={n}: {line!r}", lineno)
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("empty document: missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares m={header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list document: sorted edges, single spaces, LF endings."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Named families.  Canonical vertex numbering per family:
#   path/cycle: vertices in path/cycle order;
#   wheel: n total vertices, hub = 0, rim 1..n-1 forms a cycle;
#   complete_bipartite(p, q): left side 0..p-1, right side p..p+q-1;
#   star: center 0;
#   caterpillar: spine 0..s-1 in path order, then leaves in spine order;
#   random_tree: decoded from a seeded random Pruefer sequence.
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def wheel(n: int) -> Graph:
    """Wheel on n total vertices: hub 0 joined to every vertex of the (n-1)-cycle."""
    if n < 4:
        raise ValueError("wheel needs n >= 4 (hub plus a cycle of length >= 3)")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    spokes = [(0, i) for i in range(1, n)]
    return Graph.from_edges(n, spokes + rim)


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("complete bipartite graph needs p, q >= 1")
    return Graph.from_edges(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def star(n: int) -> Graph:
    """Star on n vertices: center 0 with n-1 leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def caterpillar(spine: int, legs: Sequence[int]) -> Graph:
    """Spine path of `spine` vertices with legs[i] leaves hanging off spine vertex i."""
    if spine < 1:
        raise ValueError("caterpillar needs spine >= 1")
    if len(legs) != spine:
        raise ValueError(f"need one leg count per spine vertex, got {len(legs)} for spine {spine}")
    if any(x < 0 for x in legs):
        raise ValueError("leg counts must be nonnegative")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, count in enumerate(legs):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices (Pruefer decode, seeded)."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class GraphFamily:
    """A named family instance: tag plus integer parameters.

    Tags and parameter shapes:
      path n | cycle n | complete n | wheel n | star n
      complete_bipartite p q
      caterpillar spine leg0 leg1 ... (one leg count per spine vertex)
      random_tree n seed
    """

    tag: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        tag, p = self.tag, self.params
        if tag == "path":
            return path(*_arity(tag, p, 1))
        if tag == "cycle":
            return cycle(*_arity(tag, p, 1))
        if tag == "complete":
            return complete(*_arity(tag, p, 1))
        if tag == "wheel":
            return wheel(*_arity(tag, p, 1))
        if tag == "star":
            return star(*_arity(tag, p, 1))
        if tag == "complete_bipartite":
            return complete_bipartite(*_arity(tag, p, 2))
        if tag == "caterpillar":
            if len(p) < 1:
                raise ValueError("caterpillar needs a spine length")
            spine = p[0]
            return caterpillar(spine, list(p[1:]))
        if tag == "random_tree":
            return random_tree(*_arity(tag, p, 2))
        raise ValueError(f"unknown family tag {tag!r}")


FAMILY_TAGS = ("path", "cycle", "complete", "wheel", "star",
               "complete_bipartite", "caterpillar", "random_tree")


def _arity(tag: str, params: tuple[int, ...], want: int) -> tuple[int, ...]:
    if len(params) != want:
        raise ValueError(f"{tag} takes {want} parameter(s), got {len(params)}")
    return params


def generate(family: GraphFamily) -> Graph:
    """Build the graph described by a GraphFamily value."""
    return family.build()
