"""Shared test helpers: exhaustive graph corpora and independent oracles.

The oracles here deliberately re-derive everything from definitions (edge
pairs, full enumeration, triple scans) so they stay independent of the
production code paths they are used to check.
"""

from __future__ import annotations

import itertools
import random

from gracecolor.graphs import Graph, is_connected


def all_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph.from_edges(n, edges)


def all_connected_graphs(n: int):
    for g in all_graphs(n):
        if is_connected(g):
            yield g


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus a random subset of the remaining pairs."""
    if n == 1:
        return Graph.from_edges(1, [])
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < 0.35:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key: least relabeled edge set over all vertex
    permutations.  Only viable for small n."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        relabeled = tuple(sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in g.edges
        ))
        if best is None or relabeled < best:
            best = relabeled
    return (g.n, best)


def graceful_valid_oracle(g: Graph, colors, palette: int) -> bool:
    """Definition-level check: proper vertex coloring into [1..palette] whose
    induced edge colors differ on every pair of edges sharing an endpoint.
    Written against edge pairs, unlike the per-vertex production verifier."""
    if any(not (1 <= c <= palette) for c in colors):
        return False
    for u, v in g.edges:
        if colors[u] == colors[v]:
            return False
    edge_color = {e: abs(colors[e[0]] - colors[e[1]]) for e in g.edges}
    for e, f in itertools.combinations(g.edges, 2):
        if (set(e) & set(f)) and edge_color[e] == edge_color[f]:
            return False
    return True


def brute_force_chi_g(g: Graph, cap: int = 12) -> int | None:
    """Smallest palette 2..cap admitting a graceful coloring, by enumerating
    all palette**n colorings."""
    for k in range(2, cap + 1):
        for colors in itertools.product(range(1, k + 1), repeat=g.n):
            if graceful_valid_oracle(g, colors, k):
                return k
    return None


def contains_progression(values) -> bool:
    """Triple scan: does the set contain a 3-term arithmetic progression?"""
    xs = sorted(values)
    for i, j, k in itertools.combinations(range(len(xs)), 3):
        if xs[j] - xs[i] == xs[k] - xs[j]:
            return True
    return False


def longest_by_enumeration(m: int) -> tuple[int, tuple[int, ...]]:
    """Independent largest-subset oracle: grow the subset size until no
    combination of that size avoids a progression.  Subsets of
    progression-free sets are progression-free, so the first size level with
    no witness is conclusive."""
    best = 0
    best_set: tuple[int, ...] = ()
    for size in range(1, m + 1):
        found = None
        for combo in itertools.combinations(range(1, m + 1), size):
            if not contains_progression(combo):
                found = combo
                break
        if found is None:
            break
        best, best_set = size, found
    return best, best_set
