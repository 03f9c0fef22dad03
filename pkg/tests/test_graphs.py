"""Graph construction, family generators, edge-list I/O, and metrics."""

import math
import random

import pytest

from gracecolor.graphs import (
    Graph,
    GraphFamily,
    GraphFormatError,
    caterpillar,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    is_connected,
    max_degree,
    parse_graph,
    path,
    random_tree,
    regularity,
    serialize_graph,
    star,
    wheel,
)
from support import random_connected_graph


def test_from_edges_normalizes_and_validates():
    g = Graph.from_edges(3, [(2, 0), (0, 1)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.adjacency == ((1, 2), (0,), (0,))
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(0, [])


def test_parse_smallest_graphs():
    assert parse_graph("2 1\n0 1") == complete(2)
    assert parse_graph("3 3\n0 1\n1 2\n0 2") == complete(3)


def test_parse_reports_self_loop_line():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph("3 2\n0 1\n1 1")


def test_parse_rejections():
    with pytest.raises(GraphFormatError, match="two integers"):
        parse_graph("2 1\n0 x")
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_graph("2 1\n0 5")
    with pytest.raises(GraphFormatError, match="duplicate"):
        parse_graph("3 2\n0 1\n1 0")
    with pytest.raises(GraphFormatError, match="declares m=2"):
        parse_graph("3 2\n0 1")
    with pytest.raises(GraphFormatError, match="empty"):
        parse_graph("# nothing here\n")


def test_parse_accepts_comments_and_blank_lines():
    g = parse_graph("# a triangle\n3 3\n\n0 1\n1 2\n# middle\n0 2\n")
    assert g == complete(3)


def test_serialize_canonical():
    assert serialize_graph(complete(2)) == "2 1\n0 1\n"
    assert serialize_graph(path(3)) == "3 2\n0 1\n1 2\n"


def test_round_trip_on_random_graphs():
    rng = random.Random(20240817)
    for _ in range(100):
        n = rng.randint(1, 50)
        g = random_connected_graph(rng, n)
        assert parse_graph(serialize_graph(g)) == g


@pytest.mark.parametrize("n", range(2, 8))
def test_family_edge_counts(n):
    assert len(path(n).edges) == n - 1
    assert len(complete(n).edges) == n * (n - 1) // 2
    assert len(star(n).edges) == n - 1
    if n >= 3:
        assert len(cycle(n).edges) == n
    if n >= 4:
        assert len(wheel(n).edges) == 2 * (n - 1)
    assert len(complete_bipartite(n, 3).edges) == 3 * n


def test_complete4_shape():
    g = complete(4)
    assert len(g.edges) == 6
    assert all(len(a) == 3 for a in g.adjacency)


def test_wheel_convention():
    g = wheel(6)
    assert g.n == 6
    assert len(g.adjacency[0]) == 5  # hub adjacent to the whole rim
    assert all(len(g.adjacency[v]) == 3 for v in range(1, 6))


def test_caterpillar_by_construction():
    g = caterpillar(3, [2, 0, 1])
    assert g.n == 6
    assert is_connected(g) and len(g.edges) == g.n - 1  # a tree
    degrees = sorted(len(a) for a in g.adjacency)
    # spine vertex 0 carries two leaves plus one spine edge
    assert max_degree(g) == 3
    assert degrees == [1, 1, 1, 2, 2, 3]


def test_family_parameter_validation():
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        wheel(3)
    with pytest.raises(ValueError):
        complete_bipartite(0, 3)
    with pytest.raises(ValueError):
        caterpillar(2, [1])
    with pytest.raises(ValueError):
        GraphFamily("cycle", (4, 4)).build()
    with pytest.raises(ValueError):
        GraphFamily("moebius", (4,)).build()


def test_family_dispatch_matches_functions():
    assert GraphFamily("wheel", (7,)).build() == wheel(7)
    assert GraphFamily("caterpillar", (3, 2, 0, 1)).build() == caterpillar(3, [2, 0, 1])
    assert GraphFamily("random_tree", (9, 3)).build() == random_tree(9, 3)


def test_random_tree_is_tree():
    for seed in range(10):
        g = random_tree(12, seed)
        assert g.n == 12
        assert len(g.edges) == 11
        assert is_connected(g)


def test_max_degree_examples():
    assert max_degree(complete(4)) == 3
    assert max_degree(path(3)) == 2
    assert max_degree(wheel(7)) == 6


def test_regularity_examples():
    assert regularity(cycle(5)) == 2
    assert regularity(path(4)) is None
    assert regularity(complete(6)) == 5


def test_diameter_examples():
    for n in range(2, 7):
        assert diameter(complete(n)) == 1
    assert diameter(wheel(6)) == 2
    assert diameter(path(5)) == 4
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert diameter(disconnected) == math.inf


def test_diameter_against_floyd_warshall():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(2, 10)
        g = random_connected_graph(rng, n)
        dist = [[0 if i == j else math.inf for j in range(n)] for i in range(n)]
        for u, v in g.edges:
            dist[u][v] = dist[v][u] = 1
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    alt = dist[i][k] + dist[k][j]
                    if alt < dist[i][j]:
                        dist[i][j] = alt
        assert diameter(g) == max(max(row) for row in dist)


def test_graphs_are_immutable_and_hashable():
    g = path(4)
    with pytest.raises(AttributeError):
        g.n = 5
    assert hash(g) == hash(path(4))
