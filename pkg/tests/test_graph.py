import networkx as nx
import pytest
from hypothesis import given

from circpw.errors import ParseError, PreconditionError
from circpw.graph import (
    Graph,
    RootedForest,
    block_cut_forest,
    complete_graph,
    cycle_graph,
    dfs_tree,
    disjoint_union,
    is_biconnected,
    is_k_connected,
    path_graph,
    star_graph,
    vertex_connectivity,
    vertex_disjoint_paths,
)
from circpw.io import format_graph, parse_graph
from conftest import graphs
from reference import dfs_heights, to_nx


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_basic_queries():
    g = Graph(4, [(2, 1), (0, 1)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbors(1) == (0, 2)
    assert g.m == 2 and g.max_degree() == 2
    assert g.components() == [[0, 1, 2], [3]]
    sub, ids = g.induced_subgraph([1, 2, 3])
    assert ids == [1, 2, 3] and sub.edges() == [(0, 1)]


def test_connectivity_small_cases():
    assert vertex_connectivity(complete_graph(4)) == 3
    assert vertex_connectivity(cycle_graph(5)) == 2
    assert vertex_connectivity(path_graph(3)) == 1
    assert vertex_connectivity(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0


@given(graphs(max_n=9))
def test_connectivity_matches_networkx(g):
    expected = nx.node_connectivity(to_nx(g)) if g.n > 1 else 0
    assert vertex_connectivity(g) == expected


@given(graphs(max_n=9))
def test_k_connected_agrees_with_connectivity(g):
    kappa = vertex_connectivity(g)
    for k in range(0, 6):
        assert is_k_connected(g, k) == (kappa >= k)


@given(graphs(min_n=2, max_n=9))
def test_disjoint_paths_are_disjoint(g):
    if g.has_edge(0, g.n - 1):
        with pytest.raises(ValueError):
            vertex_disjoint_paths(g, 0, g.n - 1)
        return
    paths = vertex_disjoint_paths(g, 0, g.n - 1)
    inner = [v for p in paths for v in p[1:-1]]
    assert len(inner) == len(set(inner))
    for p in paths:
        assert p[0] == 0 and p[-1] == g.n - 1
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    assert len(paths) == nx.node_connectivity(to_nx(g), 0, g.n - 1)


def test_block_cut_forest_two_triangles():
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bcf = block_cut_forest(g)
    assert bcf.blocks == ((0, 1, 2), (2, 3, 4))
    assert bcf.cut_vertices == (2,)
    assert bcf.forest_graph().edges() == [(0, 2), (1, 2)]


def test_block_cut_forest_path_and_isolated():
    g = disjoint_union(path_graph(4), Graph(1, []))
    bcf = block_cut_forest(g)
    assert bcf.blocks == ((0, 1), (1, 2), (2, 3), (4,))
    assert sorted(bcf.cut_vertices) == [1, 2]


@given(graphs(max_n=10))
def test_blocks_match_networkx(g):
    bcf = block_cut_forest(g)
    h = to_nx(g)
    expected = {frozenset(c) for c in nx.biconnected_components(h)}
    expected |= {frozenset([v]) for v in h if h.degree(v) == 0}
    assert {frozenset(b) for b in bcf.blocks} == expected
    assert set(bcf.cut_vertices) == set(nx.articulation_points(h))
    # blocks partition the edges and the forest is acyclic
    assert sorted(e for es in bcf.block_edges for e in es) == g.edges()
    assert bcf.forest_graph().is_forest()


@given(graphs(min_n=3, max_n=9))
def test_is_biconnected_matches_networkx(g):
    assert is_biconnected(g) == (g.n >= 3 and nx.is_biconnected(to_nx(g)))


def test_dfs_tree_visits_smallest_neighbour_first():
    f = dfs_tree(complete_graph(3))
    assert f.tree_edges() == [(0, 1), (1, 2)]
    assert f.height == 2
    with pytest.raises(PreconditionError):
        dfs_tree(Graph(2, []))


@given(graphs(min_n=1, max_n=10))
def test_dfs_tree_heights_match_reference(g):
    if not g.is_connected():
        return
    f = dfs_tree(g)
    ref = dfs_heights(g)
    assert list(f.heights) == [ref[v] for v in range(g.n)]
    # every edge joins an ancestor and a descendant
    for u, v in g.edges():
        assert f.is_ancestor(u, v) or f.is_ancestor(v, u)


def test_rooted_forest_rejects_cycles():
    with pytest.raises(ValueError):
        RootedForest((1, 0))


def test_star_and_closure():
    f = RootedForest((None, 0, 0, 1))
    assert list(f.roots) == [0]
    assert f.ancestors(3) == [3, 1, 0]
    assert sorted(f.closure().edges()) == [(0, 1), (0, 2), (0, 3), (1, 3)]
    assert star_graph(3).degree(0) == 3


# -- formats -----------------------------------------------------------------

def test_edgelist_round_trip_and_errors():
    g = Graph(4, [(0, 1), (2, 3)])
    assert parse_graph(format_graph(g)) == g
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("3 1\n0 x\n")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("3 1\n0 5\n")


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    text = format_graph(g, "graph6").strip()
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert parse_graph(text, "graph6") == g


def test_graph6_header_and_errors():
    g = parse_graph(">>graph6<<Bw\n", "graph6")
    assert g.n == 3 and g.m == 3
    with pytest.raises(ParseError):
        parse_graph("B~~~", "graph6")


def test_dot_output_mentions_edges():
    text = format_graph(path_graph(3), "dot")
    assert "0 -- 1" in text and "1 -- 2" in text
