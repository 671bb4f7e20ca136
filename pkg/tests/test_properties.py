"""Property-based checks over random small graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from dcnconn import (
    ShapeSpec,
    build_graph,
    components,
    delete_vertices,
    enumerate_shape_copies,
    is_connected,
    is_shape,
    line_graph,
    min_structure_cut,
    min_vertex_cut,
)
from dcnconn.shapes import STRUCTURE, SUBSTRUCTURE


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8):
    n = draw(st.integers(min_vertices, max_vertices))
    labels = [f"v{i}" for i in range(n)]
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return build_graph(labels, edges)


@st.composite
def connected_graphs(draw, min_vertices=2, max_vertices=8):
    n = draw(st.integers(min_vertices, max_vertices))
    labels = [f"v{i}" for i in range(n)]
    # random spanning tree first, then extra edges
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.add((labels[j], labels[i]))
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    for p in pairs:
        if p not in edges and draw(st.booleans()):
            edges.add(p)
    return build_graph(labels, sorted(edges))


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_components_partition(g):
    comps = components(g)
    assert sum(len(c) for c in comps) == g.vertex_count
    seen = set()
    for c in comps:
        assert not (c & seen)
        seen |= c
    assert is_connected(g) == (len(comps) <= 1)


@given(connected_graphs())
@settings(max_examples=30, deadline=None)
def test_single_shape_cut_equals_vertex_connectivity(g):
    res = min_structure_cut(g, ShapeSpec.single(), STRUCTURE)
    assert res.value == min_vertex_cut(g)


@given(connected_graphs(max_vertices=7))
@settings(max_examples=25, deadline=None)
def test_min_cut_matches_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.labels)
    h.add_edges_from(g.edges())
    expected = nx.node_connectivity(h) if g.edge_count else 0
    if g.vertex_count >= 2 and is_connected(g):
        assert min_vertex_cut(g) == expected


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_line_graph_counts(g):
    lg = line_graph(g)
    assert lg.vertex_count == g.edge_count
    assert lg.edge_count == sum(
        g.degree(v) * (g.degree(v) - 1) // 2 for v in g.labels
    )


@given(graphs(), st.sampled_from(["star", "path", "cycle", "clique"]), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_enumeration_canonical_and_valid(g, kind, size):
    if kind == "cycle":
        size = max(size, 3)
    shape = ShapeSpec(kind, size)
    for mode in (STRUCTURE, SUBSTRUCTURE):
        copies = list(enumerate_shape_copies(g, shape, mode))
        assert len(set(copies)) == len(copies)
        assert copies == list(enumerate_shape_copies(g, shape, mode))
        for member in copies:
            assert is_shape(g, member, mode)


@given(connected_graphs(max_vertices=7), st.integers(1, 3))
@settings(max_examples=20, deadline=None)
def test_substructure_not_larger_than_structure(g, t):
    shape = ShapeSpec.star(t)
    st_res = min_structure_cut(g, shape, STRUCTURE)
    sub_res = min_structure_cut(g, shape, SUBSTRUCTURE)
    if st_res.value is not None and sub_res.value is not None:
        assert sub_res.value <= st_res.value


@given(graphs(min_vertices=3))
@settings(max_examples=40, deadline=None)
def test_deletion_keeps_surviving_edges(g):
    victim = g.labels[0]
    h = delete_vertices(g, [victim])
    assert h.vertex_count == g.vertex_count - 1
    for u, v in h.edges():
        assert g.has_edge(u, v)
    assert h.edge_count == g.edge_count - g.degree(victim)
