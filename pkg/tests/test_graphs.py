import random

import networkx as nx
import pytest

from cliquetheta.graphs import (
    CliquePath,
    CliqueTheta,
    GeneralizedTheta,
    InvalidSpec,
    RingOfCliques,
    SimpleGraph,
    UnsupportedLength,
    VertexOutOfRange,
    blow_up_vertex,
    build,
    complete_graph,
    cycle_graph,
    is_isomorphic,
    join_complete,
    path_graph,
    spec_from_json,
    spec_to_json,
    theta_as_clique_theta,
)


def as_nx(g):
    return g.to_networkx()


def test_simple_graph_rejects_loops_and_bad_endpoints():
    with pytest.raises(InvalidSpec):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(VertexOutOfRange):
        SimpleGraph.from_edges(3, [(0, 3)])


def test_parallel_edges_collapse():
    g = SimpleGraph.from_edges(2, [(0, 1), (1, 0)])
    assert g.n_edges == 1


def test_theta_with_a_direct_edge_is_a_triangle():
    g = build(GeneralizedTheta((1, 2)))
    assert (g.n_vertices, g.n_edges) == (3, 3)
    assert is_isomorphic(g, complete_graph(3))


def test_ring_figure_graph_counts():
    g = build(RingOfCliques((1, 2, 3, 2)))
    assert (g.n_vertices, g.n_edges) == (8, 21)


def test_clique_theta_of_unit_paths_is_c4():
    g = build(CliqueTheta(1, ((1,), (1,)), 1))
    assert nx.is_isomorphic(as_nx(g), nx.cycle_graph(4))


def test_clique_path_is_a_blown_up_path():
    a = (2, 1, 3)
    g = nx.path_graph(3)
    # independent construction: lexicographic product style blow-up with networkx
    h = nx.Graph()
    blocks = []
    for i, size in enumerate(a):
        block = [(i, c) for c in range(size)]
        blocks.append(block)
        h.add_nodes_from(block)
        h.add_edges_from((u, v) for u in block for v in block if u < v)
    for i, j in g.edges:
        h.add_edges_from((u, v) for u in blocks[i] for v in blocks[j])
    assert nx.is_isomorphic(as_nx(build(CliquePath(a))), h)


@pytest.mark.parametrize(
    "spec, n_vertices, n_edges",
    [
        (CliquePath((2, 3)), 5, 1 + 3 + 6),
        (RingOfCliques((1, 1, 1)), 3, 3),
        (RingOfCliques((2, 2, 2)), 6, 3 + 12),
        (GeneralizedTheta((3, 3, 3)), 8, 9),
        (CliqueTheta(2, ((2, 2), (3,), (1, 2, 1)), 1), 14, None),
    ],
)
def test_vertex_and_edge_counts(spec, n_vertices, n_edges):
    g = build(spec)
    assert g.n_vertices == n_vertices
    if isinstance(spec, CliqueTheta):
        assert spec.n_vertices == n_vertices
    if n_edges is not None:
        assert g.n_edges == n_edges


def test_clique_theta_vertex_formula_on_figure_graph():
    spec = CliqueTheta(1, ((2, 2), (3,), (1, 2, 1)), 2)
    assert spec.n_vertices == 1 + 2 + 4 + 3 + 4 == build(spec).n_vertices


@pytest.mark.parametrize(
    "bad",
    [
        lambda: CliquePath(()),
        lambda: CliquePath((1, 0)),
        lambda: RingOfCliques((1, 2)),
        lambda: GeneralizedTheta((1, 1, 2)),
        lambda: GeneralizedTheta(()),
        lambda: CliqueTheta(1, (), 1),
        lambda: CliqueTheta(1, ((),), 1),
        lambda: CliqueTheta(0, ((1,),), 1),
    ],
)
def test_invalid_specs(bad):
    with pytest.raises(InvalidSpec):
        bad()


@pytest.mark.parametrize(
    "g, n, expected",
    [
        (complete_graph(1), 1, nx.complete_graph(2)),
        (cycle_graph(4), 1, nx.wheel_graph(5)),
        (complete_graph(2), 2, nx.complete_graph(4)),
    ],
)
def test_join_complete(g, n, expected):
    assert nx.is_isomorphic(as_nx(join_complete(g, n)), expected)


def test_join_complete_matches_networkx_join():
    g = build(GeneralizedTheta((2, 3)))
    joined = nx.complement(nx.disjoint_union(nx.complement(as_nx(g)), nx.empty_graph(3)))
    assert nx.is_isomorphic(as_nx(join_complete(g, 3)), joined)


def test_blow_up_examples():
    assert is_isomorphic(blow_up_vertex(complete_graph(2), 0, 2), complete_graph(3))
    g = cycle_graph(5)
    assert blow_up_vertex(g, 2, 1) == g
    diamond = nx.complete_graph(4)
    diamond.remove_edge(0, 3)
    assert nx.is_isomorphic(as_nx(blow_up_vertex(path_graph(3), 1, 2)), diamond)
    with pytest.raises(VertexOutOfRange):
        blow_up_vertex(g, 5, 2)


def test_blow_up_reproduces_clique_path():
    # blowing up each vertex of a path gives the clique-path
    g = path_graph(3)
    for v, size in reversed(list(enumerate((2, 1, 3)))):
        g = blow_up_vertex(g, v, size)
    assert is_isomorphic(g, build(CliquePath((2, 1, 3))))


@pytest.mark.parametrize(
    "m, expected",
    [
        ((2, 2), nx.cycle_graph(4)),
        ((2, 2, 2), nx.complete_bipartite_graph(2, 3)),
        ((3, 3), nx.cycle_graph(6)),
    ],
)
def test_theta_as_clique_theta_examples(m, expected):
    spec = theta_as_clique_theta(m)
    assert spec.S == tuple((1,) * (x - 1) for x in m)
    assert nx.is_isomorphic(as_nx(build(spec)), expected)


def _theta_lengths():
    for n in (1, 2, 3):
        yield from _tuples(n, (2, 3, 4))


def _tuples(n, values):
    if n == 0:
        yield ()
        return
    for v in values:
        for rest in _tuples(n - 1, values):
            yield (v,) + rest


@pytest.mark.parametrize("m", list(_theta_lengths()))
def test_theta_as_clique_theta_is_isomorphic(m):
    assert is_isomorphic(build(theta_as_clique_theta(m)), build(GeneralizedTheta(m)))


def test_theta_with_direct_edge_has_no_clique_theta_form():
    with pytest.raises(UnsupportedLength):
        theta_as_clique_theta((1, 3))


@pytest.mark.parametrize("a", [(1, 2, 3, 2), (2, 1, 1, 3, 1), (1, 1, 2)])
def test_ring_invariant_under_rotation_and_reversal(a):
    g = build(RingOfCliques(a))
    for r in range(len(a)):
        rotated = a[r:] + a[:r]
        assert is_isomorphic(build(RingOfCliques(rotated)), g)
        assert is_isomorphic(build(RingOfCliques(rotated[::-1])), g)


def test_graph6_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = SimpleGraph.from_edges(n, edges)
        assert SimpleGraph.from_graph6(g.to_graph6()) == g
    assert SimpleGraph.from_graph6("Bw") == complete_graph(3)


@pytest.mark.parametrize(
    "spec",
    [
        CliquePath((1, 2)),
        RingOfCliques((1, 2, 3, 2)),
        GeneralizedTheta((1, 3)),
        CliqueTheta(1, ((2, 2), (3,), (1, 2, 1)), 2),
    ],
)
def test_spec_json_round_trip(spec):
    assert spec_from_json(spec_to_json(spec)) == spec


@pytest.mark.parametrize(
    "text",
    ["not json", "[1,2]", '{"family": "nope"}', '{"family": "clique_path"}', '{"family": "ring_of_cliques", "a": [1, 1]}'],
)
def test_spec_json_errors(text):
    with pytest.raises(InvalidSpec):
        spec_from_json(text)
