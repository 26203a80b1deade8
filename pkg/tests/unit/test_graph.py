"""
Tests for graph parsing, validation, enumeration and generation
"""
import networkx as nx
import pytest

from app.core.exceptions import (
    CapExceededError,
    DisconnectedGraphError,
    GraphGenerationError,
    GraphFormatError,
    NonPositiveWeightError,
    SelfLoopError,
)
from app.services.graph import (
    GraphFamily,
    UnionFind,
    enumerate_spanning_trees,
    generate_graph,
    is_spanning_tree,
    parse_graph,
    serialize_graph,
    spanning_tree_probabilities,
    weighted_tree_total,
)
from conftest import complete_graph, make_graph

pytestmark = pytest.mark.unit


class TestParseGraph:

    def test_unit_weights_by_default(self):
        graph = parse_graph("3 3\n0 1\n1 2\n0 2\n")
        assert graph.vertex_count == 3
        assert [e.weight for e in graph.edges] == [1.0, 1.0, 1.0]
        assert graph.cographic_rank == 1

    def test_comments_blank_lines_and_weights(self):
        text = "# triangle\n\n3 3\n0 1 1.5\n# middle\n1 2 2\n0 2 3e0\n"
        graph = parse_graph(text)
        assert [(e.u, e.v, e.weight) for e in graph.edges] == [(0, 1, 1.5), (1, 2, 2.0), (0, 2, 3.0)]

    def test_parallel_edges_kept(self):
        graph = parse_graph("2 2\n0 1\n0 1 4\n")
        assert graph.edge_count == 2
        assert graph.cographic_rank == 1

    def test_single_vertex(self):
        graph = parse_graph("1 0\n")
        assert graph.edge_count == 0
        assert graph.cographic_rank == 0

    @pytest.mark.parametrize("text, line", [
        ("3\n0 1\n", 1),
        ("3 1\n0 1 2 3\n", 2),
        ("3 1\nzero 1\n", 2),
        ("3 1\n0 1 heavy\n", 2),
        ("3 1\n0 -1\n", 2),
    ])
    def test_malformed_lines_report_line_number(self, text, line):
        with pytest.raises(GraphFormatError) as error:
            parse_graph(text)
        assert error.value.line_number == line
        assert f"line {line}" in str(error.value)

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError):
            parse_graph("3 3\n0 1\n1 2\n")

    def test_empty_document(self):
        with pytest.raises(GraphFormatError):
            parse_graph("# nothing here\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphFormatError):
            parse_graph("2 1\n0 2\n")

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            parse_graph("2 2\n0 1\n1 1\n")

    @pytest.mark.parametrize("weight", ["0", "-2", "inf", "nan"])
    def test_bad_weights(self, weight):
        with pytest.raises(NonPositiveWeightError):
            parse_graph(f"2 1\n0 1 {weight}\n")

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            parse_graph("4 2\n0 1\n2 3\n")

    def test_serialize_then_parse_keeps_weights(self, triangle):
        odd = make_graph(3, [(0, 1), (1, 2), (0, 2)], [0.1, 1 / 3, 2.5e-7])
        for graph in (triangle, odd):
            parsed = parse_graph(serialize_graph(graph))
            assert parsed.vertex_count == graph.vertex_count
            assert parsed.edges == graph.edges


class TestSpanningTrees:

    def test_union_find(self):
        sets = UnionFind(4)
        assert sets.union(0, 1)
        assert not sets.union(1, 0)
        assert sets.find(0) == sets.find(1)
        assert sets.num_sets == 3

    def test_is_spanning_tree(self, k4):
        assert is_spanning_tree(k4, [0, 1, 2])
        assert not is_spanning_tree(k4, [0, 1, 3])  # 0-1, 0-2, 1-2 closes a cycle
        assert not is_spanning_tree(k4, [0, 1])

    def test_triangle_weighted_total(self, triangle):
        assert weighted_tree_total(triangle) == pytest.approx(11.0)
        trees = dict(enumerate_spanning_trees(triangle))
        assert trees == {
            frozenset({0, 1}): pytest.approx(2.0),
            frozenset({0, 2}): pytest.approx(3.0),
            frozenset({1, 2}): pytest.approx(6.0),
        }

    def test_probabilities(self, triangle):
        probabilities = spanning_tree_probabilities(triangle)
        assert probabilities[frozenset({0, 1})] == pytest.approx(2 / 11)
        assert probabilities[frozenset({0, 2})] == pytest.approx(3 / 11)
        assert probabilities[frozenset({1, 2})] == pytest.approx(6 / 11)

    @pytest.mark.parametrize("n, count", [(3, 3), (4, 16), (5, 125)])
    def test_cayley_counts(self, n, count):
        graph = complete_graph(n)
        assert len(enumerate_spanning_trees(graph)) == count
        assert weighted_tree_total(graph) == pytest.approx(count)

    def test_matrix_tree_matches_enumeration_weighted(self, k4):
        weighted = make_graph(4, [(e.u, e.v) for e in k4.edges], [1.0, 2.0, 0.5, 3.0, 1.5, 4.0])
        enumerated = sum(w for _, w in enumerate_spanning_trees(weighted))
        assert weighted_tree_total(weighted) == pytest.approx(enumerated)

    def test_tree_shaped_graph_has_one_tree(self, path4):
        assert enumerate_spanning_trees(path4) == [(frozenset({0, 1, 2}), 1.0)]

    def test_single_vertex(self):
        graph = make_graph(1, [])
        assert weighted_tree_total(graph) == 1.0
        assert enumerate_spanning_trees(graph) == [(frozenset(), 1.0)]

    def test_cap(self, k5):
        with pytest.raises(CapExceededError) as error:
            enumerate_spanning_trees(k5, cap=9)
        assert error.value.size == 10
        assert error.value.cap == 9


class TestGenerators:

    @pytest.mark.parametrize("family", list(GraphFamily))
    def test_connected_and_deterministic(self, family):
        first = generate_graph(family, 200, seed=3)
        second = generate_graph(family, 200, seed=3)
        assert first.edges == second.edges
        assert first.vertex_count == second.vertex_count
        assert all(e.weight == 1.0 for e in first.edges)

    def test_random_regular_size(self):
        graph = generate_graph(GraphFamily.RANDOM_REGULAR, 400, seed=0)
        assert graph.vertex_count == 200
        assert graph.edge_count == 400

    def test_grid_size(self):
        graph = generate_graph("grid", 50, seed=0)
        # 5 x 5 grid
        assert graph.vertex_count == 25
        assert graph.edge_count == 40

    def test_gives_up_on_disconnected_candidates(self, monkeypatch):
        def two_cliques(degree, vertex_count, seed=None):
            return nx.disjoint_union(nx.complete_graph(5), nx.complete_graph(5))

        monkeypatch.setattr(nx, "random_regular_graph", two_cliques)
        with pytest.raises(GraphGenerationError, match="no connected 4-regular graph"):
            generate_graph(GraphFamily.RANDOM_REGULAR, 20, seed=0)
