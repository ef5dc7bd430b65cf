"""Tests for the graph container, edge-list parsing, pruning, and the
probability/maximality primitives."""

import io
import math

import pytest

from umc.graph import (
    GraphFormatError,
    NotACliqueError,
    UncertainGraph,
    clique_probability,
    dump_graph,
    is_alpha_maximal,
    load_graph,
    prune_by_alpha,
)


def parse(text):
    return load_graph(io.StringIO(text))


PATH_3 = "1 2 0.9\n2 3 0.8\n"


class TestLoadGraph:
    def test_basic(self):
        g = parse("1 2 0.9\n2 3 0.8")
        assert g.n == 3
        assert g.num_edges == 2
        assert g.edge_prob(0, 1) == 0.9

    def test_comments_and_blank_lines(self):
        g = parse("# a comment\n\n1 2 0.5\n")
        assert g.num_edges == 1

    def test_self_loop_rejected_with_line_number(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse("1 1 0.5")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphFormatError, match="line 2.*duplicate"):
            parse("1 2 0.9\n2 1 0.7")

    @pytest.mark.parametrize("p", ["0", "-0.5", "1.5"])
    def test_probability_out_of_range(self, p):
        with pytest.raises(GraphFormatError):
            parse(f"1 2 {p}")

    def test_header_declares_isolated_vertices(self):
        g = parse("n 5\n1 2 0.9\n")
        assert g.n == 5
        assert g.degree(4) == 0

    def test_header_bounds_labels(self):
        with pytest.raises(GraphFormatError, match="exceeds"):
            parse("n 2\n1 3 0.9\n")

    def test_first_appearance_order(self):
        g = parse("7 3 0.5\n3 2 0.5\n")
        assert [g.label(i) for i in range(g.n)] == [7, 3, 2]
        assert g.index(7) == 0

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse("1 2\n")

    def test_round_trip_is_bit_exact(self):
        g = parse("n 4\n1 2 0.12345678901234567\n2 3 0.9999999999999999\n")
        buf = io.StringIO()
        dump_graph(g, buf)
        g2 = parse(buf.getvalue())
        assert g2.n == g.n
        assert list(g2.edges()) == list(g.edges())


class TestUncertainGraph:
    def test_adjacency_symmetric_and_sorted(self):
        g = parse("1 3 0.5\n1 2 0.5\n")
        assert g.neighbors(0) == (1, 2)
        for u in range(g.n):
            for v in g.neighbors(u):
                assert u in g.neighbors(v)

    def test_rejects_bad_construction(self):
        with pytest.raises(ValueError):
            UncertainGraph(2, [(0, 0, 0.5)])
        with pytest.raises(ValueError):
            UncertainGraph(2, [(0, 1, 0.0)])
        with pytest.raises(ValueError):
            UncertainGraph(2, [(0, 1, 0.5), (1, 0, 0.4)])


class TestPruneByAlpha:
    def test_threshold(self):
        g = parse("1 2 0.9\n3 4 0.3\n")
        pruned = prune_by_alpha(g, 0.5)
        assert pruned.num_edges == 1
        assert pruned.n == g.n

    def test_alpha_one_drops_all_sub_one_edges(self):
        pruned = prune_by_alpha(parse(PATH_3), 1.0)
        assert pruned.num_edges == 0

    def test_edge_exactly_at_alpha_is_kept(self):
        g = parse("1 2 0.5\n")
        assert prune_by_alpha(g, 0.5).num_edges == 1

    def test_path_alpha_085(self):
        pruned = prune_by_alpha(parse(PATH_3), 0.85)
        assert list(pruned.edges()) == [(0, 1, 0.9)]


class TestCliqueProbability:
    def test_triangle_product(self):
        g = parse("1 2 0.9\n2 3 0.8\n1 3 0.7\n")
        assert clique_probability(g, (0, 1, 2)) == pytest.approx(0.504, rel=1e-12)

    def test_empty_and_singleton_are_one(self):
        g = parse(PATH_3)
        assert clique_probability(g, ()) == 1.0
        assert clique_probability(g, (1,)) == 1.0

    def test_non_clique_raises(self):
        g = parse(PATH_3)
        with pytest.raises(NotACliqueError):
            clique_probability(g, (0, 2))


class TestIsAlphaMaximal:
    # Expected values below were fixed by hand-enumerating all 7 nonempty
    # subsets of the 3-vertex path.
    def test_path_edge_is_maximal(self):
        g = parse(PATH_3)
        assert is_alpha_maximal(g, (0, 1), 0.75)

    def test_contained_vertex_is_not_maximal(self):
        g = parse(PATH_3)
        assert not is_alpha_maximal(g, (1,), 0.75)

    def test_full_triangle(self):
        g = parse("1 2 0.9\n2 3 0.9\n1 3 0.9\n")
        assert math.isclose(clique_probability(g, (0, 1, 2)), 0.729)
        assert is_alpha_maximal(g, (0, 1, 2), 0.7)

    def test_non_clique_is_not_maximal(self):
        g = parse(PATH_3)
        assert not is_alpha_maximal(g, (0, 2), 0.1)

    def test_empty_set_rejected(self):
        g = parse(PATH_3)
        with pytest.raises(ValueError):
            is_alpha_maximal(g, (), 0.5)
