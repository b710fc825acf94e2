import random

import pytest

from cliquelab.graph import (
    Graph,
    OrderingPolicy,
    VertexOrdering,
    complete_graph,
    empty_graph,
    induced_subgraph,
    iter_bits,
    make_ordering,
    random_graph,
)


def test_iter_bits_ascending():
    assert list(iter_bits(0b101101)) == [0, 2, 3, 5]
    assert list(iter_bits(0)) == []


def test_from_edges_is_symmetric_and_ignores_duplicates():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    g.validate()
    assert g.edge_count == 2
    assert g.adjacent(1, 0) and g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    assert g.labels == (1, 2, 3)


def test_from_edges_rejects_self_loop_and_range():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])


def test_validate_catches_asymmetry():
    with pytest.raises(ValueError, match="not symmetric"):
        Graph(2, (0b10, 0)).validate()


def test_edges_are_lexicographic(fig1):
    edges = list(fig1.edges())
    assert edges == sorted(edges)
    assert all(u < v for u, v in edges)
    assert len(edges) == 17


def test_is_clique(fig1):
    assert fig1.is_clique([0, 2, 5, 7])
    assert not fig1.is_clique([0, 1])
    assert fig1.is_clique([])


def test_induced_subgraph_removing_first_vertex_gives_six_cycle(fig2):
    sub = induced_subgraph(fig2, range(1, 7))
    sub.validate()
    assert sub.n == 6
    assert sub.labels == (2, 3, 4, 5, 6, 7)
    assert all(sub.degree(v) == 2 for v in range(6))
    # 2-5-4-3-6-7-2 in new indices
    assert set(sub.edges()) == {(0, 3), (2, 3), (1, 2), (1, 4), (4, 5), (0, 5)}


def test_induced_subgraph_identity_and_empty(fig1):
    assert induced_subgraph(fig1, range(fig1.n)) == fig1
    empty = induced_subgraph(fig1, [])
    assert empty.n == 0
    assert empty.edge_count == 0


def test_induced_subgraph_rejects_out_of_range(fig1):
    with pytest.raises(ValueError):
        induced_subgraph(fig1, [0, 9])


def test_induced_subgraph_never_adds_edges():
    rng = random.Random(3)
    for seed in range(40):
        g = random_graph(15, 0.4, seed)
        keep = sorted(rng.sample(range(15), rng.randint(0, 15)))
        sub = induced_subgraph(g, keep)
        sub.validate()
        for i, u in enumerate(keep):
            for j, v in enumerate(keep):
                assert sub.adjacent(i, j) == g.adjacent(u, v)


@pytest.mark.parametrize("k", [0, 1, 5, 12])
def test_random_graph_extremes(k):
    assert random_graph(k, 1.0, seed=9) == complete_graph(k)
    assert random_graph(k, 0.0, seed=9) == empty_graph(k)


def test_random_graph_is_reproducible():
    a = random_graph(20, 0.5, seed=42)
    b = random_graph(20, 0.5, seed=42)
    assert a == b
    a.validate()
    assert random_graph(20, 0.5, seed=43) != a


def test_random_graph_pinned_edge_count(golden):
    golden("random_graph_20_0.5_42", {"edges": random_graph(20, 0.5, seed=42).edge_count})


def test_random_graph_rejects_bad_probability():
    with pytest.raises(ValueError):
        random_graph(5, 1.5, seed=0)
    with pytest.raises(ValueError):
        random_graph(5, -0.1, seed=0)


def test_natural_ordering(fig1):
    assert make_ordering(fig1, "natural").order == tuple(range(9))


def test_degree_ordering_on_figure_1(fig1):
    ordering = make_ordering(fig1, OrderingPolicy.DEGREE_DESC)
    assert [fig1.label(v) for v in ordering.order] == [8, 1, 3, 6, 2, 5, 4, 7, 9]
    assert ordering.policy is OrderingPolicy.DEGREE_DESC


def test_degree_ordering_ties_use_index():
    assert make_ordering(complete_graph(4), OrderingPolicy.DEGREE_DESC).order == (0, 1, 2, 3)


def test_orderings_are_permutations():
    for seed in range(20):
        g = random_graph(25, 0.3, seed)
        for policy in (OrderingPolicy.NATURAL, OrderingPolicy.DEGREE_DESC):
            assert sorted(make_ordering(g, policy).order) == list(range(25))


def test_vertex_ordering_rejects_non_permutation():
    with pytest.raises(ValueError):
        VertexOrdering.from_permutation([0, 0, 1])


def test_restricted_keeps_relative_order():
    ordering = VertexOrdering.from_permutation([3, 1, 4, 0, 2])
    assert ordering.restricted({0, 3, 4}) == [3, 4, 0]


def test_relabel_moves_vertices(fig1):
    ordering = make_ordering(fig1, OrderingPolicy.DEGREE_DESC)
    moved = fig1.relabel(ordering.order)
    moved.validate()
    assert moved.labels[0] == 8
    assert moved.degree(0) == 7
    assert moved.edge_count == fig1.edge_count


def test_missing_golden_file_fails(golden):
    with pytest.raises(pytest.fail.Exception, match="missing golden file"):
        golden("no_such_value", {})
