import random
from dataclasses import replace

import numpy as np
import pytest

from cliquelab.colouring import greedy_colour_vertexwise
from cliquelab.errors import ConfigError, OracleLimitError, SearchInvariantError
from cliquelab.graph import (
    OrderingPolicy,
    complete_graph,
    empty_graph,
    induced_subgraph,
    make_ordering,
    path_graph,
    random_graph,
)
from cliquelab.search import (
    Expander,
    Incumbent,
    Inheritance,
    SearchConfig,
    Variant,
    brute_force_omega,
    compare_variants,
    solve_max_clique,
)

BASELINE = SearchConfig(variant=Variant.BASELINE)
INHERITED = SearchConfig(variant=Variant.INHERITED)


@pytest.mark.parametrize("cfg", [BASELINE, INHERITED])
def test_figure_1(fig1, cfg):
    outcome = solve_max_clique(fig1, cfg)
    assert outcome.omega == 4
    assert fig1.labels_of(outcome.clique) == [1, 3, 6, 8]
    assert outcome.nodes == 4
    assert outcome.misleading_events == 0
    assert outcome.depth_nodes == (1, 1, 1, 1)
    assert outcome.max_depth == 4


@pytest.mark.parametrize("cfg", [BASELINE, INHERITED])
def test_complete_graph(cfg):
    outcome = solve_max_clique(complete_graph(5), cfg)
    assert outcome.omega == 5
    assert outcome.clique == frozenset(range(5))
    assert outcome.nodes == 5


def test_edgeless_graph():
    outcome = solve_max_clique(empty_graph(7), BASELINE)
    assert outcome.omega == 1
    assert outcome.nodes == 1
    # last vertex of the single colour class is branched on first
    assert outcome.clique == frozenset({6})


def test_empty_graph():
    outcome = solve_max_clique(empty_graph(0), INHERITED)
    assert outcome.omega == 0
    assert outcome.clique == frozenset()
    assert outcome.nodes == 0
    assert outcome.depth_nodes == ()


def test_figure_2_is_triangle_free(fig2):
    for cfg in (BASELINE, INHERITED):
        outcome = solve_max_clique(fig2, cfg)
        assert outcome.omega == 2
        assert fig2.labels_of(outcome.clique) == [6, 7]
        assert outcome.nodes == 2


def test_inherited_bound_saves_a_node(apex_graph):
    baseline = solve_max_clique(apex_graph, BASELINE)
    inherited = solve_max_clique(apex_graph, INHERITED)
    assert baseline.omega == inherited.omega == 3
    assert apex_graph.labels_of(inherited.clique) == [6, 7, 8]
    assert (baseline.nodes, inherited.nodes) == (4, 3)
    assert baseline.misleading_events == 0
    assert baseline.latent_events == 1
    assert inherited.misleading_events == inherited.latent_events == 1


def test_parent_total_inheritance_on_apex_graph(apex_graph):
    cfg = replace(INHERITED, inheritance=Inheritance.PARENT_TOTAL)
    outcome = solve_max_clique(apex_graph, cfg)
    assert outcome.omega == 3
    assert outcome.nodes == 3
    assert outcome.misleading_events == 1


def test_default_variant_is_baseline_sequentially(fig1):
    assert SearchConfig().resolved_variant() is Variant.BASELINE
    assert SearchConfig().resolved_variant(parallel=True) is Variant.INHERITED
    assert solve_max_clique(fig1).variant is Variant.BASELINE


def test_config_validation():
    with pytest.raises(ConfigError):
        SearchConfig(threads=0)
    with pytest.raises(ConfigError):
        SearchConfig(oracle_limit=0)
    assert SearchConfig(variant="inherited").variant is Variant.INHERITED


def test_outcome_clique_is_a_clique():
    for seed in range(40):
        g = random_graph(25, 0.6, seed)
        for cfg in (BASELINE, INHERITED, replace(INHERITED, ordering_policy="degree-desc")):
            outcome = solve_max_clique(g, cfg)
            assert len(outcome.clique) == outcome.omega
            assert g.is_clique(outcome.clique)
            assert outcome.nodes >= outcome.omega
            assert outcome.max_depth >= outcome.omega


def test_degree_ordering_still_exact(fig1):
    cfg = SearchConfig(ordering_policy=OrderingPolicy.DEGREE_DESC)
    outcome = solve_max_clique(fig1, cfg)
    assert fig1.labels_of(outcome.clique) == [1, 3, 6, 8]


def test_sequential_runs_are_deterministic():
    g = random_graph(35, 0.5, seed=5)
    for cfg in (BASELINE, INHERITED):
        first = solve_max_clique(g, cfg).to_dict(g, timings=False)
        second = solve_max_clique(g, cfg).to_dict(g, timings=False)
        assert first == second


def test_variant_dominance_and_zero_event_equality():
    for seed in range(60):
        g = random_graph(30, 0.5, seed)
        report = compare_variants(g, SearchConfig())
        assert report.omega_equal
        assert report.nodes_delta >= 0
        assert report.baseline.misleading_events == 0
        if report.inherited.misleading_events == 0:
            assert report.nodes_equal


def test_bound_validity_at_every_node():
    rng = random.Random(2)
    for seed in range(30):
        g = random_graph(14, rng.choice([0.3, 0.5, 0.7]), seed)
        for cfg in (BASELINE, INHERITED):
            seen = []
            solve_max_clique(g, cfg, observer=lambda c, p, b: seen.append((c, p, b)))
            for clique, candidates, bound in seen:
                assert g.is_clique(clique)
                best, _ = brute_force_omega(induced_subgraph(g, candidates))
                assert bound >= best


def test_observer_sees_root_first(fig1):
    seen = []
    solve_max_clique(fig1, BASELINE, observer=lambda c, p, b: seen.append((c, p, b)))
    clique, candidates, bound = seen[0]
    assert clique == ()
    assert candidates == frozenset(range(9))
    assert bound == 4


def test_invariant_check_fires_on_a_bad_parent_bound(fig1):
    expander = Expander(fig1.matrix, Variant.INHERITED, Inheritance.COLOUR_CLASS, Incumbent())
    with pytest.raises(SearchInvariantError):
        # a parent bound of 3 cannot have a child whose own bound is 4
        expander.expand([], np.arange(fig1.n, dtype=np.int64), fig1.n, parent_bound=3)


def test_colouring_bound_matches_root_colour_count():
    for seed in range(20):
        g = random_graph(20, 0.5, seed)
        seen = []
        solve_max_clique(g, BASELINE, observer=lambda c, p, b: seen.append(b))
        natural = make_ordering(g, OrderingPolicy.NATURAL)
        assert seen[0] == greedy_colour_vertexwise(g, range(g.n), natural).num_colours


def test_brute_force_oracle_examples(fig1):
    size, clique = brute_force_omega(fig1)
    assert size == 4
    assert fig1.labels_of(clique) == [1, 3, 6, 8]

    size, clique = brute_force_omega(path_graph(4))
    assert size == 2
    assert path_graph(4).is_clique(clique)

    assert brute_force_omega(empty_graph(0)) == (0, frozenset())


def test_brute_force_agrees_with_solver_on_pinned_instance():
    g = random_graph(18, 0.5, seed=7)
    size, clique = brute_force_omega(g)
    assert g.is_clique(clique)
    assert solve_max_clique(g).omega == size


def test_brute_force_size_guard():
    with pytest.raises(OracleLimitError, match="limit"):
        brute_force_omega(empty_graph(31))
    with pytest.raises(OracleLimitError):
        brute_force_omega(empty_graph(6), limit=5)


def test_compare_rejects_parallel_config(fig1):
    with pytest.raises(ConfigError):
        compare_variants(fig1, SearchConfig(threads=2))


def test_compare_on_figures(fig1, fig2):
    report = compare_variants(fig1, SearchConfig(), "fig1")
    assert report.omega_equal and report.baseline.omega == report.inherited.omega == 4
    report = compare_variants(fig2, SearchConfig(), "fig2")
    assert report.omega_equal
    assert report.nodes_delta >= 0
    data = report.to_dict(fig2, timings=False)
    assert data["instance"] == "fig2"
    assert data["baseline"]["variant"] == "baseline"
    assert "elapsed" not in data["baseline"]
