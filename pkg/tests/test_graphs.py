import json

import pytest
from hypothesis import given, settings

from agreeable import (
    AgreeParams,
    agreement,
    agreement_graph,
    box_society,
    clique_number_linear,
    extremal_linear,
    five_cycle_boxes,
    greedy_interval_coloring,
    linear_society,
    restrict_to_candidates,
)
from agreeable.graphs import Graph, graph_from_edges
from agreeable.oracles import brute_clique

from strategies import line_societies


def test_seven_voter_graph(seven_voter_society):
    graph = agreement_graph(seven_voter_society)
    expected = {
        ("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v3", "v4"),
        ("v4", "v5"), ("v4", "v6"), ("v4", "v7"), ("v5", "v6"),
        ("v5", "v7"), ("v6", "v7"),
    }
    assert set(graph.edges) == expected
    # v4..v7 form a maximal clique matching the maximum agreement region
    clique = ("v4", "v5", "v6", "v7")
    assert all(graph.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :])
    for outsider in ("v1", "v2", "v3"):
        assert not all(graph.has_edge(outsider, member) for member in clique)


def test_disjoint_society_graph_is_edgeless():
    graph = agreement_graph(linear_society([(0, 1), (2, 3), (4, 5)]))
    assert graph.edges == frozenset()


def test_five_cycle_graph():
    graph = agreement_graph(five_cycle_boxes())
    assert set(graph.edges) == {
        ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v1", "v5")
    }


def test_candidate_graph_uses_minimal_hulls():
    # raw intervals [0,6] and [4,9] intersect, but with candidates {1, 8}
    # they share no candidate: hulls shrink to [1,1] and [8,8], no edge
    from agreeable import Society, CandidateSpectrum, Voter, make_interval
    from fractions import Fraction

    spectrum = CandidateSpectrum((Fraction(1), Fraction(8)))
    society = Society(
        spectrum,
        (Voter("v1", make_interval(0, 6)), Voter("v2", make_interval(4, 9))),
    )
    assert agreement_graph(society).edges == frozenset()

    # with a shared candidate at 5 the edge appears
    society2 = restrict_to_candidates(linear_society([(0, 6), (4, 9)]), [1, 5, 8])
    assert set(agreement_graph(society2).edges) == {("v1", "v2")}


def test_graph_containers():
    graph = graph_from_edges(["a", "b", "c"], [("c", "a")])
    assert graph.edges == frozenset({("a", "c")})
    assert graph.neighbors("a") == frozenset({"c"})
    assert graph.complement().edges == frozenset({("a", "b"), ("b", "c")})
    assert graph.induced(["a", "b"]).edges == frozenset()
    with pytest.raises(ValueError):
        Graph(("a",), frozenset({("a", "a")}))
    obj = json.loads(graph.to_json())
    assert obj == {"vertices": ["a", "b", "c"], "edges": [["a", "c"]]}


def test_greedy_two_triangles():
    society = linear_society([(0, 1)] * 3 + [(5, 6)] * 3)
    assert greedy_interval_coloring(society).num_colors == 3


def test_greedy_nested_intervals():
    society = linear_society([(0, 10), (1, 9), (2, 8)])
    assert greedy_interval_coloring(society).num_colors == 3


def test_greedy_extremal_society():
    society = extremal_linear(21, AgreeParams(4, 15))
    assert greedy_interval_coloring(society).num_colors == 5


def test_greedy_order_regression():
    # First-fit in increasing right-endpoint order would need 4 colors here;
    # the decreasing order stays at the clique number 3.
    society = linear_society(
        [(0, 10), (5, 20), (8, 25), (30, 35), (32, 38), (24, 40)]
    )
    coloring = greedy_interval_coloring(society)
    graph = agreement_graph(society)
    assert coloring.is_proper(graph)
    assert coloring.num_colors == brute_clique(graph) == 3


def test_greedy_tie_break_is_society_order():
    society = linear_society([(0, 2), (1, 2)])
    assert greedy_interval_coloring(society).assignment == {"v1": 1, "v2": 2}


def test_greedy_colors_empty_sets_first():
    society = linear_society([None, (0, 1), (0, 1)])
    coloring = greedy_interval_coloring(society)
    assert coloring.assignment["v1"] == 1
    assert coloring.num_colors == 2


def test_greedy_rejects_wide_boxes():
    with pytest.raises(ValueError):
        greedy_interval_coloring(five_cycle_boxes())
    one_box = box_society([((0, 1),), ((0, 2),)])
    assert greedy_interval_coloring(one_box).num_colors == 2


@given(line_societies(max_n=9))
@settings(max_examples=120)
def test_greedy_is_proper_and_optimal(society):
    coloring = greedy_interval_coloring(society)
    graph = agreement_graph(society)
    assert coloring.is_proper(graph)
    if any(v.approval is not None for v in society.voters):
        assert coloring.num_colors == brute_clique(graph)


def test_clique_number_linear(seven_voter_society, consensus_candidate_society):
    assert clique_number_linear(seven_voter_society) == 4
    assert clique_number_linear(consensus_candidate_society) == 6
    assert clique_number_linear(linear_society([(0, 1), (2, 3)])) == 1


@given(line_societies(max_n=9))
@settings(max_examples=80)
def test_clique_number_matches_brute_force(society):
    assert clique_number_linear(society) == agreement(society).agreement_number
    if any(v.approval is not None for v in society.voters):
        assert clique_number_linear(society) == brute_clique(agreement_graph(society))
