import pytest
from hypothesis import given, settings

from src.graphs.construct import house, theta
from src.graphs.multigraph import (
    EdgeRef,
    Multigraph,
    components,
    contract_edge,
    contract_edge_with_map,
    dedupe_isomorphic,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    underlying_simple,
)
from tests.conftest import make_graph, make_rooted_house, multigraphs


def test_multigraph_merges_duplicate_pairs():
    """Repeated pairs add up, in either orientation."""
    g = make_graph(2, [(0, 1, 1), (1, 0, 2)])

    assert g.edges == ((0, 1, 3),)
    assert g.mult(1, 0) == 3


def test_multigraph_drops_zero_multiplicity():
    """A pair with multiplicity zero is not an edge."""
    g = make_graph(3, [(0, 1, 0), (1, 2, 1)])

    assert g.edges == ((1, 2, 1),)


@pytest.mark.parametrize(
    'kwargs, match',
    [
        ({'vertex_count': 2, 'edges': ((1, 1, 1),)}, 'loop'),
        ({'vertex_count': 2, 'edges': ((0, 2, 1),)}, 'outside'),
        ({'vertex_count': 2, 'edges': ((0, 1, -1),)}, 'negative'),
        ({'vertex_count': 3, 'roots': (0, 1, 2)}, 'at most two roots'),
        ({'vertex_count': 3, 'roots': (1, 1)}, 'distinct'),
        ({'vertex_count': 2, 'roots': (5,)}, 'outside'),
    ],
)
def test_multigraph_rejects_malformed_values(kwargs, match):
    """Loops, unknown vertices, negative multiplicities and bad roots raise."""
    with pytest.raises(ValueError, match=match):
        Multigraph(**kwargs)


def test_multigraph_treats_all_empty_labels_as_unlabeled():
    """A graph whose label sets are all empty equals its unlabeled twin."""
    g = Multigraph(vertex_count=2, labels=(frozenset(), frozenset()))

    assert g == Multigraph(vertex_count=2)
    assert not g.is_labeled


def test_edge_ref_normalizes_and_rejects_loops():
    """EdgeRef stores u < v and refuses equal endpoints."""
    assert EdgeRef(3, 1) == EdgeRef(1, 3)
    with pytest.raises(ValueError):
        EdgeRef(2, 2)


def test_degree_counts_multiplicity(theta3):
    """Degree is the number of edge ends, parallel edges included."""
    assert theta3.degree(0) == 3
    assert theta3.edge_sum == 3


def test_with_edge_sets_and_removes_pairs():
    """with_edge replaces the multiplicity and 0 deletes the pair."""
    g = house()

    assert g.with_edge(0, 3, 4).mult(0, 3) == 4
    assert g.with_edge(3, 0, 0).mult(0, 3) == 0


def test_contract_edge_house_03_gives_double_edge():
    """Contracting 0-3 in the house merges two paths into a parallel pair."""
    g = contract_edge(house(), EdgeRef(0, 3))

    assert g.vertex_count == 4
    assert g.edge_sum == 5
    assert sorted(m for _, _, m in g.edges) == [1, 1, 1, 2]


def test_contract_edge_theta_gives_single_vertex(theta3):
    """All parallel copies become loops and are dropped."""
    g = contract_edge(theta3, EdgeRef(0, 1))

    assert g == Multigraph(vertex_count=1)


def test_contract_edge_with_map_keeps_lower_index():
    """The merged vertex takes the smaller endpoint's number."""
    _, index = contract_edge_with_map(house(), EdgeRef(2, 3))

    assert index == [0, 1, 2, 2, 3]


def test_contract_edge_merges_labels_and_moves_roots():
    """Labels of the endpoints are united; roots follow their vertices."""
    g = make_graph(
        3, [(0, 1, 1), (1, 2, 1)], roots=(2, 0), labels={0: {'a'}, 1: {'b'}}
    )

    contracted = contract_edge(g, EdgeRef(0, 1))

    assert contracted.label(0) == {'a', 'b'}
    assert contracted.roots == (1, 0)


def test_contract_edge_rejects_non_edge_and_root_pair():
    """Only existing edges contract, and never the edge between two roots."""
    with pytest.raises(ValueError, match='not an edge'):
        contract_edge(house(), EdgeRef(0, 2))
    with pytest.raises(ValueError, match='merge'):
        contract_edge(make_rooted_house(), EdgeRef(0, 3))


def test_components_sorted_by_smallest_vertex():
    """Components come back ordered by their minimum."""
    g = make_graph(5, [(3, 4, 1), (0, 2, 1)])

    assert components(g) == [frozenset({0, 2}), frozenset({1}), frozenset({3, 4})]
    assert not is_connected(g)


def test_is_isomorphic_respects_multiplicity():
    """A path with a double edge is not the plain path."""
    plain = make_graph(3, [(0, 1, 1), (1, 2, 1)])
    doubled = make_graph(3, [(0, 1, 2), (1, 2, 1)])

    assert not is_isomorphic(plain, doubled)
    assert is_isomorphic(doubled, make_graph(3, [(2, 0, 1), (0, 1, 2)]))


def test_is_isomorphic_respects_root_order_and_labels():
    """Swapping roots or labels can break isomorphism."""
    path = make_graph(3, [(0, 1, 2), (1, 2, 1)])

    assert not is_isomorphic(path.with_roots(0, 2), path.with_roots(2, 0))
    assert not is_isomorphic(
        make_graph(2, [(0, 1, 1)], labels={0: {'a'}}),
        make_graph(2, [(0, 1, 1)], labels={0: {'b'}}),
    )


def test_underlying_simple_sets_every_multiplicity_to_one():
    """Parallel edges collapse."""
    assert underlying_simple(theta(4)) == theta(1)


def test_disjoint_union_shifts_vertices():
    """Later graphs are numbered after earlier ones."""
    g = disjoint_union(theta(2), theta(1))

    assert g.vertex_count == 4
    assert g.edges == ((0, 1, 2), (2, 3, 1))


def test_induced_subgraph_renumbers_and_maps_back():
    """The kept list maps new indices back to the original vertices."""
    sub, kept = induced_subgraph(house(), [4, 0, 3], roots=(0, 3))

    assert kept == [0, 3, 4]
    assert sub.edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))
    assert sub.roots == (0, 1)


def test_dedupe_isomorphic_keeps_first_representative():
    """Isomorphic copies collapse to the first one seen."""
    a = make_graph(3, [(0, 1, 1)])
    b = make_graph(3, [(1, 2, 1)])

    assert dedupe_isomorphic([a, b, theta(1)]) == [a, theta(1)]


@settings(max_examples=50, deadline=None)
@given(multigraphs())
def test_contract_edge_preserves_components(g):
    """Contracting any edge keeps the component count and drops its copies."""
    for u, v, m in g.edges:
        contracted = contract_edge(g, EdgeRef(u, v))
        assert len(components(contracted)) == len(components(g))
        assert contracted.edge_sum <= g.edge_sum - m
