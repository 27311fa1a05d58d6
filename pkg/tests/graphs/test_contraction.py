import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.graphs.construct import coclique, complete, cycle, house, path, theta
from src.graphs.contraction import (
    CheckOptions,
    Model,
    brute_force_is_contraction,
    contraction_closure,
    find_model,
    graph_comparator,
    is_contraction,
    verify_model,
)
from src.graphs.multigraph import disjoint_union, is_isomorphic
from src.graphs.sampling import random_contraction
from src.orders.poset import FinitePoset
from src.utils.errors import MalformedModelError, SizeBoundExceeded
from tests.conftest import make_graph, make_rooted_house, multigraphs

ROOTED = CheckOptions(respect_roots=True)
CHAIN = FinitePoset.from_pairs(['a', 'b'], [('a', 'b')])
ANTICHAIN = FinitePoset.from_pairs(['a', 'b'])


def test_find_model_theta2_in_house_verifies():
    """θ_2 is a contraction of the house and the model checks out."""
    model = find_model(theta(2), house())

    assert model is not None
    assert verify_model(theta(2), house(), model)


def test_find_model_thetas_are_incomparable():
    """θ_3 is not a contraction of θ_5."""
    assert find_model(theta(3), theta(5)) is None


def test_find_model_k1_in_connected_graph():
    """The single branch set is the whole vertex set."""
    model = find_model(coclique(1), house())

    assert model == Model({0: frozenset(range(5))})


def test_is_contraction_coclique_of_components():
    """A graph with three components contracts to K̄_3."""
    g = disjoint_union(house(), coclique(1), coclique(1))

    assert is_contraction(coclique(3), g)
    assert not is_contraction(coclique(2), g)


def test_is_contraction_is_reflexive_on_theta(theta3):
    """θ_k contracts to itself."""
    assert is_contraction(theta3, theta3)


def test_is_contraction_triangle_to_theta2():
    """Contracting one triangle edge leaves a double edge."""
    assert is_contraction(theta(2), complete(3))
    assert not is_contraction(theta(3), complete(3))


def test_rooted_contraction_keeps_roots_apart():
    """Every cut between the house roots 0 and 3 has three edges."""
    g = make_rooted_house()

    assert not is_contraction(theta(2).with_roots(0, 1), g, ROOTED)
    assert is_contraction(theta(3).with_roots(0, 1), g, ROOTED)
    assert is_contraction(theta(2), g.without_roots())


def test_rooted_contraction_requires_equal_root_arity():
    """A 1-rooted pattern is never a rooted contraction of a 2-rooted host."""
    assert not is_contraction(theta(3).with_roots(0), make_rooted_house(), ROOTED)


def test_rooted_contraction_respects_root_order():
    """Swapped roots need the branch sets to swap as well."""
    g = make_graph(3, [(0, 1, 2), (1, 2, 1)], roots=(0, 2))
    h = make_graph(2, [(0, 1, 2)], roots=(1, 0))

    model = find_model(h, g, ROOTED)

    assert model is not None
    assert 0 in model.branch_sets[1]
    assert 2 in model.branch_sets[0]


def test_labeled_contraction_with_incomparable_labels_fails():
    """K_1 labeled a is not below K_1 labeled b when a and b are incomparable."""
    h = make_graph(1, labels={0: {'a'}})
    g = make_graph(1, labels={0: {'b'}})
    opts = CheckOptions(respect_labels=True, label_poset=ANTICHAIN)

    assert not is_contraction(h, g, opts)
    assert is_contraction(h, g, CheckOptions(respect_labels=True, label_poset=CHAIN))


def test_labeled_contraction_needs_an_injection():
    """Two labels cannot both map onto a single host label."""
    h = make_graph(1, labels={0: {'a', 'b'}})
    g = make_graph(2, [(0, 1, 1)], labels={1: {'b'}})
    richer = make_graph(2, [(0, 1, 1)], labels={0: {'a'}, 1: {'b'}})
    opts = CheckOptions(respect_labels=True, label_poset=CHAIN)

    assert not is_contraction(h, g, opts)
    assert is_contraction(h, richer, opts)


def test_check_options_requires_poset_for_labels():
    """Respecting labels without an order is a configuration error."""
    with pytest.raises(ValueError, match='label_poset'):
        CheckOptions(respect_labels=True)


def test_find_model_raises_above_vertex_bound():
    """A search over a host larger than the bound is refused."""
    with pytest.raises(SizeBoundExceeded):
        find_model(path(9), path(10))


def test_find_model_settles_counting_cases_without_search():
    """Equal graphs and differing component counts never hit the bound."""
    assert find_model(coclique(20), coclique(20)) is not None
    assert find_model(coclique(3), coclique(20)) is None


def test_verify_model_rejects_wrong_domain():
    """A model must cover exactly the pattern vertices."""
    with pytest.raises(MalformedModelError, match='domain'):
        verify_model(theta(2), house(), Model({0: frozenset({0})}))


def test_verify_model_rejects_unknown_host_vertex():
    """Branch sets may only name host vertices."""
    model = Model({0: frozenset({0, 7}), 1: frozenset({1})})

    with pytest.raises(MalformedModelError, match='outside the host'):
        verify_model(theta(1), theta(1), model)


def test_verify_model_rejects_wrong_multiplicity():
    """The number of edges between branch sets must match exactly."""
    model = Model({0: frozenset({0, 1, 4}), 1: frozenset({2, 3})})

    assert verify_model(theta(3), house(), model)
    assert not verify_model(theta(2), house(), model)


def test_verify_model_rejects_disconnected_branch_set():
    """Branch sets must induce connected subgraphs."""
    model = Model({0: frozenset({1, 3}), 1: frozenset({0, 2, 4})})

    assert not verify_model(theta(4), house(), model)


@pytest.mark.parametrize(
    'h, g, expected',
    [
        (theta(2), cycle(3), True),
        (theta(2), theta(3), False),
        (house(), house(), True),
        (coclique(2), path(3), False),
    ],
)
def test_brute_force_is_contraction_examples(h, g, expected):
    """The oracle answers the small reference cases."""
    assert brute_force_is_contraction(h, g) is expected


def test_brute_force_is_contraction_enforces_edge_bound():
    """Hosts above the edge-sum bound are refused."""
    with pytest.raises(SizeBoundExceeded):
        brute_force_is_contraction(theta(1), theta(13))


def test_contraction_closure_of_theta_is_k1():
    """The only strict contraction of θ_k is K_1."""
    assert contraction_closure(theta(5), strict=True) == [coclique(1)]


def test_contraction_closure_of_coclique_is_empty():
    """K̄_n has no edges to contract."""
    assert contraction_closure(coclique(4), strict=True) == []


def test_contraction_closure_of_triangle():
    """Triangle, double edge and a single vertex."""
    closure = contraction_closure(cycle(3))

    assert len(closure) == 3
    for expected in (cycle(3), theta(2), coclique(1)):
        assert any(is_isomorphic(expected, c) for c in closure)


def test_graph_comparator_wraps_is_contraction():
    """The comparator decides h ⊴ g."""
    leq = graph_comparator()

    assert leq(theta(2), house())
    assert not leq(house(), theta(2))


@settings(max_examples=40, deadline=None)
@given(
    multigraphs(max_vertices=6, max_multiplicity=2),
    st.randoms(use_true_random=False),
)
def test_sampled_contractions_are_found_and_verified(g, rng):
    """Any sequence of edge contractions is recovered by the model search."""
    h, model = random_contraction(rng, g, rng.randint(0, g.vertex_count))

    assert verify_model(h, g, model)
    found = find_model(h, g)
    assert found is not None
    assert verify_model(h, g, found)
