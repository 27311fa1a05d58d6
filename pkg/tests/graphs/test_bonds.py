import pytest
from hypothesis import given, settings

from src.graphs.bonds import (
    PKClass,
    classify,
    coclique_characterization,
    enumerate_bonds,
    is_bond,
    max_bond_size,
    theta_characterization,
)
from src.graphs.construct import coclique, cycle, house, theta
from src.graphs.multigraph import EdgeRef, disjoint_union
from tests.conftest import make_graph, multigraphs


def test_enumerate_bonds_house():
    """The house has four bonds of size 2 and six of size 3."""
    bonds = enumerate_bonds(house())

    assert [b.size for b in bonds] == [2] * 4 + [3] * 6
    assert bonds[0].pairs() == [(0, 1), (1, 2)]


def test_enumerate_bonds_contains_roof_cut(house_graph):
    """Cutting 1-2, 3-4 and 0-3 separates {0, 1, 4} from {2, 3}."""
    bonds = enumerate_bonds(house_graph)

    roof_cut = [b for b in bonds if b.side == frozenset({0, 1, 4})]

    assert len(roof_cut) == 1
    assert roof_cut[0].pairs() == [(0, 3), (1, 2), (3, 4)]
    assert roof_cut[0].size == 3


def test_enumerate_bonds_counts_parallel_edges(theta3):
    """θ_3 has one bond with three edges."""
    bonds = enumerate_bonds(theta3)

    assert len(bonds) == 1
    assert bonds[0].edges == frozenset({EdgeRef(0, 1)})
    assert bonds[0].size == 3


def test_enumerate_bonds_per_component():
    """Each component contributes its own bonds; isolated vertices none."""
    g = disjoint_union(theta(2), coclique(1), theta(1))

    assert sorted(b.size for b in enumerate_bonds(g)) == [1, 2]


@pytest.mark.parametrize(
    'pairs, expected',
    [
        ([(1, 2), (3, 4), (0, 3)], True),
        ([(0, 1), (0, 4)], False),
        ([(0, 1)], False),
        ([(0, 1), (1, 2), (2, 3)], False),
        ([(0, 2), (1, 2)], False),
        ([], False),
    ],
)
def test_is_bond_house(pairs, expected):
    """Only minimal cuts that add exactly one component are bonds."""
    assert is_bond(house(), pairs) is expected


def test_max_bond_size_of_edgeless_graph_is_zero():
    """K̄_n has no bonds."""
    assert max_bond_size(coclique(4)) == 0


@pytest.mark.parametrize(
    'g, p, k',
    [
        (house(), 1, 3),
        (theta(4), 1, 4),
        (coclique(3), 3, 0),
        (cycle(5), 1, 2),
        (disjoint_union(theta(2), cycle(3)), 2, 2),
    ],
)
def test_classify(g, p, k):
    """Component count and largest bond."""
    assert classify(g) == PKClass(p=p, k=k)


def test_pk_class_admits_larger_bounds():
    """G_{p,k} is monotone in both parameters."""
    cls = PKClass(p=1, k=3)

    assert cls.admits(1, 3)
    assert cls.admits(2, 5)
    assert not cls.admits(1, 2)
    assert not cls.admits(0, 3)


def test_theta_characterization_house(house_graph):
    """House bonds are sizes 2 and 3, and so are its θ contractions."""
    assert theta_characterization(house_graph)


def test_theta_characterization_disconnected():
    """The equivalence holds per component."""
    g = disjoint_union(theta(3), make_graph(3, [(0, 1, 2), (1, 2, 1)]))

    assert theta_characterization(g)


def test_coclique_characterization():
    """K̄_q contracts from g exactly when g has q components."""
    g = disjoint_union(house(), coclique(1))

    assert coclique_characterization(g, 3)


def test_coclique_characterization_rejects_non_positive_p():
    """p must be at least 1."""
    with pytest.raises(ValueError, match='p must be positive'):
        coclique_characterization(house(), 0)


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_vertices=5, max_multiplicity=2))
def test_characterizations_hold_on_small_graphs(g):
    """Both characterizations hold on arbitrary small multigraphs."""
    assert theta_characterization(g)
    assert coclique_characterization(g, 3)


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_vertices=5, max_multiplicity=2))
def test_enumerated_bonds_are_bonds(g):
    """Every enumerated bond passes the cut check."""
    for bond in enumerate_bonds(g):
        assert is_bond(g, bond.pairs())
