import pytest
from hypothesis import assume, given, settings

from src.graphs.construct import coclique, complete, cycle, house, path, theta, wheel
from src.graphs.decomposition import (
    TreeDecomposition,
    blocks,
    extract_torso_pieces,
    is_2_connected,
    is_3_connected,
    reassemble_torso_pieces,
    torso,
    torso_kind,
    tutte_decomposition,
    validate_decomposition,
)
from src.graphs.multigraph import is_isomorphic
from src.utils.errors import NotTwoConnectedError
from tests.conftest import make_rooted_house, multigraphs


def test_blocks_of_path():
    """A path splits into its edges, glued at the inner vertices."""
    forest = blocks(path(3))

    assert forest.blocks == (frozenset({0, 1}), frozenset({1, 2}))
    assert forest.cutvertices == frozenset({1})
    assert forest.incidence() == [(0, 1), (1, 1)]


def test_blocks_include_isolated_vertices():
    """Every isolated vertex is a block of its own."""
    forest = blocks(coclique(2))

    assert forest.blocks == (frozenset({0}), frozenset({1}))
    assert forest.blocks_at(1) == [1]


@pytest.mark.parametrize(
    'g, expected',
    [
        (theta(2), True),
        (theta(1), False),
        (cycle(3), True),
        (path(3), False),
        (house(), True),
        (coclique(1), False),
    ],
)
def test_is_2_connected(g, expected):
    """Parallel edges count: θ_2 is 2-connected, K_2 is not."""
    assert is_2_connected(g) is expected


@pytest.mark.parametrize(
    'g, expected',
    [
        (theta(3), True),
        (theta(2), False),
        (complete(4), True),
        (wheel(3), True),
        (cycle(4), False),
        (complete(3), False),
    ],
)
def test_is_3_connected(g, expected):
    """θ_k is 3-connected from k = 3; simple graphs need four vertices."""
    assert is_3_connected(g) is expected


def test_tutte_decomposition_house(house_graph):
    """The house splits at {0, 3} into a square and a triangle."""
    d = tutte_decomposition(house_graph)

    assert d.bags == {0: frozenset({0, 1, 2, 3}), 1: frozenset({0, 3, 4})}
    assert d.tree_edges == ((0, 1),)
    assert d.adhesion(0, 1) == frozenset({0, 3})
    assert [torso_kind(house_graph, d, n) for n in d.nodes] == ['cycle', 'cycle']


def test_tutte_decomposition_single_bag_cases(theta3):
    """θ_k and simple cycles are their own torso."""
    assert tutte_decomposition(theta3).bags == {0: frozenset({0, 1})}
    assert torso_kind(theta3, tutte_decomposition(theta3), 0) == '3conn'

    ring = cycle(5)
    assert torso_kind(ring, tutte_decomposition(ring), 0) == 'cycle'


def test_tutte_decomposition_rejects_separable_graph():
    """Graphs with a cutvertex have no Tutte decomposition."""
    with pytest.raises(NotTwoConnectedError):
        tutte_decomposition(path(3))


def test_torso_adds_adhesion_edge(house_graph):
    """The roof bag becomes a triangle through the virtual 0-3 edge."""
    d = tutte_decomposition(house_graph)

    roof = torso(house_graph, d, 1)

    assert roof == cycle(3)
    with pytest.raises(ValueError, match='unknown decomposition node'):
        torso(house_graph, d, 5)


def test_validate_decomposition_accepts_tutte_output(house_graph):
    """A fresh decomposition has no problems."""
    assert validate_decomposition(house_graph, tutte_decomposition(house_graph)) == []


@pytest.mark.parametrize(
    'd, expected',
    [
        (
            TreeDecomposition(bags={0: frozenset(range(5))}),
            'torso of node 0 is neither 3-connected nor a cycle',
        ),
        (
            TreeDecomposition(bags={0: frozenset({0, 1, 2, 3})}),
            'axiom (i): vertices [4] are in no bag',
        ),
        (
            TreeDecomposition(
                bags={0: frozenset({0, 1, 2, 3}), 1: frozenset({0, 3, 4})}
            ),
            'tree edges do not form a tree',
        ),
        (
            TreeDecomposition(
                bags={0: frozenset({0, 1, 2, 3}), 1: frozenset({3, 4})},
                tree_edges=((0, 1),),
            ),
            'axiom (ii): edge 0-4 is in no bag',
        ),
    ],
)
def test_validate_decomposition_reports_problems(house_graph, d, expected):
    """Each broken axiom shows up in the report."""
    assert expected in validate_decomposition(house_graph, d)


def test_validate_decomposition_rejects_unknown_vertices(house_graph):
    """Bags may only hold vertices of g."""
    d = TreeDecomposition(bags={0: frozenset({0, 9})})

    with pytest.raises(ValueError, match='unknown vertices'):
        validate_decomposition(house_graph, d)


def test_extract_torso_pieces_house():
    """One piece per edge of the square torso, the roof hangs off 0-3."""
    g = make_rooted_house()
    d = tutte_decomposition(g)

    pieces = extract_torso_pieces(g, d)

    assert pieces.torso_bag == frozenset({0, 1, 2, 3})
    assert sorted(pieces.pieces) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert pieces.pieces[(0, 3)] == cycle(3).with_roots(0, 1)
    assert pieces.vertex_maps[(0, 3)] == [0, 3, 4]
    assert pieces.pieces[(1, 2)] == theta(1).with_roots(0, 1)


def test_reassemble_torso_pieces_gives_back_the_graph():
    """Attaching the pieces to the bare torso rebuilds g."""
    g = make_rooted_house()

    rebuilt = reassemble_torso_pieces(extract_torso_pieces(g, tutte_decomposition(g)))

    assert is_isomorphic(rebuilt, g)


def test_extract_torso_pieces_replaces_root_multiplicity():
    """The root piece gets the requested number of root-root edges."""
    g = make_rooted_house()

    pieces = extract_torso_pieces(g, tutte_decomposition(g), root_multiplicity=3)

    assert pieces.pieces[(0, 3)].mult(0, 1) == 3


def test_extract_torso_pieces_requires_adjacent_roots():
    """Roots 1 and 3 are not joined by an edge."""
    g = make_rooted_house(1, 3)

    with pytest.raises(ValueError, match='joined by an edge'):
        extract_torso_pieces(g, tutte_decomposition(g))


def test_extract_torso_pieces_requires_2_connected():
    """Separable graphs are refused."""
    g = path(3).with_roots(0, 1)

    with pytest.raises(NotTwoConnectedError):
        extract_torso_pieces(g, TreeDecomposition(bags={0: frozenset({0, 1, 2})}))


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=6, max_multiplicity=2, connected=True))
def test_tutte_decomposition_is_always_valid(g):
    """Every 2-connected multigraph gets a valid decomposition."""
    assume(is_2_connected(g))

    assert validate_decomposition(g, tutte_decomposition(g)) == []
