'''Suites for 2-connectivity, the Tutte decomposition and torso pieces.'''

import random

import networkx as nx

from src.graphs.bonds import classify, max_bond_size
from src.graphs.construct import house, replace_root_edge, strip_root_edges, theta
from src.graphs.decomposition import (
    blocks,
    extract_torso_pieces,
    is_2_connected,
    reassemble_torso_pieces,
    torso,
    tutte_decomposition,
    validate_decomposition,
)
from src.graphs.multigraph import (
    Multigraph,
    components,
    is_isomorphic,
    underlying_simple,
)
from src.graphs.sampling import enumerate_multigraphs, random_two_connected
from src.props.results import PropertyResult, scaled


def _two_connected_reference(g: Multigraph) -> bool:
    '''Underlying simple graph 2-connected, or θ_k with k >= 2.'''
    if g.vertex_count == 2:
        return g.mult(0, 1) >= 2
    return g.vertex_count >= 3 and nx.is_biconnected(underlying_simple(g).to_networkx())


def _atlas_graphs(max_vertices: int) -> list[Multigraph]:
    '''2-connected simple graphs from the networkx atlas, one per isomorphism class.'''
    found = []
    for graph in nx.graph_atlas_g():
        if not 3 <= len(graph) <= max_vertices or not nx.is_biconnected(graph):
            continue
        found.append(
            Multigraph(
                vertex_count=len(graph),
                edges=tuple((u, v, 1) for u, v in graph.edges),
            )
        )
    return found


class TwoConnectedSuite:
    '''Multigraph 2-connectivity and the block forest.'''

    @property
    def name(self) -> str:
        return 'two-connected'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        characterization = PropertyResult(
            self.name, '2-connected iff simple 2-connected or a θ_k with k >= 2'
        )
        covering = PropertyResult(self.name, 'every edge lies in exactly one block')

        max_vertices, max_edge_sum = (5, 7) if budget >= 1 else (4, 5)
        for n in range(1, max_vertices + 1):
            for g in enumerate_multigraphs(n, max_edge_sum):
                characterization.record(
                    is_2_connected(g) == _two_connected_reference(g), g
                )
                forest = blocks(g)
                covering.record(
                    all(
                        sum(1 for block in forest.blocks if {u, v} <= block) == 1
                        for u, v, _ in g.edges
                    ),
                    g,
                )

        return [characterization, covering]


class TutteValidatorSuite:
    '''Decompositions of small 2-connected graphs pass the validator.'''

    @property
    def name(self) -> str:
        return 'tutte-validator'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        atlas = PropertyResult(self.name, 'atlas graphs decompose validly')
        thetas = PropertyResult(self.name, 'θ_2..θ_6 decompose validly')
        golden = PropertyResult(self.name, 'house splits into a triangle and a 4-cycle')
        multigraphs = PropertyResult(self.name, 'sampled multigraphs decompose validly')

        for g in _atlas_graphs(7 if budget >= 1 else 6):
            atlas.record(not validate_decomposition(g, tutte_decomposition(g)), g)
        for k in range(2, 7):
            g = theta(k)
            thetas.record(not validate_decomposition(g, tutte_decomposition(g)), g)

        g = house()
        d = tutte_decomposition(g)
        torso_sizes = sorted(torso(g, d, node).vertex_count for node in d.nodes)
        golden.record(
            len(d.nodes) == 2
            and d.adhesion(*d.tree_edges[0]) == {0, 3}
            and torso_sizes == [3, 4]
            and not validate_decomposition(g, d),
            g,
        )

        for _ in range(scaled(100, budget)):
            g = random_two_connected(rng, rng.randint(2, 7), rng.randint(0, 3))
            multigraphs.record(
                not validate_decomposition(g, tutte_decomposition(g)), g
            )

        return [atlas, thetas, golden, multigraphs]


class TorsoReassemblySuite:
    '''Torso pieces put back together, and the shape of each piece.'''

    @property
    def name(self) -> str:
        return 'torso-reassembly'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        reassembly = PropertyResult(
            self.name, 'pieces reassemble to the graph with its roots'
        )
        shape = PropertyResult(
            self.name, 'pieces are connected and bounded by the largest bond'
        )
        replaced = PropertyResult(
            self.name, 'pieces with i root edges for i <= k stay 2-connected'
        )

        for _ in range(scaled(50, budget)):
            g = random_two_connected(rng, rng.randint(3, 7), rng.randint(0, 3))
            u, v, _ = rng.choice(g.edges)
            g = g.with_roots(u, v)
            pieces = extract_torso_pieces(g, tutte_decomposition(g))

            rebuilt = reassemble_torso_pieces(pieces)
            reassembly.record(is_isomorphic(rebuilt, g), g, rebuilt)

            k = max_bond_size(g)
            for piece in pieces.pieces.values():
                stripped = strip_root_edges(piece)
                shape.record(
                    len(components(piece)) == 1
                    and piece.mult(*piece.roots) <= k
                    and (len(components(stripped)) == 1 or stripped.vertex_count == 2),
                    g,
                    piece,
                )
                for i in range(1, k + 1):
                    with_edges = replace_root_edge(piece, i)
                    replaced.record(
                        classify(with_edges).p == 1
                        and (
                            is_2_connected(with_edges)
                            or (with_edges.vertex_count == 2 and i == 1)
                        ),
                        g,
                        with_edges,
                    )

        return [reassembly, shape, replaced]
