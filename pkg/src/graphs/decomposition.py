'''Blocks, 2- and 3-connectivity, and adhesion-2 tree decompositions.

Multigraph conventions: θ_k is 2-connected for k >= 2, and 3-connected for
k >= 3. A two-vertex bag is classified the same way, counting the parallel
edges of g between its vertices plus one virtual edge per neighbouring bag.
'''

import logging
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from src.graphs.construct import attach, coclique, replace_root_edge
from src.graphs.multigraph import Multigraph, induced_subgraph
from src.utils.errors import NotTwoConnectedError

Pair = tuple[int, int]


@dataclass(frozen=True)
class BlockForest:
    blocks: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]

    def blocks_at(self, v: int) -> list[int]:
        '''Indices of the blocks containing v.'''
        return [i for i, block in enumerate(self.blocks) if v in block]

    def incidence(self) -> list[tuple[int, int]]:
        '''(block index, cutvertex) pairs of the block-cutvertex forest.'''
        return [
            (i, c)
            for c in sorted(self.cutvertices)
            for i in self.blocks_at(c)
        ]


def blocks(g: Multigraph) -> BlockForest:
    '''Maximal 2-connected pieces, bridges and isolated vertices.'''
    simple = g.to_networkx()
    found = [frozenset(b) for b in nx.biconnected_components(simple)]
    found += [frozenset({v}) for v in g.vertices if simple.degree(v) == 0]
    return BlockForest(
        blocks=tuple(sorted(found, key=sorted)),
        cutvertices=frozenset(nx.articulation_points(simple)),
    )


def is_2_connected(g: Multigraph) -> bool:
    '''2-connectivity with parallel edges taken into account.

    Every copy of a parallel edge is subdivided, which leaves 2-connectivity
    unchanged and yields a simple graph.
    '''
    subdivided = nx.Graph()
    subdivided.add_nodes_from(g.vertices)
    for u, v, m in g.edges:
        if m == 1:
            subdivided.add_edge(u, v)
            continue
        for copy in range(m):
            middle = ('subdivision', u, v, copy)
            subdivided.add_edge(u, middle)
            subdivided.add_edge(middle, v)
    return len(subdivided) >= 3 and nx.is_biconnected(subdivided)


def is_3_connected(g: Multigraph) -> bool:
    if g.vertex_count == 2:
        return g.mult(0, 1) >= 3
    if g.vertex_count < 4:
        return False
    return nx.node_connectivity(g.to_networkx()) >= 3


def _is_cycle(graph: nx.Graph) -> bool:
    return (
        len(graph) >= 3
        and nx.is_connected(graph)
        and all(d == 2 for _, d in graph.degree())
    )


@dataclass(frozen=True)
class TreeDecomposition:
    bags: dict[int, frozenset[int]] = field(default_factory=dict)
    tree_edges: tuple[Pair, ...] = ()

    @property
    def nodes(self) -> list[int]:
        return sorted(self.bags)

    def neighbors(self, node: int) -> list[int]:
        return sorted(
            {b for a, b in self.tree_edges if a == node}
            | {a for a, b in self.tree_edges if b == node}
        )

    def adhesion(self, node: int, other: int) -> frozenset[int]:
        return self.bags[node] & self.bags[other]


def _torso_edges(g: Multigraph, d: TreeDecomposition, node: int) -> set[Pair]:
    bag = d.bags[node]
    edges = {(u, v) for u, v, _ in g.edges if u in bag and v in bag}
    for other in d.neighbors(node):
        shared = sorted(d.adhesion(node, other))
        edges.update(combinations(shared, 2))
    return edges


def torso(g: Multigraph, d: TreeDecomposition, node: int) -> Multigraph:
    '''Simple graph on the bag: g's edges inside it plus the adhesion pairs.

    The i-th vertex of the result is the i-th smallest vertex of the bag.
    '''
    if node not in d.bags:
        raise ValueError(f'unknown decomposition node {node}')
    order = sorted(d.bags[node])
    position = {v: i for i, v in enumerate(order)}
    return Multigraph(
        vertex_count=len(order),
        edges=tuple(
            (position[u], position[v], 1) for u, v in _torso_edges(g, d, node)
        ),
    )


def torso_kind(g: Multigraph, d: TreeDecomposition, node: int) -> str:
    ''''cycle', '3conn' or 'other'.'''
    bag = sorted(d.bags[node])
    if len(bag) == 2:
        x, y = bag
        parallel = g.mult(x, y) + sum(
            1 for other in d.neighbors(node) if d.adhesion(node, other) == {x, y}
        )
        if parallel >= 3:
            return '3conn'
        return 'cycle' if parallel == 2 else 'other'

    graph = torso(g, d, node)
    if _is_cycle(graph.to_networkx()):
        return 'cycle'
    if is_3_connected(graph):
        return '3conn'
    return 'other'


def validate_decomposition(g: Multigraph, d: TreeDecomposition) -> list[str]:
    '''Every violated tree-decomposition axiom, bad adhesion and bad torso.

    An empty list means d is a valid Tutte decomposition of g.

    Raises:
        ValueError: If a bag names a vertex outside g.
    '''
    for node, bag in d.bags.items():
        unknown = sorted(v for v in bag if not 0 <= v < g.vertex_count)
        if unknown:
            raise ValueError(f'bag {node} references unknown vertices {unknown}')

    report: list[str] = []
    tree = nx.Graph()
    tree.add_nodes_from(d.bags)
    for a, b in d.tree_edges:
        if a not in d.bags or b not in d.bags:
            report.append(f'tree edge {a}-{b} uses an unknown node')
            continue
        tree.add_edge(a, b)

    if not d.bags:
        if g.vertex_count:
            report.append('decomposition has no bags')
        return report
    if len(d.tree_edges) != tree.number_of_edges() or not nx.is_tree(tree):
        report.append('tree edges do not form a tree')

    covered = set().union(*d.bags.values())
    missing = sorted(set(g.vertices) - covered)
    if missing:
        report.append(f'axiom (i): vertices {missing} are in no bag')

    for u, v, _ in g.edges:
        if not any(u in bag and v in bag for bag in d.bags.values()):
            report.append(f'axiom (ii): edge {u}-{v} is in no bag')

    for v in g.vertices:
        holding = [node for node, bag in d.bags.items() if v in bag]
        if holding and not nx.is_connected(tree.subgraph(holding)):
            report.append(f'axiom (iii): nodes holding vertex {v} are not connected')

    for a, b in tree.edges:
        shared = d.adhesion(a, b)
        if len(shared) != 2:
            report.append(f'adhesion of {a}-{b} has size {len(shared)}, expected 2')

    for node in d.nodes:
        kind = torso_kind(g, d, node)
        if kind == 'other':
            report.append(f'torso of node {node} is neither 3-connected nor a cycle')

    return report


def tutte_decomposition(g: Multigraph) -> TreeDecomposition:
    '''Adhesion-2 tree decomposition whose torsos are 3-connected or cycles.

    The underlying simple graph is split recursively at the lexicographically
    first separation pair, adding a virtual edge to each side. Adjacent cycle
    torsos are then merged as long as the merge is still a cycle.

    Raises:
        NotTwoConnectedError: If g is not 2-connected.
    '''
    if not is_2_connected(g):
        raise NotTwoConnectedError('tutte_decomposition needs a 2-connected graph')
    if g.vertex_count == 2:
        return TreeDecomposition(bags={0: frozenset({0, 1})})

    bags: list[frozenset[int]] = []
    tree_edges: list[Pair] = []
    _split(g.to_networkx(), bags, tree_edges)

    decomposition = _merge_cycles(g, bags, tree_edges)
    logging.debug(f'Tutte decomposition with {len(decomposition.bags)} bags')
    return decomposition


def _separation_pair(graph: nx.Graph) -> Pair | None:
    for a, b in combinations(sorted(graph), 2):
        rest = graph.subgraph(set(graph) - {a, b})
        if not nx.is_connected(rest):
            return a, b
    return None


def _split(piece: nx.Graph, bags: list[frozenset[int]], tree_edges: list[Pair]) -> None:
    '''Append the leaves of `piece` to bags and connect them in tree_edges.'''
    pair = None
    if len(piece) > 3 and not _is_cycle(piece):
        if nx.node_connectivity(piece) < 3:
            pair = _separation_pair(piece)
    if pair is None:
        bags.append(frozenset(piece))
        return

    a, b = pair
    rest = piece.subgraph(set(piece) - {a, b})
    hubs = []
    for part in sorted(nx.connected_components(rest), key=min):
        sub = piece.subgraph(part | {a, b}).copy()
        sub.add_edge(a, b)
        start = len(bags)
        _split(sub, bags, tree_edges)
        hubs.append(
            next(i for i in range(start, len(bags)) if {a, b} <= bags[i])
        )
    tree_edges.extend((hubs[0], hub) for hub in hubs[1:])


def _merge_cycles(
    g: Multigraph, bags: list[frozenset[int]], tree_edges: list[Pair]
) -> TreeDecomposition:
    current = _renumbered(bags, tree_edges)
    merged = True
    while merged:
        merged = False
        for a, b in current.tree_edges:
            if {torso_kind(g, current, a), torso_kind(g, current, b)} != {'cycle'}:
                continue
            candidate = _contract_tree_edge(current, a, b)
            union = current.bags[a] | current.bags[b]
            joined = next(n for n, bag in candidate.bags.items() if bag == union)
            if torso_kind(g, candidate, joined) == 'cycle':
                current = candidate
                merged = True
                break
    return current


def _contract_tree_edge(d: TreeDecomposition, a: int, b: int) -> TreeDecomposition:
    bags = [bag for node, bag in d.bags.items() if node not in (a, b)]
    bags.append(d.bags[a] | d.bags[b])
    index = {node: i for i, node in enumerate(n for n in d.bags if n not in (a, b))}
    index[a] = index[b] = len(bags) - 1
    edges = [
        (index[x], index[y]) for x, y in d.tree_edges if {x, y} != {a, b}
    ]
    return _renumbered(bags, edges)


def _renumbered(
    bags: list[frozenset[int]], tree_edges: list[Pair]
) -> TreeDecomposition:
    '''Number nodes by their sorted bag contents.'''
    order = sorted(range(len(bags)), key=lambda i: sorted(bags[i]))
    index = {old: new for new, old in enumerate(order)}
    return TreeDecomposition(
        bags={index[old]: bags[old] for old in order},
        tree_edges=tuple(
            sorted(
                (min(index[x], index[y]), max(index[x], index[y]))
                for x, y in tree_edges
            )
        ),
    )


@dataclass(frozen=True)
class TorsoPieces:
    '''Pieces hanging off every torso edge of the bag holding both roots.

    `pieces[(x, y)]` is rooted at (x, y) in its own numbering, and
    `vertex_maps[(x, y)][i]` is the vertex of g that its vertex i came from.
    '''

    torso_bag: frozenset[int]
    roots: Pair
    pieces: dict[Pair, Multigraph]
    vertex_maps: dict[Pair, list[int]]


def extract_torso_pieces(
    g: Multigraph, d: TreeDecomposition, root_multiplicity: int | None = None
) -> TorsoPieces:
    '''Split g along the torso of the first bag containing both roots.

    For a torso edge {x, y}, the piece lives on the block of
    g - (bag - {x, y}) + xy that contains x and y. `root_multiplicity`
    replaces the number of root-root edges in the piece at the root pair;
    by default g's own multiplicity is kept.

    Raises:
        NotTwoConnectedError: If g is not 2-connected.
        ValueError: If the roots are not adjacent or share no bag.
    '''
    if not is_2_connected(g):
        raise NotTwoConnectedError('extract_torso_pieces needs a 2-connected graph')
    if len(g.roots) != 2 or g.mult(*g.roots) < 1:
        raise ValueError('the two roots must be joined by an edge')
    r, s = g.roots

    holding = [node for node in d.nodes if {r, s} <= d.bags[node]]
    if not holding:
        raise ValueError(f'no bag contains both roots {r} and {s}')
    node = holding[0]
    bag = d.bags[node]

    simple = g.to_networkx()
    pieces: dict[Pair, Multigraph] = {}
    vertex_maps: dict[Pair, list[int]] = {}
    for x, y in sorted(_torso_edges(g, d, node)):
        reduced = simple.subgraph(set(simple) - (bag - {x, y})).copy()
        reduced.add_edge(x, y)
        block = next(
            b for b in nx.biconnected_components(reduced) if {x, y} <= b
        )
        piece, vertex_map = induced_subgraph(g.without_roots(), block, roots=(x, y))
        if root_multiplicity is not None and {x, y} == {r, s}:
            piece = replace_root_edge(piece, root_multiplicity)
        pieces[(x, y)] = piece
        vertex_maps[(x, y)] = vertex_map

    return TorsoPieces(
        torso_bag=bag, roots=(r, s), pieces=pieces, vertex_maps=vertex_maps
    )


def reassemble_torso_pieces(pieces: TorsoPieces) -> Multigraph:
    '''Attach every piece to the edgeless graph on the torso bag at its root pair.'''
    order = sorted(pieces.torso_bag)
    position = {v: i for i, v in enumerate(order)}
    backbone = coclique(len(order)).with_roots(
        *(position[v] for v in pieces.roots)
    )
    result = backbone
    for (x, y), piece in sorted(pieces.pieces.items()):
        result = attach(result, position[x], position[y], piece)
    return result
