'''The contraction order on multigraphs.

H is a contraction of G when G's vertices split into connected branch sets,
one per vertex of H, such that the number of G-edges between two branch sets
equals the multiplicity of the matching H-pair. `find_model` searches such
partitions exactly; `brute_force_is_contraction` checks the same relation by
contracting edges one at a time, and is used to cross-check the search.
'''

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from src.graphs.multigraph import (
    EdgeRef,
    Multigraph,
    components,
    contract_edge,
    dedupe_isomorphic,
    is_isomorphic,
    isomorphism_key,
)
from src.orders.poset import Comparator, FinitePoset, star_order_set
from src.utils.errors import MalformedModelError, SizeBoundExceeded

MAX_MODEL_VERTICES = 9
MAX_ORACLE_EDGES = 12


@dataclass(frozen=True)
class Model:
    '''Branch set of the host for every pattern vertex.'''

    branch_sets: dict[int, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self,
            'branch_sets',
            {u: frozenset(branch) for u, branch in self.branch_sets.items()},
        )

    @classmethod
    def identity(cls, g: Multigraph) -> 'Model':
        return cls({v: frozenset({v}) for v in g.vertices})

    def owner(self) -> dict[int, int]:
        '''Host vertex to the pattern vertex whose branch set holds it.'''
        return {w: u for u, branch in self.branch_sets.items() for w in branch}


@dataclass(frozen=True)
class CheckOptions:
    respect_roots: bool = False
    respect_labels: bool = False
    label_poset: FinitePoset | None = None

    def __post_init__(self):
        if self.respect_labels and self.label_poset is None:
            raise ValueError('respect_labels requires a label_poset')


def verify_model(
    h: Multigraph, g: Multigraph, m: Model, opts: CheckOptions | None = None
) -> bool:
    '''Check branch-set disjointness, cover, connectivity and exact multiplicities.

    With `respect_roots` the i-th root of g must lie in the branch set of the
    i-th root of h. With `respect_labels` the labels of every h-vertex must be
    dominated, under the poset's set lift, by the union of the labels in its
    branch set.

    Raises:
        MalformedModelError: If the model's domain is not V(h) or a branch set
            names a vertex outside g.
    '''
    opts = opts or CheckOptions()
    if set(m.branch_sets) != set(h.vertices):
        raise MalformedModelError(
            f'model domain {sorted(m.branch_sets)} does not match the '
            f'{h.vertex_count} pattern vertices'
        )
    for u, branch in m.branch_sets.items():
        outside = [w for w in branch if not 0 <= w < g.vertex_count]
        if outside:
            raise MalformedModelError(
                f'branch set of {u} names host vertices {outside} outside the host'
            )

    branches = list(m.branch_sets.values())
    covered = set().union(*branches) if branches else set()
    if sum(len(b) for b in branches) != len(covered):
        return False
    if covered != set(g.vertices):
        return False

    g_nx = g.to_networkx()
    for branch in branches:
        if not branch or not nx.is_connected(g_nx.subgraph(branch)):
            return False

    owner = m.owner()
    quotient: dict[tuple[int, int], int] = {}
    for a, b, mult in g.edges:
        u, v = owner[a], owner[b]
        if u != v:
            pair = (min(u, v), max(u, v))
            quotient[pair] = quotient.get(pair, 0) + mult
    if quotient != {(u, v): mult for u, v, mult in h.edges}:
        return False

    if opts.respect_roots:
        if len(h.roots) != len(g.roots):
            return False
        if any(g.roots[i] not in m.branch_sets[r] for i, r in enumerate(h.roots)):
            return False

    if opts.respect_labels:
        for u, branch in m.branch_sets.items():
            available = frozenset().union(*(g.label(w) for w in branch))
            if not star_order_set(h.label(u), available, opts.label_poset):
                return False

    return True


def find_model(
    h: Multigraph,
    g: Multigraph,
    opts: CheckOptions | None = None,
    max_vertices: int = MAX_MODEL_VERTICES,
) -> Model | None:
    '''Search every partition of V(g) into |V(h)| connected branch sets.

    Counting arguments (vertices, edges, components, roots) are settled before
    the search, so the bound only applies when a search is needed.

    Raises:
        SizeBoundExceeded: If a search is needed and g has more than
            `max_vertices` vertices.
    '''
    opts = opts or CheckOptions()
    if h.vertex_count == 0:
        return Model() if g.vertex_count == 0 else None
    if h.vertex_count > g.vertex_count or h.edge_sum > g.edge_sum:
        return None
    internal_target = g.edge_sum - h.edge_sum
    if internal_target < g.vertex_count - h.vertex_count:
        return None
    if len(components(h)) != len(components(g)):
        return None
    if opts.respect_roots and len(h.roots) != len(g.roots):
        return None
    if h == g:
        return Model.identity(g)
    if g.vertex_count > max_vertices:
        raise SizeBoundExceeded('host vertex count', g.vertex_count, max_vertices)

    g_nx = g.to_networkx()
    h_nx = _pattern_graph(h, opts)
    node_match = _node_matcher(opts)
    explored = 0

    for blocks in _connected_partitions(
        g, g_nx, h.vertex_count, internal_target, opts.respect_roots
    ):
        explored += 1
        quotient = _quotient_graph(g, blocks, opts)
        matcher = GraphMatcher(
            h_nx,
            quotient,
            node_match=node_match,
            edge_match=lambda a, b: a['multiplicity'] == b['multiplicity'],
        )
        if matcher.is_isomorphic():
            logging.debug(f'Model found after {explored} partitions')
            return Model({u: blocks[q] for u, q in matcher.mapping.items()})

    logging.debug(f'No model after {explored} partitions')
    return None


def _pattern_graph(h: Multigraph, opts: CheckOptions) -> nx.Graph:
    graph = h.to_networkx()
    if not opts.respect_roots:
        nx.set_node_attributes(graph, -1, 'root')
    return graph


def _quotient_graph(
    g: Multigraph, blocks: list[frozenset[int]], opts: CheckOptions
) -> nx.Graph:
    owner = {w: i for i, block in enumerate(blocks) for w in block}
    quotient = nx.Graph()
    for i, block in enumerate(blocks):
        quotient.add_node(
            i,
            label=frozenset().union(*(g.label(w) for w in block)),
            root=-1,
        )
    if opts.respect_roots:
        for position, r in enumerate(g.roots):
            quotient.nodes[owner[r]]['root'] = position
    for a, b, mult in g.edges:
        u, v = owner[a], owner[b]
        if u == v:
            continue
        if quotient.has_edge(u, v):
            quotient[u][v]['multiplicity'] += mult
        else:
            quotient.add_edge(u, v, multiplicity=mult)
    return quotient


def _node_matcher(opts: CheckOptions):
    def match(pattern: dict[str, Any], block: dict[str, Any]) -> bool:
        if pattern['root'] != block['root']:
            return False
        if opts.respect_labels:
            return star_order_set(pattern['label'], block['label'], opts.label_poset)
        return True

    return match


def _connected_partitions(
    g: Multigraph,
    g_nx: nx.Graph,
    block_count: int,
    internal_target: int,
    roots_apart: bool,
) -> Iterator[list[frozenset[int]]]:
    '''Partitions into `block_count` connected blocks with the given internal edge sum.

    Vertices are placed in breadth-first order, so a block that is still
    disconnected once none of its vertices has an unplaced neighbour is dead.
    '''
    order = [v for part in components(g) for v in nx.bfs_tree(g_nx, min(part))]
    placed_at = {v: i for i, v in enumerate(order)}
    last_neighbor = {
        v: max([placed_at[w] for w in g.neighbors(v)], default=-1) for v in order
    }
    separated = set(g.roots) if roots_apart and len(g.roots) == 2 else set()
    blocks: list[list[int]] = []

    def closed_and_split(block: list[int], step: int) -> bool:
        if any(last_neighbor[w] > step for w in block):
            return False
        return not nx.is_connected(g_nx.subgraph(block))

    def extend(step: int, internal: int) -> Iterator[list[frozenset[int]]]:
        if step == len(order):
            if len(blocks) == block_count and internal == internal_target:
                if all(nx.is_connected(g_nx.subgraph(b)) for b in blocks):
                    yield [frozenset(b) for b in blocks]
            return

        v = order[step]
        remaining = len(order) - step - 1
        for index in range(len(blocks) + 1):
            if index == len(blocks):
                if len(blocks) == block_count:
                    continue
                blocks.append([v])
                added = 0
            else:
                if len(blocks) + remaining < block_count:
                    continue
                block = blocks[index]
                if v in separated and separated & set(block):
                    continue
                added = sum(g.mult(v, w) for w in block)
                if internal + added > internal_target:
                    continue
                block.append(v)

            if not any(closed_and_split(b, step) for b in blocks):
                yield from extend(step + 1, internal + added)

            if index == len(blocks) - 1 and blocks[index] == [v]:
                blocks.pop()
            else:
                blocks[index].pop()

    yield from extend(0, 0)


def is_contraction(
    h: Multigraph,
    g: Multigraph,
    opts: CheckOptions | None = None,
    max_vertices: int = MAX_MODEL_VERTICES,
) -> bool:
    return find_model(h, g, opts, max_vertices=max_vertices) is not None


def graph_comparator(
    opts: CheckOptions | None = None, max_vertices: int = MAX_MODEL_VERTICES
) -> Comparator:
    '''The contraction order as a comparator: `cmp(h, g)` is h ⊴ g.'''

    def leq(h: Multigraph, g: Multigraph) -> bool:
        return is_contraction(h, g, opts, max_vertices=max_vertices)

    return leq


def _oracle_start(g: Multigraph, max_edges: int) -> Multigraph:
    if g.edge_sum > max_edges:
        raise SizeBoundExceeded('host edge sum', g.edge_sum, max_edges)
    return g.without_labels()


def _successors(g: Multigraph) -> Iterator[Multigraph]:
    for u, v, _ in g.edges:
        if len(g.roots) == 2 and {u, v} == set(g.roots):
            continue
        yield contract_edge(g, EdgeRef(u, v))


def _contraction_levels(g: Multigraph) -> Iterator[list[Multigraph]]:
    '''Contractions of g grouped by number of steps, deduplicated by isomorphism.'''
    level = [g]
    while level:
        yield level
        level = dedupe_isomorphic(s for state in level for s in _successors(state))


def brute_force_is_contraction(
    h: Multigraph, g: Multigraph, max_edges: int = MAX_ORACLE_EDGES
) -> bool:
    '''Breadth-first search over all edge-contraction sequences from g.

    Labels are ignored. Roots of g are dropped when h is unrooted; otherwise
    the root tuples must have equal length and are preserved positionally.

    Raises:
        SizeBoundExceeded: If g has more than `max_edges` edges.
    '''
    g = _oracle_start(g, max_edges)
    h = h.without_labels()
    if not h.roots:
        g = g.without_roots()
    elif len(h.roots) != len(g.roots):
        return False

    visited = 0
    for level in _contraction_levels(g):
        visited += len(level)
        if level[0].vertex_count < h.vertex_count:
            break
        if level[0].vertex_count > h.vertex_count:
            continue
        target = isomorphism_key(h)
        if any(isomorphism_key(s) == target and is_isomorphic(s, h) for s in level):
            logging.debug(f'Oracle reached the pattern after {visited} states')
            return True
    logging.debug(f'Oracle exhausted {visited} states')
    return False


def contraction_closure(
    g: Multigraph, strict: bool = False, max_edges: int = MAX_ORACLE_EDGES
) -> list[Multigraph]:
    '''Every contraction of g up to isomorphism; `strict` leaves out g itself.

    Labels and roots are carried along by each contraction.

    Raises:
        SizeBoundExceeded: If g has more than `max_edges` edges.
    '''
    if g.edge_sum > max_edges:
        raise SizeBoundExceeded('host edge sum', g.edge_sum, max_edges)
    closure: list[Multigraph] = []
    level = [g]
    while level:
        closure.extend(level)
        level = dedupe_isomorphic(s for state in level for s in _successors(state))
    return closure[1:] if strict else closure

