'''The loop-free multigraph value type and its basic operations.

Vertices are the dense integers 0..n-1. Edges are stored once per unordered
pair as (u, v, multiplicity) with u < v, so two graphs with the same edges
compare equal. Labels are frozensets of opaque identifiers; a graph whose
labels are all empty is stored as unlabeled. Roots are an ordered tuple of at
most two distinct vertices.
'''

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from functools import cached_property

import networkx as nx
from networkx.algorithms.isomorphism import (
    categorical_edge_match,
    categorical_node_match,
)

Edge = tuple[int, int, int]

_node_match = categorical_node_match(['label', 'root'], [frozenset(), -1])
_edge_match = categorical_edge_match('multiplicity', 1)


@dataclass(frozen=True)
class EdgeRef:
    '''An unordered pair of distinct vertices, stored with u < v.'''

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f'edge endpoints must be distinct, got {self.u} twice')
        if self.u > self.v:
            low, high = self.v, self.u
            object.__setattr__(self, 'u', low)
            object.__setattr__(self, 'v', high)


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int = 0
    edges: tuple[Edge, ...] = ()
    labels: tuple[frozenset[str], ...] | None = None
    roots: tuple[int, ...] = field(default=())

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError(f'vertex_count must be nonnegative, got {n}')

        merged: Counter[tuple[int, int]] = Counter()
        for u, v, m in self.edges:
            if u == v:
                raise ValueError(f'loop at vertex {u} is not allowed')
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f'edge {u}-{v} references a vertex outside 0..{n - 1}')
            if m < 0:
                raise ValueError(f'edge {u}-{v} has negative multiplicity {m}')
            merged[(min(u, v), max(u, v))] += m
        object.__setattr__(
            self,
            'edges',
            tuple((u, v, m) for (u, v), m in sorted(merged.items()) if m > 0),
        )

        object.__setattr__(self, 'labels', _normalize_labels(self.labels, n))

        roots = tuple(self.roots)
        if len(roots) > 2:
            raise ValueError(f'at most two roots are allowed, got {len(roots)}')
        if len(set(roots)) != len(roots):
            raise ValueError(f'roots must be distinct, got {roots}')
        for r in roots:
            if not 0 <= r < n:
                raise ValueError(f'root {r} is outside 0..{n - 1}')
        object.__setattr__(self, 'roots', roots)

    @cached_property
    def _adjacency(self) -> dict[int, dict[int, int]]:
        adjacency: dict[int, dict[int, int]] = {v: {} for v in range(self.vertex_count)}
        for u, v, m in self.edges:
            adjacency[u][v] = m
            adjacency[v][u] = m
        return adjacency

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_sum(self) -> int:
        '''Number of edges counted with multiplicity.'''
        return sum(m for _, _, m in self.edges)

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    def mult(self, u: int, v: int) -> int:
        return self._adjacency.get(u, {}).get(v, 0)

    def neighbors(self, v: int) -> dict[int, int]:
        '''Neighbours of v mapped to the multiplicity of the joining edge.'''
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return sum(self._adjacency[v].values())

    def label(self, v: int) -> frozenset[str]:
        if self.labels is None:
            return frozenset()
        return self.labels[v]

    def with_roots(self, *roots: int) -> 'Multigraph':
        return replace(self, roots=roots)

    def without_roots(self) -> 'Multigraph':
        return replace(self, roots=())

    def without_labels(self) -> 'Multigraph':
        return replace(self, labels=None)

    def with_edge(self, u: int, v: int, multiplicity: int) -> 'Multigraph':
        '''Copy with the multiplicity of {u, v} set (0 removes the pair).'''
        pair = (min(u, v), max(u, v))
        kept = [(a, b, m) for a, b, m in self.edges if (a, b) != pair]
        return replace(self, edges=tuple(kept) + ((*pair, multiplicity),))

    def to_networkx(self) -> nx.Graph:
        '''Simple networkx graph carrying multiplicity, label and root position.'''
        graph = nx.Graph()
        for v in self.vertices:
            graph.add_node(v, label=self.label(v), root=-1)
        for position, r in enumerate(self.roots):
            graph.nodes[r]['root'] = position
        for u, v, m in self.edges:
            graph.add_edge(u, v, multiplicity=m)
        return graph


def _normalize_labels(
    labels: Mapping[int, Iterable[str]] | Sequence[Iterable[str]] | None, n: int
) -> tuple[frozenset[str], ...] | None:
    if labels is None:
        return None
    if isinstance(labels, Mapping):
        for v in labels:
            if not 0 <= v < n:
                raise ValueError(f'label on vertex {v} outside 0..{n - 1}')
        normalized = tuple(frozenset(labels.get(v, ())) for v in range(n))
    else:
        if len(labels) != n:
            raise ValueError(f'expected {n} label sets, got {len(labels)}')
        normalized = tuple(frozenset(label) for label in labels)
    if not any(normalized):
        return None
    return normalized


def contract_edge_with_map(g: Multigraph, e: EdgeRef) -> tuple[Multigraph, list[int]]:
    '''Contract e and return the result together with the old-to-new vertex map.

    The merged vertex takes the smaller endpoint's position; every vertex after
    the larger endpoint shifts down by one.
    '''
    u, v = e.u, e.v
    if not (0 <= v < g.vertex_count) or g.mult(u, v) < 1:
        raise ValueError(f'{u}-{v} is not an edge of the graph')
    if len(g.roots) == 2 and {u, v} == set(g.roots):
        raise ValueError('contracting the edge between the two roots would merge them')

    index = [w if w < v else w - 1 for w in range(g.vertex_count)]
    index[v] = index[u]

    edges = [
        (index[a], index[b], m) for a, b, m in g.edges if index[a] != index[b]
    ]

    labels = None
    if g.labels is not None:
        merged_labels: list[frozenset[str]] = [frozenset()] * (g.vertex_count - 1)
        for w in g.vertices:
            merged_labels[index[w]] = merged_labels[index[w]] | g.labels[w]
        labels = tuple(merged_labels)

    contracted = Multigraph(
        vertex_count=g.vertex_count - 1,
        edges=tuple(edges),
        labels=labels,
        roots=tuple(index[r] for r in g.roots),
    )
    return contracted, index


def contract_edge(g: Multigraph, e: EdgeRef) -> Multigraph:
    '''Identify the endpoints of e, dropping the loops and keeping parallel edges.'''
    return contract_edge_with_map(g, e)[0]


def components(g: Multigraph) -> list[frozenset[int]]:
    '''Vertex sets of the connected components, ordered by smallest vertex.'''
    parts = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(parts, key=min)


def is_connected(g: Multigraph) -> bool:
    return len(components(g)) == 1


def isomorphism_key(g: Multigraph) -> tuple:
    '''Invariant shared by isomorphic graphs, used to bucket candidates.'''
    return (
        g.vertex_count,
        g.edge_sum,
        len(g.roots),
        tuple(sorted(g.degree(v) for v in g.vertices)),
        tuple(sorted(m for _, _, m in g.edges)),
        tuple(sorted(len(g.label(v)) for v in g.vertices)),
    )


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    '''True iff a bijection preserves multiplicities, root positions and labels.'''
    if isomorphism_key(g) != isomorphism_key(h):
        return False
    return nx.is_isomorphic(
        g.to_networkx(),
        h.to_networkx(),
        node_match=_node_match,
        edge_match=_edge_match,
    )


def underlying_simple(g: Multigraph) -> Multigraph:
    return replace(g, edges=tuple((u, v, 1) for u, v, _ in g.edges))


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    '''Side-by-side union; vertices of later graphs are shifted. Roots are dropped.'''
    edges: list[Edge] = []
    labels: list[frozenset[str]] = []
    offset = 0
    for graph in graphs:
        edges.extend((u + offset, v + offset, m) for u, v, m in graph.edges)
        labels.extend(graph.label(v) for v in graph.vertices)
        offset += graph.vertex_count
    return Multigraph(vertex_count=offset, edges=tuple(edges), labels=tuple(labels))


def induced_subgraph(
    g: Multigraph, vertices: Iterable[int], roots: Sequence[int] = ()
) -> tuple[Multigraph, list[int]]:
    '''Sub-multigraph on the given vertices, renumbered in increasing order.

    Returns the subgraph and the list mapping new indices back to g's vertices.
    `roots` are given in g's numbering.
    '''
    kept = sorted(set(vertices))
    position = {v: i for i, v in enumerate(kept)}
    edges = tuple(
        (position[u], position[v], m)
        for u, v, m in g.edges
        if u in position and v in position
    )
    labels = tuple(g.label(v) for v in kept) if g.labels is not None else None
    subgraph = Multigraph(
        vertex_count=len(kept),
        edges=edges,
        labels=labels,
        roots=tuple(position[r] for r in roots),
    )
    return subgraph, kept


def dedupe_isomorphic(graphs: Iterable[Multigraph]) -> list[Multigraph]:
    '''Keep the first representative of every isomorphism class, in input order.'''
    buckets: dict[tuple, list[Multigraph]] = {}
    unique: list[Multigraph] = []
    for graph in graphs:
        bucket = buckets.setdefault(isomorphism_key(graph), [])
        if any(is_isomorphic(graph, seen) for seen in bucket):
            continue
        bucket.append(graph)
        unique.append(graph)
    return unique
