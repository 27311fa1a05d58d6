'''Seeded random multigraphs and exhaustive small corpora.

Every sampler takes a `random.Random` so that a suite seeded once replays the
same graphs.
'''

import random
from collections.abc import Iterator, Sequence
from itertools import combinations

from src.graphs.bonds import max_bond_size
from src.graphs.construct import coclique
from src.graphs.contraction import Model
from src.graphs.multigraph import (
    EdgeRef,
    Multigraph,
    components,
    contract_edge_with_map,
    dedupe_isomorphic,
    disjoint_union,
)


def random_multigraph(
    rng: random.Random, max_vertices: int, max_edges: int, max_multiplicity: int = 3
) -> Multigraph:
    '''Any loop-free multigraph, possibly disconnected or empty of edges.'''
    n = rng.randint(1, max_vertices)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    budget = rng.randint(0, max_edges)
    edges = []
    rng.shuffle(pairs)
    for u, v in pairs:
        if budget == 0:
            break
        if rng.random() < 0.5:
            m = rng.randint(1, min(max_multiplicity, budget))
            edges.append((u, v, m))
            budget -= m
    return Multigraph(vertex_count=n, edges=tuple(edges))


def random_connected(
    rng: random.Random, n: int, extra_edges: int, max_multiplicity: int = 3
) -> Multigraph:
    '''A random spanning tree on n vertices plus `extra_edges` more edges.'''
    edges = [(v, rng.randrange(v), 1) for v in range(1, n)]
    for _ in range(extra_edges if n > 1 else 0):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.randint(1, max_multiplicity)))
    return Multigraph(vertex_count=n, edges=tuple(edges))


def random_two_connected(
    rng: random.Random, n: int, extra_edges: int, max_multiplicity: int = 2
) -> Multigraph:
    '''A shuffled Hamiltonian cycle plus chords and parallel edges; θ_k when n = 2.'''
    if n == 2:
        return Multigraph(vertex_count=2, edges=((0, 1, rng.randint(2, 4)),))
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n], 1) for i in range(n)]
    for _ in range(extra_edges):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.randint(1, max_multiplicity)))
    return Multigraph(vertex_count=n, edges=tuple(edges))


def random_two_rooted(
    rng: random.Random, n: int, extra_edges: int, edge_rooted: bool = False
) -> Multigraph:
    '''A connected graph on n >= 2 vertices with two random roots.'''
    g = random_connected(rng, n, extra_edges)
    r, s = rng.sample(range(n), 2)
    if edge_rooted and g.mult(r, s) == 0:
        g = g.with_edge(r, s, 1)
    return g.with_roots(r, s)


def random_labels(
    rng: random.Random, g: Multigraph, alphabet: Sequence[str], density: float = 0.5
) -> Multigraph:
    labels = tuple(
        frozenset(a for a in alphabet if rng.random() < density) for _ in g.vertices
    )
    return Multigraph(
        vertex_count=g.vertex_count, edges=g.edges, labels=labels, roots=g.roots
    )


def random_in_class(
    rng: random.Random, p: int, k: int, max_edges: int, max_attempts: int = 200
) -> Multigraph:
    '''A graph with at most p components and no bond larger than k.

    Rejection sampling over unions of random connected pieces. For k >= 1 no
    component is a single vertex.
    '''
    if k == 0 or max_edges < 1:
        return coclique(rng.randint(1, p))
    for _ in range(max_attempts):
        pieces = []
        budget = max_edges
        for _ in range(rng.randint(1, p)):
            if budget < 1:
                break
            # every piece has an edge
            n = rng.randint(2, 1 + min(budget, 4))
            extra = rng.randint(0, (budget - (n - 1)) // 2)
            piece = random_connected(rng, n, extra, max_multiplicity=k)
            budget -= piece.edge_sum
            pieces.append(piece)
        g = disjoint_union(*pieces)
        if g.edge_sum <= max_edges and max_bond_size(g) <= k:
            return g
    return random_connected(rng, rng.randint(2, 1 + min(max_edges, 4)), 0)


def random_contraction(
    rng: random.Random, g: Multigraph, steps: int
) -> tuple[Multigraph, Model]:
    '''Contract up to `steps` random edges; return the result and its model in g.

    The edge between two roots is never chosen.
    '''
    current = g
    owner = list(g.vertices)
    for _ in range(steps):
        candidates = [
            (u, v)
            for u, v, _ in current.edges
            if not (len(current.roots) == 2 and {u, v} == set(current.roots))
        ]
        if not candidates:
            break
        u, v = rng.choice(candidates)
        current, index = contract_edge_with_map(current, EdgeRef(u, v))
        owner = [index[o] for o in owner]

    branch_sets: dict[int, set[int]] = {v: set() for v in current.vertices}
    for original, image in enumerate(owner):
        branch_sets[image].add(original)
    return current, Model(branch_sets)


def enumerate_multigraphs(
    n: int, max_edge_sum: int, connected: bool = False
) -> Iterator[Multigraph]:
    '''Every labelled multigraph on n vertices with at most `max_edge_sum` edges.'''
    pairs = list(combinations(range(n), 2))
    chosen: list[int] = []

    def assign(index: int, remaining: int) -> Iterator[Multigraph]:
        if index == len(pairs):
            g = Multigraph(
                vertex_count=n,
                edges=tuple((*pair, m) for pair, m in zip(pairs, chosen) if m),
            )
            if not connected or len(components(g)) == 1:
                yield g
            return
        for m in range(remaining + 1):
            chosen.append(m)
            yield from assign(index + 1, remaining - m)
            chosen.pop()

    yield from assign(0, max_edge_sum)


def exhaustive_corpus(
    max_vertices: int, max_edge_sum: int, connected: bool = False
) -> list[Multigraph]:
    '''One representative per isomorphism class, smallest graphs first.'''
    return dedupe_isomorphic(
        g
        for n in range(1, max_vertices + 1)
        for g in enumerate_multigraphs(n, max_edge_sum, connected)
    )


def permuted(rng: random.Random, g: Multigraph) -> Multigraph:
    '''An isomorphic copy with shuffled vertex numbers.'''
    order = list(g.vertices)
    rng.shuffle(order)
    labels = None
    if g.labels is not None:
        relabeled = [frozenset()] * g.vertex_count
        for v in g.vertices:
            relabeled[order[v]] = g.labels[v]
        labels = tuple(relabeled)
    return Multigraph(
        vertex_count=g.vertex_count,
        edges=tuple((order[u], order[v], m) for u, v, m in g.edges),
        labels=labels,
        roots=tuple(order[r] for r in g.roots),
    )
