'''Named graph generators and the attach-based constructions.

`attach(g, u, v, h)` identifies h's roots with the vertices u and v of g. The
result keeps g's vertex numbering and roots; h's remaining vertices follow in
their own order.
'''

import inspect
from collections.abc import Callable, Sequence
from enum import Enum

from src.graphs.multigraph import Edge, Multigraph, components


def theta(k: int) -> Multigraph:
    '''Two vertices joined by k parallel edges.'''
    _require_positive(k=k)
    return Multigraph(vertex_count=2, edges=((0, 1, k),))


def coclique(n: int) -> Multigraph:
    '''n isolated vertices.'''
    _require_positive(n=n)
    return Multigraph(vertex_count=n)


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise ValueError(f'a simple cycle needs at least 3 vertices, got {n}')
    return Multigraph(vertex_count=n, edges=_ring(n))


def complete(n: int) -> Multigraph:
    _require_positive(n=n)
    return Multigraph(
        vertex_count=n,
        edges=tuple((u, v, 1) for u in range(n) for v in range(u + 1, n)),
    )


def wheel(n: int) -> Multigraph:
    '''Rim 0..n-1 in cycle order and the hub last.'''
    if n < 3:
        raise ValueError(f'a wheel needs at least 3 rim vertices, got {n}')
    spokes = tuple((v, n, 1) for v in range(n))
    return Multigraph(vertex_count=n + 1, edges=_ring(n) + spokes)


def path(n: int) -> Multigraph:
    _require_positive(n=n)
    return Multigraph(vertex_count=n, edges=tuple((v, v + 1, 1) for v in range(n - 1)))


def house() -> Multigraph:
    '''A 4-cycle 0-1-2-3 with the roof vertex 4 on the side 0-3.'''
    return Multigraph(
        vertex_count=5,
        edges=((0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1), (0, 3, 1)),
    )


def complete_bipartite(a: int, b: int) -> Multigraph:
    _require_positive(a=a, b=b)
    return Multigraph(
        vertex_count=a + b,
        edges=tuple((u, a + v, 1) for u in range(a) for v in range(b)),
    )


def _ring(n: int) -> tuple[Edge, ...]:
    return tuple((v, (v + 1) % n, 1) for v in range(n))


def _require_positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f'{name} must be positive, got {value}')


GENERATORS: dict[str, Callable[..., Multigraph]] = {
    'theta': theta,
    'coclique': coclique,
    'cycle': cycle,
    'complete': complete,
    'wheel': wheel,
    'path': path,
    'house': house,
    'complete_bipartite': complete_bipartite,
}


def gen(kind: str, *params: int) -> Multigraph:
    '''Build a named graph, e.g. `gen('theta', 5)` or `gen('house')`.'''
    if kind not in GENERATORS:
        raise ValueError(
            f'unknown graph kind {kind!r}; expected one of {", ".join(GENERATORS)}'
        )
    generator = GENERATORS[kind]
    expected = len(inspect.signature(generator).parameters)
    if len(params) != expected:
        raise ValueError(f'{kind} takes {expected} parameter(s), got {len(params)}')
    return generator(*params)


def attach(g: Multigraph, u: int, v: int, h: Multigraph) -> Multigraph:
    '''Identify h's roots (r, s) with (u, v) of g.

    Multiplicities between u and v add up, labels at u and v are merged, and
    the result is rooted like g.
    '''
    if len(h.roots) != 2:
        raise ValueError(f'attached graph needs two roots, got {len(h.roots)}')
    if u == v:
        raise ValueError(f'attachment vertices must differ, got {u} twice')
    for w in (u, v):
        if not 0 <= w < g.vertex_count:
            raise ValueError(f'attachment vertex {w} is not in the host')

    r, s = h.roots
    index: dict[int, int] = {r: u, s: v}
    for w in h.vertices:
        if w not in index:
            index[w] = g.vertex_count + len(index) - 2
    size = g.vertex_count + h.vertex_count - 2

    edges = g.edges + tuple((index[a], index[b], m) for a, b, m in h.edges)

    labels = None
    if g.is_labeled or h.is_labeled:
        merged = [g.label(w) for w in g.vertices] + [frozenset()] * (
            h.vertex_count - 2
        )
        for w in h.vertices:
            merged[index[w]] = merged[index[w]] | h.label(w)
        labels = tuple(merged)

    return Multigraph(vertex_count=size, edges=edges, labels=labels, roots=g.roots)


def build_on_backbone(
    j: Multigraph, attachments: Sequence[tuple[int, int, Multigraph]]
) -> Multigraph:
    '''Attach each (u, v, h) to j in order.'''
    result = j
    for u, v, h in attachments:
        result = attach(result, u, v, h)
    return result


class Orientation(Enum):
    FORWARD = 'forward'
    REVERSED = 'reversed'


def cycle_construction(
    hs: Sequence[Multigraph], orientations: Sequence[Orientation] | None = None
) -> Multigraph:
    '''Replace every edge {v_i, v_(i+1) mod k} of a k-cycle by the i-th piece.

    A forward piece is attached at (v_i, v_(i+1)), a reversed one at
    (v_(i+1), v_i).
    '''
    k = len(hs)
    if k < 2:
        raise ValueError(f'cycle construction needs at least 2 pieces, got {k}')
    if orientations is None:
        orientations = [Orientation.FORWARD] * k
    if len(orientations) != k:
        raise ValueError(f'expected {k} orientations, got {len(orientations)}')
    for i, h in enumerate(hs):
        if len(components(h)) != 1:
            raise ValueError(f'piece {i} is not connected')

    attachments = []
    for i, (h, orientation) in enumerate(zip(hs, orientations)):
        u, v = i, (i + 1) % k
        if orientation is Orientation.REVERSED:
            u, v = v, u
        attachments.append((u, v, h))
    return build_on_backbone(coclique(k), attachments)


def is_edge_rooted(h: Multigraph) -> bool:
    return len(h.roots) == 2 and h.mult(*h.roots) >= 1


def strip_root_edges(h: Multigraph) -> Multigraph:
    '''Delete every edge between the two roots.'''
    if len(h.roots) != 2:
        raise ValueError(f'expected a 2-rooted graph, got {len(h.roots)} roots')
    return h.with_edge(*h.roots, 0)


def replace_root_edge(h: Multigraph, multiplicity: int) -> Multigraph:
    '''Give the root pair exactly `multiplicity` parallel edges.'''
    if multiplicity < 0:
        raise ValueError(f'multiplicity must be nonnegative, got {multiplicity}')
    return strip_root_edges(h).with_edge(*h.roots, multiplicity)
