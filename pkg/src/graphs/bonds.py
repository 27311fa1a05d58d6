'''Bonds, the G_{p,k} classes, and the two contraction characterizations.

A bond is a minimal non-empty edge cut. Inside a connected component every
bond is the set of edges between the two halves of a bipartition whose halves
are both connected, so enumeration walks those bipartitions. Sizes count
parallel edges.
'''

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from src.graphs.construct import coclique, theta
from src.graphs.contraction import MAX_MODEL_VERTICES, is_contraction
from src.graphs.multigraph import EdgeRef, Multigraph, components, induced_subgraph


@dataclass(frozen=True)
class Bond:
    edges: frozenset[EdgeRef]
    side: frozenset[int]
    size: int

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((e.u, e.v) for e in self.edges)


@dataclass(frozen=True)
class PKClass:
    '''Smallest (p, k) such that the graph lies in G_{p,k}.'''

    p: int
    k: int

    def admits(self, p: int, k: int) -> bool:
        '''Whether a graph of this class belongs to G_{p,k}.'''
        return p >= self.p and k >= self.k


def enumerate_bonds(g: Multigraph) -> list[Bond]:
    '''All bonds of g, ordered by size then by edge list.'''
    g_nx = g.to_networkx()
    bonds = []
    for part in components(g):
        anchor = min(part)
        rest = sorted(part - {anchor})
        for size in range(len(rest)):
            for chosen in combinations(rest, size):
                side = frozenset((anchor, *chosen))
                other = part - side
                if not (
                    nx.is_connected(g_nx.subgraph(side))
                    and nx.is_connected(g_nx.subgraph(other))
                ):
                    continue
                crossing = [
                    (u, v, m) for u, v, m in g.edges if (u in side) != (v in side)
                ]
                bonds.append(
                    Bond(
                        edges=frozenset(EdgeRef(u, v) for u, v, _ in crossing),
                        side=side,
                        size=sum(m for _, _, m in crossing),
                    )
                )
    return sorted(bonds, key=lambda b: (b.size, b.pairs()))


def is_bond(g: Multigraph, pairs: list[tuple[int, int]]) -> bool:
    '''Removing the pairs adds exactly one component; removing any fewer adds none.'''
    cut = {EdgeRef(u, v) for u, v in pairs}
    if not cut or any(g.mult(e.u, e.v) < 1 for e in cut):
        return False

    def count_without(removed: set[EdgeRef]) -> int:
        kept = tuple(
            (u, v, m) for u, v, m in g.edges if EdgeRef(u, v) not in removed
        )
        return len(components(Multigraph(vertex_count=g.vertex_count, edges=kept)))

    base = len(components(g))
    if count_without(cut) != base + 1:
        return False
    return all(count_without(cut - {e}) == base for e in cut)


def max_bond_size(g: Multigraph) -> int:
    return max((b.size for b in enumerate_bonds(g)), default=0)


def classify(g: Multigraph) -> PKClass:
    return PKClass(p=len(components(g)), k=max_bond_size(g))


def theta_characterization(
    g: Multigraph, max_vertices: int = MAX_MODEL_VERTICES
) -> bool:
    '''Check, component by component, that bonds of size k match θ_k contractions.

    θ_k is connected, so on a disconnected graph the equivalence is stated for
    each component.
    '''
    for part in components(g):
        component, _ = induced_subgraph(g.without_roots(), part)
        sizes = {b.size for b in enumerate_bonds(component)}
        for k in range(1, max(sizes, default=0) + 2):
            has_bond = k in sizes
            contracts = is_contraction(theta(k), component, max_vertices=max_vertices)
            if has_bond != contracts:
                logging.warning(
                    f'Bond/θ mismatch at k={k}: bond={has_bond}, θ={contracts}'
                )
                return False
    return True


def coclique_characterization(
    g: Multigraph, p: int, max_vertices: int = MAX_MODEL_VERTICES
) -> bool:
    '''For q = 1..p, K̄_q is a contraction of g exactly when g has q components.'''
    if p < 1:
        raise ValueError(f'p must be positive, got {p}')
    count = len(components(g))
    g = g.without_roots().without_labels()
    for q in range(1, p + 1):
        if is_contraction(coclique(q), g, max_vertices=max_vertices) != (q == count):
            logging.warning(f'Coclique mismatch at q={q} for {count} components')
            return False
    return True
