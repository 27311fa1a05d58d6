'''Finite posets and the order combinators built on top of them.

A comparator is any callable `(x, y) -> bool` deciding `x <= y`. Finite
posets, the product and union combinators, the Higman lifts to sequences and
sets, and the graph contraction order all share that shape.
'''

import logging
from collections.abc import Callable, Collection, Iterable, Sequence
from dataclasses import dataclass
from typing import Any, Protocol

import networkx as nx
from networkx.algorithms import bipartite

from src.utils.parsing import expect_arity, iter_directives


class Comparator(Protocol):
    def __call__(self, x: Any, y: Any, /) -> bool: ...


def natural_order(x: Any, y: Any) -> bool:
    return x <= y


@dataclass(frozen=True)
class FinitePoset:
    '''An explicit finite order; `relation` is reflexive and transitively closed.'''

    elements: frozenset[str]
    relation: frozenset[tuple[str, str]]

    @classmethod
    def from_pairs(
        cls, elements: Iterable[str], pairs: Iterable[tuple[str, str]] = ()
    ) -> 'FinitePoset':
        '''Close the given pairs reflexively and transitively.

        Raises:
            ValueError: If a pair uses an unknown element or the closure relates
                two distinct elements both ways.
        '''
        digraph = nx.DiGraph()
        digraph.add_nodes_from(elements)
        for a, b in pairs:
            for x in (a, b):
                if x not in digraph:
                    raise ValueError(f'unknown poset element {x!r}')
            digraph.add_edge(a, b)

        closure = nx.transitive_closure(digraph, reflexive=True)
        relation = frozenset(closure.edges())
        for a, b in relation:
            if a != b and (b, a) in relation:
                raise ValueError(f'antisymmetry violated: {a!r} and {b!r}')
        return cls(elements=frozenset(digraph.nodes), relation=relation)

    def leq(self, a: str, b: str) -> bool:
        for x in (a, b):
            if x not in self.elements:
                raise ValueError(f'unknown poset element {x!r}')
        return (a, b) in self.relation

    def __call__(self, a: str, b: str) -> bool:
        return self.leq(a, b)


def parse_poset(text: str) -> FinitePoset:
    '''Read `elem <id>` and `le <a> <b>` lines.'''
    elements: list[str] = []
    pairs: list[tuple[str, str]] = []
    for tokens in iter_directives(text):
        keyword = tokens[0]
        if keyword.text == 'elem':
            expect_arity(tokens, 2)
            elements.append(tokens[1].text)
        elif keyword.text == 'le':
            expect_arity(tokens, 3)
            for token in tokens[1:]:
                if token.text not in elements:
                    raise token.error(f'undeclared element {token.text!r}')
            pairs.append((tokens[1].text, tokens[2].text))
        else:
            raise keyword.error(f'unknown directive {keyword.text!r}')
    return FinitePoset.from_pairs(elements, pairs)


def product_order(a: Comparator, b: Comparator) -> Comparator:
    '''Componentwise order on pairs.'''

    def leq(x: Any, y: Any) -> bool:
        for operand in (x, y):
            if not isinstance(operand, tuple) or len(operand) != 2:
                raise ValueError(f'product order compares pairs, got {operand!r}')
        return a(x[0], y[0]) and b(x[1], y[1])

    return leq


UNION_TAGS = ('a', 'b')


def union_order(a: Comparator, b: Comparator) -> Comparator:
    '''Order on elements tagged ('a', x) or ('b', y); tags never compare across.'''
    orders = dict(zip(UNION_TAGS, (a, b)))

    def leq(x: Any, y: Any) -> bool:
        for operand in (x, y):
            if (
                not isinstance(operand, tuple)
                or len(operand) != 2
                or operand[0] not in orders
            ):
                raise ValueError(f'union order needs a tagged element, got {operand!r}')
        if x[0] != y[0]:
            return False
        return orders[x[0]](x[1], y[1])

    return leq


def star_order_seq(r: Sequence[Any], s: Sequence[Any], base: Comparator) -> bool:
    '''Whether r embeds into s by a strictly increasing dominating map.

    Greedy: each r_i goes to the earliest dominating s_j after the previous match.
    '''
    j = 0
    for x in r:
        while j < len(s) and not base(x, s[j]):
            j += 1
        if j == len(s):
            return False
        j += 1
    return True


def star_order_set(b: Collection[Any], c: Collection[Any], base: Comparator) -> bool:
    '''Whether some injection maps every element of b to a dominating element of c.'''
    left, right = list(b), list(c)
    if not left:
        return True
    if len(left) > len(right):
        return False

    graph = nx.Graph()
    top = [('b', i) for i in range(len(left))]
    graph.add_nodes_from(top)
    graph.add_nodes_from(('c', j) for j in range(len(right)))
    for i, x in enumerate(left):
        for j, y in enumerate(right):
            if base(x, y):
                graph.add_edge(('b', i), ('c', j))

    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    return all(node in matching for node in top)


def find_good_pair(
    seq: Sequence[Any], cmp: Comparator
) -> tuple[int, int] | None:
    '''Least (i, j), 1-based with i < j, such that seq[i] <= seq[j].'''
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if cmp(seq[i], seq[j]):
                logging.debug(f'Good pair at positions {i + 1}, {j + 1}')
                return i + 1, j + 1
    return None


def is_antichain(items: Sequence[Any], cmp: Comparator) -> bool:
    '''No two items at distinct positions are comparable.'''
    for i, x in enumerate(items):
        for j, y in enumerate(items):
            if i != j and cmp(x, y):
                return False
    return True


def lift(base: Comparator, lifter: Callable[..., bool]) -> Comparator:
    '''Bind a base order into `star_order_seq` or `star_order_set`.'''

    def leq(x: Any, y: Any) -> bool:
        return lifter(x, y, base)

    return leq
