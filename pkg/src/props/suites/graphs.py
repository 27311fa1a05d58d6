'''Suites for the multigraph value type and the contraction order.'''

import random

from src.graphs.contraction import (
    CheckOptions,
    brute_force_is_contraction,
    contraction_closure,
    is_contraction,
    verify_model,
)
from src.graphs.io import parse_graph, serialize_graph
from src.graphs.multigraph import (
    EdgeRef,
    Multigraph,
    components,
    contract_edge,
    is_isomorphic,
)
from src.graphs.sampling import (
    exhaustive_corpus,
    permuted,
    random_contraction,
    random_labels,
    random_multigraph,
    random_two_rooted,
)
from src.orders.poset import FinitePoset
from src.props.results import PropertyResult, scaled

LABEL_CHAIN = FinitePoset.from_pairs(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
SMALLER_LABEL = {'b': 'a', 'c': 'b'}


class GraphValuesSuite:
    '''Isomorphism, text round trips and single-edge contraction.'''

    @property
    def name(self) -> str:
        return 'graph-values'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        equivalence = PropertyResult(self.name, 'isomorphism is an equivalence')
        round_trip = PropertyResult(self.name, 'parse inverts serialize')
        shrinking = PropertyResult(
            self.name, 'contraction drops the edge and keeps components'
        )

        for _ in range(scaled(100, budget)):
            g = random_labels(rng, random_multigraph(rng, 6, 10), ['a', 'b'])
            if g.vertex_count >= 2 and rng.random() < 0.5:
                g = g.with_roots(*rng.sample(range(g.vertex_count), 2))
            copy = permuted(rng, g)
            again = permuted(rng, copy)
            other = random_multigraph(rng, 6, 10)
            equivalence.record(
                is_isomorphic(g, g)
                and is_isomorphic(g, copy)
                and is_isomorphic(copy, again)
                and is_isomorphic(g, again)
                and is_isomorphic(g, other) == is_isomorphic(other, g),
                g,
                other,
            )

            round_trip.record(
                parse_graph(serialize_graph(g)) == g
                and parse_graph(serialize_graph(g, 'structured'), 'structured') == g,
                g,
            )

            candidates = [
                (u, v, m)
                for u, v, m in g.edges
                if not (len(g.roots) == 2 and {u, v} == set(g.roots))
            ]
            if candidates:
                u, v, m = rng.choice(candidates)
                contracted = contract_edge(g, EdgeRef(u, v))
                shrinking.record(
                    contracted.edge_sum <= g.edge_sum - m
                    and len(components(contracted)) == len(components(g)),
                    g,
                )

        return [equivalence, round_trip, shrinking]


class OracleEquivalenceSuite:
    '''Model search against the contract-edge-by-edge definition.'''

    @property
    def name(self) -> str:
        return 'oracle-equivalence'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        exhaustive = PropertyResult(
            self.name, 'model search agrees with the contraction closure'
        )
        sampled = PropertyResult(self.name, 'model search agrees with brute force')

        if budget >= 2:
            max_vertices, max_edge_sum = 5, 8
        elif budget >= 1:
            max_vertices, max_edge_sum = 4, 6
        else:
            max_vertices, max_edge_sum = 3, 4
        corpus = exhaustive_corpus(max_vertices, max_edge_sum)
        for g in corpus:
            closure = contraction_closure(g)
            for h in corpus:
                if h.vertex_count > g.vertex_count:
                    continue
                in_closure = any(is_isomorphic(h, c) for c in closure)
                exhaustive.record(is_contraction(h, g) == in_closure, h, g)

        for _ in range(scaled(500, budget)):
            g = random_multigraph(rng, 6, 10)
            if rng.random() < 0.5:
                h, _ = random_contraction(rng, g, rng.randint(0, g.vertex_count - 1))
            else:
                h = random_multigraph(rng, g.vertex_count, 10)
            sampled.record(
                is_contraction(h, g) == brute_force_is_contraction(h, g), h, g
            )

        return [exhaustive, sampled]


class ContractionOrderSuite:
    '''Order axioms and the rooted and labeled variants.'''

    @property
    def name(self) -> str:
        return 'contraction-order'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        axioms = PropertyResult(self.name, 'reflexive and transitive')
        sizes = PropertyResult(self.name, 'contractions have fewer vertices and edges')
        witnesses = PropertyResult(self.name, 'sampled contraction models verify')
        rooted = PropertyResult(self.name, 'rooted contraction implies unrooted')
        relabel = PropertyResult(self.name, 'relabeling downwards keeps the relation')
        labeled = CheckOptions(
            respect_roots=True, respect_labels=True, label_poset=LABEL_CHAIN
        )
        rooted_only = CheckOptions(respect_roots=True)

        for _ in range(scaled(60, budget)):
            g = random_multigraph(rng, 7, 10)
            middle, _ = random_contraction(rng, g, rng.randint(0, 3))
            low, _ = random_contraction(rng, middle, rng.randint(0, 3))
            axioms.record(
                is_contraction(g, g)
                and is_contraction(middle, g)
                and is_contraction(low, middle)
                and is_contraction(low, g),
                low,
                middle,
                g,
            )

            other = random_multigraph(rng, 7, 10)
            if is_contraction(other, g):
                sizes.record(
                    other.vertex_count <= g.vertex_count
                    and other.edge_sum <= g.edge_sum,
                    other,
                    g,
                )

            host = random_labels(
                rng, random_two_rooted(rng, rng.randint(2, 6), 3), ['a', 'b', 'c']
            )
            pattern, model = random_contraction(rng, host, rng.randint(0, 3))
            witnesses.record(verify_model(pattern, host, model, labeled), pattern, host)

            candidate = (
                pattern
                if rng.random() < 0.5
                else random_two_rooted(rng, rng.randint(2, host.vertex_count), 2)
            )
            if is_contraction(candidate, host, rooted_only):
                rooted.record(
                    is_contraction(candidate.without_roots(), host.without_roots()),
                    candidate,
                    host,
                )

            lowered = _lower_one_label(rng, pattern)
            if lowered is not None:
                relabel.record(is_contraction(lowered, host, labeled), lowered, host)

        return [axioms, sizes, witnesses, rooted, relabel]


def _lower_one_label(rng: random.Random, g: Multigraph) -> Multigraph | None:
    '''Replace one label by its predecessor in the chain a < b < c.'''
    choices = [
        (v, label)
        for v in g.vertices
        for label in sorted(g.label(v))
        if label in SMALLER_LABEL
    ]
    if not choices:
        return None
    v, label = rng.choice(choices)
    labels = [g.label(w) for w in g.vertices]
    labels[v] = (labels[v] - {label}) | {SMALLER_LABEL[label]}
    return Multigraph(
        vertex_count=g.vertex_count, edges=g.edges, labels=tuple(labels), roots=g.roots
    )
