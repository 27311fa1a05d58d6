'''Suites for the attach operation, the cycle construction and root-edge stripping.'''

import random

from src.graphs.construct import (
    Orientation,
    attach,
    build_on_backbone,
    cycle_construction,
    replace_root_edge,
    strip_root_edges,
)
from src.graphs.contraction import CheckOptions, is_contraction
from src.graphs.multigraph import Multigraph, is_isomorphic
from src.graphs.sampling import (
    random_connected,
    random_contraction,
    random_labels,
    random_two_rooted,
)
from src.orders.poset import FinitePoset
from src.props.results import PropertyResult, scaled

LABELS = ['a', 'b', 'c']
LABEL_CHAIN = FinitePoset.from_pairs(LABELS, [('a', 'b'), ('b', 'c')])
ROOTED = CheckOptions(respect_roots=True)
ROOTED_LABELED = CheckOptions(
    respect_roots=True, respect_labels=True, label_poset=LABEL_CHAIN
)


def _comparable_pair(
    rng: random.Random, max_vertices: int, labeled: bool = False
) -> tuple[Multigraph, Multigraph, dict[int, frozenset[int]]]:
    '''A 2-rooted host, a rooted contraction of it and the witnessing branch sets.'''
    host = random_two_rooted(rng, rng.randint(2, max_vertices), rng.randint(0, 2))
    if labeled:
        host = random_labels(rng, host, LABELS, density=0.3)
    pattern, model = random_contraction(rng, host, rng.randint(0, max_vertices - 2))
    return pattern, host, model.branch_sets


class AttachMonotoneSuite:
    '''Attaching comparable pieces at corresponding vertices keeps the order.'''

    @property
    def name(self) -> str:
        return 'attach-monotone'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        monotone = PropertyResult(
            self.name, 'attach is monotone with roots and labels respected'
        )
        backbone = PropertyResult(
            self.name, 'comparable attachments on one backbone stay comparable'
        )
        reordered = PropertyResult(
            self.name, 'attachment order does not change the result'
        )

        for _ in range(scaled(200, budget)):
            g, g_host, branch_sets = _comparable_pair(rng, 5, labeled=True)
            h, h_host, _ = _comparable_pair(rng, 4, labeled=True)
            u, v = rng.sample(range(g.vertex_count), 2)
            u_host = rng.choice(sorted(branch_sets[u]))
            v_host = rng.choice(sorted(branch_sets[v]))
            small = attach(g, u, v, h)
            large = attach(g_host, u_host, v_host, h_host)
            monotone.record(
                is_contraction(small, large, ROOTED_LABELED), small, large
            )

        for _ in range(scaled(100, budget)):
            j = random_connected(rng, rng.randint(2, 4), rng.randint(0, 2))
            slots = [tuple(rng.sample(range(j.vertex_count), 2)) for _ in range(2)]
            pieces = [_comparable_pair(rng, 3) for _ in slots]
            small = build_on_backbone(
                j, [(u, v, h) for (u, v), (h, _, _) in zip(slots, pieces)]
            )
            large = build_on_backbone(
                j, [(u, v, host) for (u, v), (_, host, _) in zip(slots, pieces)]
            )
            backbone.record(is_contraction(small, large), small, large)

            attachments = [(u, v, host) for (u, v), (_, host, _) in zip(slots, pieces)]
            reversed_build = build_on_backbone(j, attachments[::-1])
            reordered.record(
                is_isomorphic(large, reversed_build), large, reversed_build
            )

        return [monotone, backbone, reordered]


class CycleMonotoneSuite:
    '''Cycle constructions over dominated piece sequences.'''

    @property
    def name(self) -> str:
        return 'cycle-monotone'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        monotone = PropertyResult(
            self.name, 'dominated piece sequences give contractions'
        )

        for _ in range(scaled(100, budget)):
            size = rng.randint(2, 3)
            hosts = [
                random_two_rooted(rng, rng.randint(2, 3), rng.randint(0, 1))
                for _ in range(size)
            ]
            orientations = [rng.choice(list(Orientation)) for _ in range(size)]
            kept = sorted(rng.sample(range(size), rng.randint(2, size)))
            pieces = [
                random_contraction(rng, hosts[i], rng.randint(0, 1))[0] for i in kept
            ]

            small = cycle_construction(pieces, [orientations[i] for i in kept])
            large = cycle_construction(hosts, orientations)
            monotone.record(is_contraction(small, large), small, large)

        return [monotone]


class StripRootEdgesSuite:
    '''Root-edge stripping against the rooted contraction order.'''

    @property
    def name(self) -> str:
        return 'strip-root-edges'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        equivalence = PropertyResult(
            self.name, 'stripping root edges preserves the rooted order both ways'
        )

        for _ in range(scaled(100, budget)):
            g = random_two_rooted(rng, rng.randint(2, 5), rng.randint(0, 3), True)
            if rng.random() < 0.5:
                h, _ = random_contraction(rng, g, rng.randint(0, 3))
            else:
                h = random_two_rooted(rng, rng.randint(2, g.vertex_count), 2)
            h = replace_root_edge(h, g.mult(*g.roots))
            before = is_contraction(h, g, ROOTED)
            after = is_contraction(strip_root_edges(h), strip_root_edges(g), ROOTED)
            equivalence.record(before == after, h, g)

        return [equivalence]
