'''Suites for bonds, the G_{p,k} classes and the two canonical antichains.'''

import random

from src.graphs.bonds import (
    classify,
    coclique_characterization,
    enumerate_bonds,
    is_bond,
    max_bond_size,
    theta_characterization,
)
from src.graphs.construct import coclique, theta
from src.graphs.contraction import is_contraction
from src.graphs.multigraph import EdgeRef, components, contract_edge
from src.graphs.sampling import permuted, random_connected, random_multigraph
from src.orders.poset import is_antichain
from src.props.results import PropertyResult, scaled

FIXTURE_SIZE = 8


class ThetaCharacterizationSuite:
    '''Bonds of size k against θ_k contractions.'''

    @property
    def name(self) -> str:
        return 'theta-characterization'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        characterization = PropertyResult(
            self.name, 'a bond of size k exists iff θ_k is a contraction'
        )
        largest = PropertyResult(
            self.name, 'largest bond is the largest θ contraction'
        )
        certified = PropertyResult(self.name, 'enumerated bonds are bonds')
        invariant = PropertyResult(self.name, 'class is invariant under renumbering')

        for _ in range(scaled(300, budget)):
            g = random_multigraph(rng, 6, 10)
            characterization.record(theta_characterization(g), g)
            certified.record(
                all(is_bond(g, b.pairs()) for b in enumerate_bonds(g)), g
            )
            invariant.record(classify(g) == classify(permuted(rng, g)), g)

            connected = random_connected(rng, rng.randint(2, 6), rng.randint(0, 4))
            k = max_bond_size(connected)
            largest.record(
                is_contraction(theta(k), connected)
                and not is_contraction(theta(k + 1), connected),
                connected,
            )

        return [characterization, largest, certified, invariant]


class CocliqueCharacterizationSuite:
    '''Component counts against coclique contractions.'''

    @property
    def name(self) -> str:
        return 'coclique-characterization'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        characterization = PropertyResult(
            self.name, 'K̄_q is a contraction iff there are q components'
        )
        preserved = PropertyResult(self.name, 'contraction keeps the component count')

        for _ in range(scaled(300, budget)):
            g = random_multigraph(rng, 6, 10)
            characterization.record(
                coclique_characterization(g, len(components(g)) + 1), g
            )
            if g.edges:
                u, v, _ = rng.choice(g.edges)
                contracted = contract_edge(g, EdgeRef(u, v))
                preserved.record(
                    len(components(contracted)) == len(components(g)), g
                )

        return [characterization, preserved]


class AntichainFixturesSuite:
    '''The first members of both canonical families are antichains.'''

    @property
    def name(self) -> str:
        return 'antichain-fixtures'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        thetas = PropertyResult(self.name, 'θ_1..θ_8 form an antichain')
        cocliques = PropertyResult(self.name, 'K̄_2..K̄_8 form an antichain')
        across = PropertyResult(self.name, 'θ_i and K̄_j are incomparable for j > 1')

        theta_family = [theta(i) for i in range(1, FIXTURE_SIZE + 1)]
        coclique_family = [coclique(j) for j in range(2, FIXTURE_SIZE + 1)]
        thetas.record(is_antichain(theta_family, is_contraction), *theta_family)
        cocliques.record(
            is_antichain(coclique_family, is_contraction), *coclique_family
        )
        for x in theta_family:
            for y in coclique_family:
                across.record(
                    not is_contraction(x, y) and not is_contraction(y, x), x, y
                )

        return [thetas, cocliques, across]
