'''Suites for symbolic antichains, closed families and the sampled wqo probe.'''

import random

from src.graphs.bonds import classify, enumerate_bonds
from src.graphs.construct import coclique, theta
from src.graphs.contraction import contraction_closure, is_contraction
from src.graphs.multigraph import Multigraph, is_isomorphic
from src.graphs.sampling import random_connected, random_in_class, random_multigraph
from src.props.results import PropertyResult, scaled
from src.wqo.antichains import (
    K1,
    SymbolicAntichain,
    SymbolicFamily,
    canonical_member,
    closure,
    comparable_with_theta,
    down_set,
    has_infinite_antichain,
    is_canonical,
    is_fundamental,
    is_valid_antichain,
    meets_infinitely,
    wqo_witness,
)
from src.wqo.probe import probe_passed, wqo_probe

BOTH_FAMILIES = SymbolicAntichain(coclique_excluded=frozenset({1}))
THETA_ONLY = SymbolicAntichain(coclique_all_absent=True)
THINNED = SymbolicAntichain(
    theta_excluded=frozenset({1, 2}), coclique_excluded=frozenset({1})
)
COCLIQUE_ONLY = SymbolicAntichain(theta_all_absent=True)


def _random_exclusions(rng: random.Random) -> frozenset[int]:
    return frozenset(i for i in range(1, 6) if rng.random() < 0.3)


class CanonicalAntichainsSuite:
    '''Canonicity, fundamentality and the closed-family decisions.'''

    @property
    def name(self) -> str:
        return 'canonical-antichains'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        fixtures = PropertyResult(self.name, 'fixture antichains classify as expected')
        fundamental = PropertyResult(self.name, 'canonical antichains are fundamental')
        comparability = PropertyResult(
            self.name, 'θ comparability of a connected graph is its bond sizes'
        )
        meets_iff_bad = PropertyResult(
            self.name, 'closed families meet the antichains infinitely iff not wqo'
        )
        downward_closed = PropertyResult(
            self.name, 'closures hold every contraction of their members'
        )
        witnesses = PropertyResult(self.name, 'wqo witnesses bound every member')
        strictly_below = PropertyResult(self.name, 'down-sets lie strictly below')

        fixtures.record(
            is_canonical(BOTH_FAMILIES)
            and not is_canonical(THETA_ONLY)
            and is_canonical(THINNED)
            and is_fundamental(BOTH_FAMILIES)
            and is_fundamental(THINNED)
            and len(down_set(BOTH_FAMILIES)) == 1
            and is_isomorphic(down_set(BOTH_FAMILIES)[0], K1)
            and down_set(COCLIQUE_ONLY) == []
        )

        for _ in range(scaled(20, budget)):
            candidate = SymbolicAntichain(
                theta_excluded=_random_exclusions(rng),
                coclique_excluded=_random_exclusions(rng) | {1},
                theta_all_absent=rng.random() < 0.2,
                coclique_all_absent=rng.random() < 0.2,
            )
            if is_valid_antichain(candidate) and is_canonical(candidate):
                fundamental.record(is_fundamental(candidate))

        for _ in range(scaled(100, budget)):
            g = random_connected(rng, rng.randint(2, 6), rng.randint(0, 3))
            if canonical_member(g) is not None:
                continue
            sizes = {b.size for b in enumerate_bonds(g)}
            comparability.record(comparable_with_theta(g).indices == sizes, g)

        for _ in range(scaled(50, budget)):
            members = tuple(
                random_multigraph(rng, 4, 5) for _ in range(rng.randint(0, 2))
            )
            family = closure(
                SymbolicFamily(
                    members=members,
                    theta_tail=rng.random() < 0.3,
                    coclique_tail=rng.random() < 0.3,
                )
            )
            antichain = _random_antichain(rng)
            meets_iff_bad.record(
                meets_infinitely(family, antichain)
                == (_window_hits(family, antichain) > 0),
                *members,
            )
            meets_iff_bad.record(
                has_infinite_antichain(family)
                == (_window_hits(family, BOTH_FAMILIES) > 0),
                *members,
            )
            downward_closed.record(_is_downward_closed(family), *members)

            witness = wqo_witness(family)
            if witness is not None:
                p, k = witness
                witnesses.record(
                    all(_class_admits(g, p, k) for g in family.members), *members
                )

            extra = random_connected(rng, rng.randint(2, 4), rng.randint(0, 2))
            if canonical_member(extra) is None:
                isolated = SymbolicAntichain(
                    theta_all_absent=True, coclique_all_absent=True, extra=(extra,)
                )
                below = down_set(isolated)
                strictly_below.record(
                    all(
                        is_contraction(y, extra) and not is_isomorphic(y, extra)
                        for y in below
                    ),
                    extra,
                )

        return [
            fixtures,
            fundamental,
            comparability,
            meets_iff_bad,
            downward_closed,
            witnesses,
            strictly_below,
        ]


def _class_admits(g: Multigraph, p: int, k: int) -> bool:
    return classify(g).admits(p, k)


def _random_antichain(rng: random.Random) -> SymbolicAntichain:
    return SymbolicAntichain(
        theta_excluded=_random_exclusions(rng),
        coclique_excluded=_random_exclusions(rng),
        theta_all_absent=rng.random() < 0.3,
        coclique_all_absent=rng.random() < 0.3,
    )


def _family_contains(family: SymbolicFamily, g: Multigraph) -> bool:
    if any(is_isomorphic(g, m) for m in family.members):
        return True
    member = canonical_member(g)
    if member is None:
        return False
    kind, _ = member
    return family.theta_tail if kind == 'theta' else family.coclique_tail


def _window_hits(family: SymbolicFamily, a: SymbolicAntichain, width: int = 6) -> int:
    '''Members of a found in family among indices past every finite member.

    The window starts above every exclusion and every finite member's size, so
    a hit there can only come from a tail meeting a cofinite part of a.
    '''
    start = 1 + max(
        [*a.theta_excluded, *a.coclique_excluded]
        + [max(g.vertex_count, g.edge_sum) for g in family.members],
        default=0,
    )
    hits = 0
    for i in range(start, start + width):
        if a.includes_theta(i) and _family_contains(family, theta(i)):
            hits += 1
        if a.includes_coclique(i) and _family_contains(family, coclique(i)):
            hits += 1
    return hits


def _is_downward_closed(family: SymbolicFamily) -> bool:
    return all(
        _family_contains(family, c)
        for g in family.members
        for c in contraction_closure(g)
    )


class WqoProbeSuite:
    '''Good pairs show up in G_{1,3} samples and never in the canonical families.'''

    @property
    def name(self) -> str:
        return 'wqo-probe'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        sampled = PropertyResult(self.name, 'sampled G_{1,3} sequences have good pairs')
        controls = PropertyResult(self.name, 'canonical families have no good pair')
        in_class = PropertyResult(self.name, 'the class sampler stays in its class')

        trials = scaled(20, budget)
        length = 50 if budget >= 1 else 20
        report = wqo_probe(1, 3, length, trials, seed=rng.randint(0, 10**6))
        sampled.record(probe_passed(report))
        control_rows = report[report['family'].str.endswith('-control')]
        controls.record(not control_rows['found'].any())

        for _ in range(scaled(100, budget)):
            g = random_in_class(rng, 2, 2, 8)
            in_class.record(_class_admits(g, 2, 2), g)

        return [sampled, controls, in_class]
