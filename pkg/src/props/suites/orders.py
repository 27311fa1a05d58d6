'''Suites for the order combinators and the Higman lifts.'''

import random
from itertools import combinations, permutations

from src.orders.poset import (
    FinitePoset,
    natural_order,
    product_order,
    star_order_seq,
    star_order_set,
    union_order,
)
from src.props.results import PropertyResult, scaled


def random_poset(rng: random.Random, size: int) -> FinitePoset:
    '''Random pairs i < j over string elements, closed into an order.'''
    elements = [str(i) for i in range(size)]
    pairs = [
        (elements[i], elements[j])
        for i, j in combinations(range(size), 2)
        if rng.random() < 0.3
    ]
    return FinitePoset.from_pairs(elements, pairs)


def _greedy_matches_search(r: list[int], s: list[int]) -> bool:
    expected = any(
        all(x <= s[j] for x, j in zip(r, positions))
        for positions in combinations(range(len(s)), len(r))
    )
    return star_order_seq(r, s, natural_order) == expected


def _matching_matches_search(b: list[str], c: list[str], base: FinitePoset) -> bool:
    expected = any(
        all(base(x, y) for x, y in zip(b, image))
        for image in permutations(c, len(b))
    )
    return star_order_set(b, c, base) == expected


class PosetLiftsSuite:
    '''Sequence and set lifts, plus the product and union combinators.'''

    @property
    def name(self) -> str:
        return 'poset-lifts'

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]:
        product = PropertyResult(
            self.name, 'sequence lift on equal lengths is the product order'
        )
        monotone = PropertyResult(self.name, 'sequence lift survives insertions')
        greedy = PropertyResult(self.name, 'greedy sequence lift matches search')
        matching = PropertyResult(self.name, 'set lift matches injection search')
        combinators = PropertyResult(
            self.name, 'product and union orders are partial orders'
        )

        for _ in range(scaled(200, budget)):
            length = rng.randint(0, 5)
            r = [rng.randint(0, 4) for _ in range(length)]
            s = [rng.randint(0, 4) for _ in range(length)]
            product.record(
                star_order_seq(r, s, natural_order)
                == all(x <= y for x, y in zip(r, s))
            )

            if star_order_seq(r, s, natural_order):
                longer = list(s)
                for _ in range(rng.randint(1, 3)):
                    longer.insert(rng.randint(0, len(longer)), rng.randint(0, 4))
                monotone.record(star_order_seq(r, longer, natural_order))

            shorter = [rng.randint(0, 4) for _ in range(rng.randint(0, 4))]
            wider = [rng.randint(0, 4) for _ in range(rng.randint(0, 6))]
            greedy.record(_greedy_matches_search(shorter, wider))

            base = random_poset(rng, 5)
            elements = sorted(base.elements)
            b = [rng.choice(elements) for _ in range(rng.randint(0, 4))]
            c = [rng.choice(elements) for _ in range(rng.randint(0, 5))]
            matching.record(_matching_matches_search(b, c, base))

            combinators.record(self._combinators_are_orders(rng, base))

        return [product, monotone, greedy, matching, combinators]

    def _combinators_are_orders(self, rng: random.Random, base: FinitePoset) -> bool:
        elements = sorted(base.elements)
        pairs = product_order(base, natural_order)
        tagged = union_order(base, natural_order)

        def pick_pair() -> tuple[str, int]:
            return rng.choice(elements), rng.randint(0, 3)

        def pick_tagged() -> tuple[str, object]:
            if rng.random() < 0.5:
                return 'a', rng.choice(elements)
            return 'b', rng.randint(0, 3)

        for leq, pick in ((pairs, pick_pair), (tagged, pick_tagged)):
            x, y, z = pick(), pick(), pick()
            if not leq(x, x):
                return False
            if leq(x, y) and leq(y, x) and x != y:
                return False
            if leq(x, y) and leq(y, z) and not leq(x, z):
                return False
        return True
