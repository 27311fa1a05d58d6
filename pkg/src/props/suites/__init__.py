'''Property suites, one class per area of the toolkit.'''

import random
from typing import Protocol

from src.props.results import PropertyResult
from src.props.suites.bonds import (
    AntichainFixturesSuite,
    CocliqueCharacterizationSuite,
    ThetaCharacterizationSuite,
)
from src.props.suites.construct import (
    AttachMonotoneSuite,
    CycleMonotoneSuite,
    StripRootEdgesSuite,
)
from src.props.suites.decomposition import (
    TorsoReassemblySuite,
    TutteValidatorSuite,
    TwoConnectedSuite,
)
from src.props.suites.graphs import (
    ContractionOrderSuite,
    GraphValuesSuite,
    OracleEquivalenceSuite,
)
from src.props.suites.orders import PosetLiftsSuite
from src.props.suites.wqo import CanonicalAntichainsSuite, WqoProbeSuite


class PropertySuite(Protocol):
    @property
    def name(self) -> str: ...

    def run(self, rng: random.Random, budget: float) -> list[PropertyResult]: ...


SUITES: list[PropertySuite] = [
    GraphValuesSuite(),
    PosetLiftsSuite(),
    OracleEquivalenceSuite(),
    ContractionOrderSuite(),
    ThetaCharacterizationSuite(),
    CocliqueCharacterizationSuite(),
    AntichainFixturesSuite(),
    AttachMonotoneSuite(),
    CycleMonotoneSuite(),
    StripRootEdgesSuite(),
    TwoConnectedSuite(),
    TutteValidatorSuite(),
    TorsoReassemblySuite(),
    CanonicalAntichainsSuite(),
    WqoProbeSuite(),
]

__all__ = ['SUITES', 'PropertySuite']
