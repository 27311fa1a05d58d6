'''Property-suite runner.

Each suite owns one area of the toolkit and checks its invariants on seeded
random or exhaustive inputs. A suite gets its own `random.Random` seeded from
the run seed and the suite name, so a single suite replays identically whether
it runs alone or with the others.
'''

import logging
import random

import pandas as pd

from src.props.results import PropertyResult
from src.props.suites import SUITES, PropertySuite

REPORT_COLUMNS = ['suite', 'property', 'trials', 'failures', 'passed', 'counterexample']


def get_suite(name: str) -> PropertySuite:
    '''Look up a suite by name.

    Raises:
        ValueError: If no suite has that name.
    '''
    for suite in SUITES:
        if suite.name == name:
            return suite
    raise ValueError(
        f'unknown suite {name!r}; expected one of '
        + ', '.join(suite.name for suite in SUITES)
    )


def run_props(
    suite: str | None = None, seed: int = 7, budget: float = 1.0
) -> pd.DataFrame:
    '''Run one suite, or all of them, and return one report row per property.

    Args:
        suite: Suite name; None runs every suite in order.
        seed: Run seed; the same seed gives the same report.
        budget: Multiplier for every suite's trial counts.

    Returns:
        DataFrame with columns suite, property, trials, failures, passed and
        counterexample (MG text of the first failing input, or None).
    '''
    if budget <= 0:
        raise ValueError(f'budget must be positive, got {budget}')
    selected = [get_suite(suite)] if suite is not None else SUITES

    results: list[PropertyResult] = []
    for current in selected:
        rng = random.Random(f'{seed}:{current.name}')
        for result in current.run(rng, budget):
            status = 'pass' if result.passed else 'FAIL'
            logging.info(
                f'{current.name} / {result.prop}: {status} '
                f'({result.trials - result.failures}/{result.trials})'
            )
            results.append(result)

    return pd.DataFrame(
        [
            {
                'suite': r.suite,
                'property': r.prop,
                'trials': r.trials,
                'failures': r.failures,
                'passed': r.passed,
                'counterexample': r.counterexample,
            }
            for r in results
        ],
        columns=REPORT_COLUMNS,
    )
