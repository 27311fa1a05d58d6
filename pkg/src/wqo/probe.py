'''Sampled good-pair search on G_{p,k}, with the canonical antichains as controls.'''

import logging
import random

import pandas as pd

from src.graphs.construct import coclique, theta
from src.graphs.contraction import MAX_MODEL_VERTICES, graph_comparator
from src.graphs.io import serialize_graph
from src.graphs.multigraph import Multigraph
from src.graphs.sampling import random_in_class
from src.orders.poset import find_good_pair

CONTROL_LENGTH = 20

PROBE_COLUMNS = ['family', 'trial', 'length', 'good_pair', 'found', 'sequence']


def _row(
    family: str, trial: int, sequence: list[Multigraph], max_vertices: int
) -> dict:
    pair = find_good_pair(sequence, graph_comparator(max_vertices=max_vertices))
    return {
        'family': family,
        'trial': trial,
        'length': len(sequence),
        'good_pair': f'{pair[0]},{pair[1]}' if pair else None,
        'found': pair is not None,
        'sequence': None,
    }


def wqo_probe(
    p: int,
    k: int,
    length: int,
    trials: int,
    seed: int = 7,
    max_edges: int = 8,
    max_vertices: int = MAX_MODEL_VERTICES,
) -> pd.DataFrame:
    '''One row per trial with the first good pair found, if any.

    Sampled rows that miss carry their sequence serialized as MG text blocks
    separated by blank lines. The last two rows are the θ and K̄ controls,
    which are expected to have no good pair.
    '''
    rng = random.Random(f'{seed}:probe:{p}:{k}')
    family = f'G_{{{p},{k}}}'
    rows = []
    for trial in range(1, trials + 1):
        sequence = [random_in_class(rng, p, k, max_edges) for _ in range(length)]
        row = _row(family, trial, sequence, max_vertices)
        if not row['found']:
            row['sequence'] = '\n\n'.join(serialize_graph(g) for g in sequence)
        rows.append(row)

    control_length = min(length, CONTROL_LENGTH)
    thetas = [theta(i) for i in range(1, control_length + 1)]
    cocliques = [coclique(i) for i in range(1, control_length + 1)]
    rows.append(_row('theta-control', 1, thetas, max_vertices))
    rows.append(_row('coclique-control', 1, cocliques, max_vertices))

    report = pd.DataFrame(rows, columns=PROBE_COLUMNS)
    sampled = report[report['family'] == family]
    logging.info(
        f'Probe {family}: good pair in {int(sampled["found"].sum())}/{trials} trials'
    )
    return report


def probe_passed(report: pd.DataFrame) -> bool:
    '''Good pairs in all but one trial in twenty, and none in the controls.'''
    controls = report['family'].isin(['theta-control', 'coclique-control'])
    sampled = report[~controls]
    trials = len(sampled)
    found = int(sampled['found'].sum())
    return found >= trials - trials // 20 and not report[controls]['found'].any()
