import pandas as pd
import pytest

from src.graphs.io import parse_graph
from src.wqo.probe import PROBE_COLUMNS, probe_passed, wqo_probe


def _report(found: list[bool], controls: tuple[bool, bool] = (False, False)):
    rows = [
        {'family': 'G_{1,2}', 'trial': i + 1, 'found': hit}
        for i, hit in enumerate(found)
    ]
    rows.append({'family': 'theta-control', 'trial': 1, 'found': controls[0]})
    rows.append({'family': 'coclique-control', 'trial': 1, 'found': controls[1]})
    return pd.DataFrame(rows)


@pytest.fixture(scope='module')
def small_report():
    return wqo_probe(1, 2, 6, 3, seed=11, max_edges=5)


def test_wqo_probe_report_shape(small_report):
    """One row per trial plus the two control rows."""
    assert list(small_report.columns) == PROBE_COLUMNS
    assert len(small_report) == 5
    assert list(small_report['family'][:3]) == ['G_{1,2}'] * 3
    assert list(small_report['family'][3:]) == ['theta-control', 'coclique-control']


def test_wqo_probe_controls_find_nothing(small_report):
    """θ_1..θ_n and K̄_1..K̄_n are antichains."""
    controls = small_report[small_report['family'].str.endswith('-control')]

    assert not controls['found'].any()
    assert list(controls['length']) == [6, 6]


def test_wqo_probe_rows_are_consistent(small_report):
    """Hits carry a pair, misses carry their sequence."""
    for _, row in small_report.iloc[:3].iterrows():
        if row['found']:
            i, j = map(int, row['good_pair'].split(','))
            assert 1 <= i < j <= 6
            assert row['sequence'] is None
        else:
            blocks = row['sequence'].split('\n\n')
            assert len(blocks) == 6
            assert all(parse_graph(block).vertex_count >= 1 for block in blocks)


def test_wqo_probe_is_reproducible(small_report):
    """The same seed samples the same sequences."""
    pd.testing.assert_frame_equal(
        wqo_probe(1, 2, 6, 3, seed=11, max_edges=5), small_report
    )


@pytest.mark.parametrize(
    'found, controls, expected',
    [
        ([True] * 20, (False, False), True),
        ([True] * 19 + [False], (False, False), True),
        ([True] * 18 + [False] * 2, (False, False), False),
        ([True] * 20, (True, False), False),
        ([True] * 3, (False, False), True),
        ([True, True, False], (False, False), False),
    ],
)
def test_probe_passed(found, controls, expected):
    """All but one trial in twenty must hit, and no control may."""
    assert probe_passed(_report(found, controls)) is expected
