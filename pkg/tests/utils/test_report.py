import json

import pandas as pd

from src.utils.report import document_to_text, frame_to_text


def make_report(**columns) -> pd.DataFrame:
    """Two-row report with the given extra columns."""
    data = {'suite': ['a', 'b'], 'passed': [True, False]}
    data.update(columns)
    return pd.DataFrame(data)


def test_frame_to_text_renders_table_without_index():
    """Text mode prints the table without the index column."""
    text = frame_to_text(make_report())

    assert text.splitlines()[0].split() == ['suite', 'passed']
    assert len(text.splitlines()) == 3


def test_frame_to_text_empty_frame():
    """Empty reports say so."""
    assert frame_to_text(pd.DataFrame(columns=['suite'])) == '(no rows)'


def test_frame_to_text_moves_detail_column_below_table():
    """Non-empty details are printed as numbered blocks."""
    df = make_report(counterexample=[None, 'n=2\ne 0 1 1'])

    text = frame_to_text(df, detail_column='counterexample')

    table, block = text.split('\n\n')
    assert 'counterexample' not in table
    assert block == '# row 2\nn=2\ne 0 1 1'


def test_frame_to_text_json_records():
    """JSON mode keeps every column and turns NaN into null."""
    df = make_report(score=[1.5, float('nan')])

    records = json.loads(frame_to_text(df, as_json=True, detail_column='score'))

    assert records[0] == {'suite': 'a', 'passed': True, 'score': 1.5}
    assert records[1]['score'] is None


def test_document_to_text_sorts_keys():
    """Structured output is stable."""
    assert document_to_text({'b': 1, 'a': [2]}) == '{"a": [2], "b": 1}'
