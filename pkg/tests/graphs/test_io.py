import json

import pytest

from src.graphs.construct import house, theta
from src.graphs.contraction import Model
from src.graphs.decomposition import tutte_decomposition
from src.graphs.io import (
    load_graph,
    model_document,
    parse_decomposition,
    parse_graph,
    parse_model,
    serialize_decomposition,
    serialize_graph,
)
from src.utils.errors import GraphFormatError
from tests.conftest import make_graph, make_rooted_house


def test_parse_graph_reads_all_directives():
    """Header, edges, roots and labels are read; comments are skipped."""
    text = """# a path with a double edge
n=3
e 0 1 2
e 1 2 1
root 2
root 0
label 1 a,b
"""
    g = parse_graph(text)

    assert g == make_graph(
        3, [(0, 1, 2), (1, 2, 1)], roots=(2, 0), labels={1: {'a', 'b'}}
    )


def test_serialize_graph_mg_text_layout():
    """Edges, then roots in order, then labels; no trailing newline."""
    text = serialize_graph(make_rooted_house())

    assert text.splitlines()[0] == 'n=5'
    assert text.endswith('root 0\nroot 3')
    assert 'e 0 3 1' in text


@pytest.mark.parametrize(
    'text, line, column, match',
    [
        ('e 0 1 1', 1, 1, 'n=<N>'),
        ('n=2\ne 0 1 1\ne 1 0 2', 3, 1, 'duplicate pair'),
        ('n=2\ne 1 1 1', 2, 5, 'loop'),
        ('n=2\ne 0 1 0', 2, 7, 'at least 1'),
        ('n=3\nroot 0\nroot 1\nroot 2', 4, 1, 'at most two roots'),
        ('n=2\nroot 1\nroot 1', 3, 6, 'already a root'),
        ('n=2\nlabel 0 a\nlabel 0 b', 3, 1, 'labeled twice'),
        ('n=2\nedge 0 1 1', 2, 1, 'unknown directive'),
        ('n=2\ne 0 5 1', 2, 5, 'outside'),
        ('n=x', 1, 3, 'integer'),
    ],
)
def test_parse_graph_reports_position(text, line, column, match):
    """Malformed MG text names the offending line and column."""
    with pytest.raises(GraphFormatError, match=match) as exc_info:
        parse_graph(text)

    assert exc_info.value.line == line
    assert exc_info.value.column == column


def test_structured_format_round_trips():
    """The JSON document carries the same content as MG text."""
    g = make_graph(3, [(0, 1, 2)], roots=(1, 2), labels={2: {'x'}})

    document = json.loads(serialize_graph(g, 'structured'))

    assert document == {
        'n': 3,
        'edges': [[0, 1, 2]],
        'roots': [1, 2],
        'labels': {'2': ['x']},
    }
    assert parse_graph(serialize_graph(g, 'structured'), 'structured') == g


def test_parse_structured_rejects_bad_json():
    """JSON syntax errors keep their position."""
    with pytest.raises(GraphFormatError, match='line 1'):
        parse_graph('{"n": ', 'structured')


@pytest.mark.parametrize(
    'document, match',
    [
        ('{"n": 3, "edges": [[0, 1, 1], [1, 0, 2]]}', 'duplicate pair 0 1'),
        ('{"n": 2, "edges": [[0, 1, 0]]}', 'at least 1, got 0'),
        ('{"n": 2, "edges": [[0, 1]]}', 'line 1'),
    ],
)
def test_parse_structured_rejects_malformed_edges(document, match):
    """Repeated pairs and empty multiplicities are errors, as in MG text."""
    with pytest.raises(GraphFormatError, match=match):
        parse_graph(document, 'structured')


def test_dot_export_marks_roots_and_repeats_parallel_edges():
    """Roots get shapes and each parallel copy is its own line."""
    dot = serialize_graph(theta(2).with_roots(0, 1), 'dot')

    assert '0 [shape=doublecircle]' in dot
    assert '1 [shape=box]' in dot
    assert dot.count('0 -- 1') == 2


def test_load_graph_picks_format_from_suffix(tmp_path):
    """.json files are structured, anything else is MG text."""
    g = house()
    (tmp_path / 'house.json').write_text(serialize_graph(g, 'structured'))
    (tmp_path / 'house.mg').write_text(serialize_graph(g))

    assert load_graph(tmp_path / 'house.json') == g
    assert load_graph(tmp_path / 'house.mg') == g


def test_model_document_round_trips():
    """Branch sets survive the JSON document."""
    model = Model({0: frozenset({0, 2}), 1: frozenset({1})})

    assert parse_model(json.dumps(model_document(model))) == model


def test_parse_model_rejects_missing_branch_sets():
    """A document without branch_sets is malformed."""
    with pytest.raises(GraphFormatError, match='malformed'):
        parse_model('{"sets": {}}')


def test_decomposition_text_round_trips():
    """serialize_decomposition output parses back to the same tree."""
    g = house()
    d = tutte_decomposition(g)

    text = serialize_decomposition(g, d)

    assert parse_decomposition(text) == d
    assert 'torso 0: cycle' in text


def test_parse_decomposition_rejects_undeclared_nodes():
    """Tree edges may only join declared bags."""
    with pytest.raises(GraphFormatError, match='undeclared node 1'):
        parse_decomposition('edge 0 1\nbag 0: 0 1 2')
