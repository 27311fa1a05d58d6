'''Text formats for multigraphs, models and tree decompositions.

MG text (line oriented, `#` comments allowed)::

    n=5
    e 0 1 1
    e 0 3 2
    root 0
    root 3
    label 0 a,b

Every unordered pair is declared at most once. `root` lines give (r, s) in
order. The structured format is the same content as a JSON document with the
fields n, edges, roots and labels.
'''

import json
from pathlib import Path
from typing import Any, Literal

from src.graphs.contraction import Model
from src.graphs.decomposition import TreeDecomposition, torso_kind
from src.graphs.multigraph import Multigraph
from src.utils.errors import GraphFormatError
from src.utils.parsing import Token, expect_arity, iter_directives

GraphFormat = Literal['mg-text', 'structured', 'dot']


def parse_graph(text: str, format: GraphFormat = 'mg-text') -> Multigraph:
    '''Decode a multigraph. Raises GraphFormatError with the offending position.'''
    if format == 'structured':
        return _parse_structured(text)
    if format != 'mg-text':
        raise ValueError(f'cannot parse format {format!r}')

    directives = list(iter_directives(text))
    if not directives:
        raise GraphFormatError('missing n=<N> header', 1)

    header = directives[0]
    if len(header) != 1 or not header[0].text.startswith('n='):
        raise header[0].error('first line must be n=<N>')
    n = Token(header[0].text[2:], header[0].line, header[0].column + 2).as_int('n')
    if n < 0:
        raise header[0].error(f'n must be nonnegative, got {n}')

    def vertex(token: Token) -> int:
        v = token.as_int('vertex')
        if not 0 <= v < n:
            raise token.error(f'vertex {v} is outside 0..{n - 1}')
        return v

    edges: dict[tuple[int, int], int] = {}
    roots: list[int] = []
    labels: dict[int, frozenset[str]] = {}

    for tokens in directives[1:]:
        keyword = tokens[0]
        if keyword.text == 'e':
            expect_arity(tokens, 4)
            u, v = vertex(tokens[1]), vertex(tokens[2])
            m = tokens[3].as_int('multiplicity')
            if u == v:
                raise tokens[2].error(f'loop at vertex {u} is not allowed')
            if m < 1:
                raise tokens[3].error(f'multiplicity must be at least 1, got {m}')
            pair = (min(u, v), max(u, v))
            if pair in edges:
                raise keyword.error(f'duplicate pair {pair[0]} {pair[1]}')
            edges[pair] = m
        elif keyword.text == 'root':
            expect_arity(tokens, 2)
            r = vertex(tokens[1])
            if r in roots:
                raise tokens[1].error(f'vertex {r} is already a root')
            if len(roots) == 2:
                raise keyword.error('at most two roots are allowed')
            roots.append(r)
        elif keyword.text == 'label':
            expect_arity(tokens, 3)
            v = vertex(tokens[1])
            if v in labels:
                raise keyword.error(f'vertex {v} is labeled twice')
            ids = [part for part in tokens[2].text.split(',') if part]
            if not ids:
                raise tokens[2].error('empty label list')
            labels[v] = frozenset(ids)
        else:
            raise keyword.error(f'unknown directive {keyword.text!r}')

    return Multigraph(
        vertex_count=n,
        edges=tuple((u, v, m) for (u, v), m in edges.items()),
        labels=labels or None,
        roots=tuple(roots),
    )


def _parse_structured(text: str) -> Multigraph:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(document, dict) or 'n' not in document:
        raise GraphFormatError('expected an object with field "n"', 1)
    try:
        edges = [tuple(edge) for edge in document.get('edges', [])]
        seen: set[tuple[int, int]] = set()
        for position, (u, v, m) in enumerate(edges):
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise ValueError(f'edge {position}: duplicate pair {pair[0]} {pair[1]}')
            if m < 1:
                raise ValueError(
                    f'edge {position}: multiplicity must be at least 1, got {m}'
                )
            seen.add(pair)
        return Multigraph(
            vertex_count=int(document['n']),
            edges=tuple(edges),
            labels={
                int(v): ids for v, ids in document.get('labels', {}).items()
            }
            or None,
            roots=tuple(document.get('roots', [])),
        )
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(str(exc), 1) from None


def serialize_graph(g: Multigraph, format: GraphFormat = 'mg-text') -> str:
    if format == 'mg-text':
        lines = [f'n={g.vertex_count}']
        lines += [f'e {u} {v} {m}' for u, v, m in g.edges]
        lines += [f'root {r}' for r in g.roots]
        lines += [
            f'label {v} {",".join(sorted(g.label(v)))}'
            for v in g.vertices
            if g.label(v)
        ]
        return '\n'.join(lines)
    if format == 'structured':
        return json.dumps(graph_document(g))
    if format == 'dot':
        return _to_dot(g)
    raise ValueError(f'unknown graph format {format!r}')


def graph_document(g: Multigraph) -> dict[str, Any]:
    return {
        'n': g.vertex_count,
        'edges': [list(edge) for edge in g.edges],
        'roots': list(g.roots),
        'labels': {
            str(v): sorted(g.label(v)) for v in g.vertices if g.label(v)
        },
    }


_ROOT_SHAPES = ('doublecircle', 'box')


def _to_dot(g: Multigraph) -> str:
    lines = ['graph G {']
    for v in g.vertices:
        attributes = []
        if v in g.roots:
            attributes.append(f'shape={_ROOT_SHAPES[g.roots.index(v)]}')
        if g.label(v):
            attributes.append(f'xlabel="{",".join(sorted(g.label(v)))}"')
        suffix = f' [{", ".join(attributes)}]' if attributes else ''
        lines.append(f'  {v}{suffix};')
    for u, v, m in g.edges:
        lines.extend(f'  {u} -- {v};' for _ in range(m))
    lines.append('}')
    return '\n'.join(lines)


def load_graph(path: Path | str) -> Multigraph:
    '''Read a graph file; `.json` files use the structured format.'''
    path = Path(path)
    format: GraphFormat = 'structured' if path.suffix == '.json' else 'mg-text'
    return parse_graph(path.read_text(encoding='utf-8'), format)


def model_document(model: Model) -> dict[str, Any]:
    return {
        'branch_sets': {
            str(u): sorted(branch) for u, branch in sorted(model.branch_sets.items())
        }
    }


def parse_model(text: str) -> Model:
    try:
        document = json.loads(text)
        return Model(
            {
                int(u): frozenset(int(v) for v in branch)
                for u, branch in document['branch_sets'].items()
            }
        )
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, exc.lineno, exc.colno) from None
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise GraphFormatError(f'malformed model document: {exc}', 1) from None


def parse_decomposition(text: str) -> TreeDecomposition:
    '''Read `edge a b` and `bag id: v ...` lines; `torso` lines are ignored.'''
    bags: dict[int, frozenset[int]] = {}
    tree_edges: list[tuple[int, int]] = []
    for tokens in iter_directives(text):
        keyword = tokens[0]
        if keyword.text == 'edge':
            expect_arity(tokens, 3)
            tree_edges.append((tokens[1].as_int('node'), tokens[2].as_int('node')))
        elif keyword.text == 'bag':
            if len(tokens) < 2 or not tokens[1].text.endswith(':'):
                raise keyword.error('expected bag <id>: v ...')
            node_token = Token(tokens[1].text[:-1], tokens[1].line, tokens[1].column)
            node = node_token.as_int('node')
            if node in bags:
                raise keyword.error(f'bag {node} declared twice')
            bags[node] = frozenset(t.as_int('vertex') for t in tokens[2:])
        elif keyword.text == 'torso':
            continue
        else:
            raise keyword.error(f'unknown directive {keyword.text!r}')
    for a, b in tree_edges:
        for node in (a, b):
            if node not in bags:
                raise GraphFormatError(f'tree edge uses undeclared node {node}', 1)
    return TreeDecomposition(bags=bags, tree_edges=tuple(tree_edges))


def serialize_decomposition(g: Multigraph, d: TreeDecomposition) -> str:
    lines = [f'edge {a} {b}' for a, b in d.tree_edges]
    for node in d.nodes:
        lines.append(f'bag {node}: ' + ' '.join(str(v) for v in sorted(d.bags[node])))
    for node in d.nodes:
        lines.append(f'torso {node}: {torso_kind(g, d, node)}')
    return '\n'.join(lines)
