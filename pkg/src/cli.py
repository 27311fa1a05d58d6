'''Command-line front end.

Every subcommand prints its answer to stdout and reports through the exit
code: 0 yes/pass, 1 no/fail, 2 usage or input error, 3 size bound exceeded.
'''

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import yaml
from dotenv import load_dotenv
from eftoolkit.utils import setup_logging

from src.graphs.bonds import classify, enumerate_bonds
from src.graphs.construct import attach, gen
from src.graphs.contraction import (
    CheckOptions,
    brute_force_is_contraction,
    contraction_closure,
    find_model,
    graph_comparator,
)
from src.graphs.decomposition import tutte_decomposition, validate_decomposition
from src.graphs.io import (
    graph_document,
    load_graph,
    model_document,
    parse_decomposition,
    serialize_decomposition,
    serialize_graph,
)
from src.graphs.multigraph import Multigraph
from src.orders.poset import find_good_pair, parse_poset
from src.props.runner import run_props
from src.utils.config import ConfigDict, get_config_dict
from src.utils.errors import SizeBoundExceeded
from src.utils.report import document_to_text, frame_to_text
from src.wqo.antichains import (
    SymbolicAntichain,
    down_set,
    is_canonical,
    is_fundamental,
    is_valid_antichain,
    parse_antichain,
)
from src.wqo.probe import probe_passed, wqo_probe

YES, NO, INPUT_ERROR, TOO_LARGE = 0, 1, 2, 3

GRAPH_SUFFIXES = ('.mg', '.json')

Handler = Callable[[argparse.Namespace, ConfigDict], int]


def _emit(args: argparse.Namespace, text: str, document: object) -> None:
    print(document_to_text(document) if args.json else text)


def _decision(args: argparse.Namespace, name: str, answer: bool) -> int:
    _emit(args, 'yes' if answer else 'no', {name: answer})
    logging.info(f'{args.command}: {"yes" if answer else "no"}')
    return YES if answer else NO


def _graph_list(args: argparse.Namespace, graphs: list[Multigraph]) -> None:
    _emit(
        args,
        '\n\n'.join(serialize_graph(g) for g in graphs),
        [graph_document(g) for g in graphs],
    )


def _load_antichain(path: str) -> SymbolicAntichain:
    source = Path(path)
    return parse_antichain(source.read_text(encoding='utf-8'), source.parent)


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected u,v, got {text!r}') from None
    return u, v


def cmd_gen(args: argparse.Namespace, config: ConfigDict) -> int:
    g = gen(args.kind, *args.params)
    fmt = 'structured' if args.json else args.format
    print(serialize_graph(g, fmt))
    return YES


def cmd_contract(args: argparse.Namespace, config: ConfigDict) -> int:
    h, g = load_graph(args.pattern), load_graph(args.host)
    label_poset = None
    if args.labels:
        label_poset = parse_poset(Path(args.labels).read_text(encoding='utf-8'))
    opts = CheckOptions(
        respect_roots=args.roots,
        respect_labels=label_poset is not None,
        label_poset=label_poset,
    )
    model = find_model(h, g, opts, max_vertices=config['max_model_vertices'])

    if model is not None and args.model_out:
        Path(args.model_out).write_text(
            document_to_text(model_document(model)), encoding='utf-8'
        )
    document = {
        'contraction': model is not None,
        'model': model_document(model) if model is not None else None,
    }
    _emit(args, 'yes' if model is not None else 'no', document)
    logging.info(f'contract: {"yes" if model is not None else "no"}')
    return YES if model is not None else NO


def cmd_oracle(args: argparse.Namespace, config: ConfigDict) -> int:
    h, g = load_graph(args.pattern), load_graph(args.host)
    answer = brute_force_is_contraction(h, g, max_edges=config['max_oracle_edges'])
    return _decision(args, 'contraction', answer)


def cmd_bonds(args: argparse.Namespace, config: ConfigDict) -> int:
    bonds = enumerate_bonds(load_graph(args.graph))
    lines = [
        ' '.join(f'{u}-{v}' for u, v in bond.pairs()) + f' size={bond.size}'
        for bond in bonds
    ]
    document = [
        {'edges': [list(pair) for pair in bond.pairs()], 'size': bond.size}
        for bond in bonds
    ]
    _emit(args, '\n'.join(lines), document)
    return YES


def cmd_classify(args: argparse.Namespace, config: ConfigDict) -> int:
    pk = classify(load_graph(args.graph))
    _emit(args, f'p={pk.p} k={pk.k}', {'p': pk.p, 'k': pk.k})
    return YES


def cmd_attach(args: argparse.Namespace, config: ConfigDict) -> int:
    g, h = load_graph(args.host), load_graph(args.piece)
    u, v = args.at
    result = attach(g, u, v, h)
    _emit(args, serialize_graph(result), graph_document(result))
    return YES


def cmd_decompose(args: argparse.Namespace, config: ConfigDict) -> int:
    g = load_graph(args.graph)
    if args.check:
        d = parse_decomposition(Path(args.check).read_text(encoding='utf-8'))
        problems = validate_decomposition(g, d)
        _emit(args, '\n'.join(problems) or 'ok', {'problems': problems})
        return NO if problems else YES

    d = tutte_decomposition(g)
    document = {
        'bags': {str(node): sorted(d.bags[node]) for node in d.nodes},
        'tree_edges': [list(edge) for edge in d.tree_edges],
    }
    _emit(args, serialize_decomposition(g, d), document)
    return YES


def cmd_closure(args: argparse.Namespace, config: ConfigDict) -> int:
    closure = contraction_closure(
        load_graph(args.graph),
        strict=args.strict,
        max_edges=config['max_oracle_edges'],
    )
    _graph_list(args, closure)
    return YES


def cmd_goodpair(args: argparse.Namespace, config: ConfigDict) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise ValueError(f'{directory} is not a directory')
    files = sorted(p for p in directory.iterdir() if p.suffix in GRAPH_SUFFIXES)
    sequence = [load_graph(p) for p in files]
    pair = find_good_pair(
        sequence, graph_comparator(max_vertices=config['max_model_vertices'])
    )
    if pair is None:
        _emit(args, 'none', {'good_pair': None})
        return NO
    i, j = pair
    _emit(
        args,
        f'{i} {j} ({files[i - 1].name} <= {files[j - 1].name})',
        {'good_pair': [i, j], 'files': [files[i - 1].name, files[j - 1].name]},
    )
    return YES


def cmd_antichain(args: argparse.Namespace, config: ConfigDict) -> int:
    a = _load_antichain(args.file)
    return _decision(
        args,
        'antichain',
        is_valid_antichain(a, max_vertices=config['max_model_vertices']),
    )


def cmd_canonical(args: argparse.Namespace, config: ConfigDict) -> int:
    a = _load_antichain(args.file)
    return _decision(
        args, 'canonical', is_canonical(a, max_vertices=config['max_model_vertices'])
    )


def cmd_fundamental(args: argparse.Namespace, config: ConfigDict) -> int:
    a = _load_antichain(args.file)
    return _decision(
        args, 'fundamental', is_fundamental(a, max_edges=config['max_oracle_edges'])
    )


def cmd_downset(args: argparse.Namespace, config: ConfigDict) -> int:
    below = down_set(_load_antichain(args.file), max_edges=config['max_oracle_edges'])
    _graph_list(args, below)
    return YES


def cmd_probe(args: argparse.Namespace, config: ConfigDict) -> int:
    defaults = config.get('probe', {})
    p = args.p if args.p is not None else defaults.get('p', 1)
    k = args.k if args.k is not None else defaults.get('k', 3)
    length = args.len if args.len is not None else defaults.get('length', 50)
    trials = args.trials if args.trials is not None else defaults.get('trials', 20)
    max_edges = defaults.get('max_edges', 8)
    seed = args.seed if args.seed is not None else config['seed']

    report = wqo_probe(
        p,
        k,
        length,
        trials,
        seed=seed,
        max_edges=max_edges,
        max_vertices=config['max_model_vertices'],
    )
    print(frame_to_text(report, as_json=args.json, detail_column='sequence'))
    return YES if probe_passed(report) else NO


def cmd_props(args: argparse.Namespace, config: ConfigDict) -> int:
    seed = args.seed if args.seed is not None else config['seed']
    budget = args.budget
    if budget is None:
        budget = config.get('props_budget', 1.0)
    report = run_props(args.suite, seed=seed, budget=budget)
    print(frame_to_text(report, as_json=args.json, detail_column='counterexample'))
    return YES if bool(report['passed'].all()) else NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='contraction',
        description='Decide and explore the contraction order on multigraphs.',
    )
    parser.add_argument('--json', action='store_true', help='structured output')
    parser.add_argument('--config', help='YAML configuration file')
    commands = parser.add_subparsers(dest='command', required=True)

    def command(name: str, handler: Handler, summary: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=summary)
        sub.set_defaults(handler=handler)
        return sub

    sub = command('gen', cmd_gen, 'build a named graph')
    sub.add_argument('kind')
    sub.add_argument('params', nargs='*', type=int)
    sub.add_argument(
        '--format', choices=['mg-text', 'structured', 'dot'], default='mg-text'
    )

    sub = command('contract', cmd_contract, 'is the pattern a contraction of the host')
    sub.add_argument('pattern')
    sub.add_argument('host')
    sub.add_argument('--roots', action='store_true', help='preserve roots')
    sub.add_argument('--labels', metavar='POSET', help='preserve labels under POSET')
    sub.add_argument('--model-out', help='write the witnessing model here')

    sub = command('oracle', cmd_oracle, 'the same question by edge-by-edge search')
    sub.add_argument('pattern')
    sub.add_argument('host')

    for name, handler, summary in (
        ('bonds', cmd_bonds, 'list every bond'),
        ('classify', cmd_classify, 'smallest G_{p,k} class'),
        ('closure', cmd_closure, 'all contractions up to isomorphism'),
        ('decompose', cmd_decompose, 'Tutte decomposition'),
    ):
        sub = command(name, handler, summary)
        sub.add_argument('graph')
        if name == 'closure':
            sub.add_argument('--strict', action='store_true')
        if name == 'decompose':
            sub.add_argument('--check', metavar='FILE', help='validate FILE instead')

    sub = command('attach', cmd_attach, 'attach a 2-rooted piece to a host')
    sub.add_argument('host')
    sub.add_argument('piece')
    sub.add_argument('--at', type=_parse_pair, required=True, metavar='U,V')

    sub = command('goodpair', cmd_goodpair, 'first good pair in a graph sequence')
    sub.add_argument('directory')

    for name, handler, summary in (
        ('antichain', cmd_antichain, 'is the family an antichain'),
        ('canonical', cmd_canonical, 'is the antichain canonical'),
        ('fundamental', cmd_fundamental, 'is the antichain fundamental'),
        ('downset', cmd_downset, 'graphs strictly below the antichain'),
    ):
        sub = command(name, handler, summary)
        sub.add_argument('file')

    sub = command('probe', cmd_probe, 'sample G_{p,k} sequences for good pairs')
    sub.add_argument('--p', type=int)
    sub.add_argument('--k', type=int)
    sub.add_argument('--len', type=int)
    sub.add_argument('--trials', type=int)
    sub.add_argument('--seed', type=int)

    sub = command('props', cmd_props, 'run the property suites')
    sub.add_argument('--suite')
    sub.add_argument('--seed', type=int)
    sub.add_argument('--budget', type=float)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR

    try:
        config = get_config_dict(args.config)
        return args.handler(args, config)
    except SizeBoundExceeded as exc:
        print(f'error: {exc}', file=sys.stderr)
        return TOO_LARGE
    except (ValueError, OSError, yaml.YAMLError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return INPUT_ERROR


def main(argv: Sequence[str] | None = None) -> None:
    load_dotenv()
    setup_logging()
    sys.exit(run(argv))
