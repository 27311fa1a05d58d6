'''Symbolic antichains and contraction-closed families.

The two canonical infinite antichains are the θ family (θ_1, θ_2, ...) and the
coclique family (K̄_1, K̄_2, ...). A `SymbolicAntichain` holds each of them
either cofinitely (all indices but an excluded finite set) or not at all, plus
finitely many other graphs. That is the shape every canonical antichain of
the contraction order has, which is what makes canonicity decidable here.
'''

import logging
from dataclasses import dataclass, field
from pathlib import Path

from src.graphs.bonds import classify, max_bond_size
from src.graphs.construct import coclique, theta
from src.graphs.contraction import (
    MAX_MODEL_VERTICES,
    MAX_ORACLE_EDGES,
    contraction_closure,
    is_contraction,
)
from src.graphs.io import load_graph
from src.graphs.multigraph import (
    Multigraph,
    components,
    dedupe_isomorphic,
    is_isomorphic,
)
from src.utils.errors import GraphFormatError, InvalidAntichainError
from src.utils.parsing import Token, iter_directives

K1 = coclique(1)


def canonical_member(g: Multigraph) -> tuple[str, int] | None:
    '''('theta', i) or ('coclique', i) when g is that canonical graph.'''
    if g.roots or g.is_labeled:
        return None
    if g.vertex_count == 2 and len(g.edges) == 1:
        return 'theta', g.edges[0][2]
    if g.vertex_count >= 1 and not g.edges:
        return 'coclique', g.vertex_count
    return None


@dataclass(frozen=True)
class SymbolicAntichain:
    theta_excluded: frozenset[int] = frozenset()
    coclique_excluded: frozenset[int] = frozenset()
    theta_all_absent: bool = False
    coclique_all_absent: bool = False
    extra: tuple[Multigraph, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'theta_excluded', frozenset(self.theta_excluded))
        object.__setattr__(
            self, 'coclique_excluded', frozenset(self.coclique_excluded)
        )
        object.__setattr__(self, 'extra', tuple(self.extra))
        for i in self.theta_excluded | self.coclique_excluded:
            if i < 1:
                raise ValueError(f'family indices start at 1, got {i}')
        for position, g in enumerate(self.extra):
            member = canonical_member(g)
            if member is not None:
                raise ValueError(
                    f'extra graph {position} is {member[0]}_{member[1]}; '
                    'use the family exclusions instead'
                )
            if any(is_isomorphic(g, other) for other in self.extra[:position]):
                raise ValueError(f'extra graph {position} repeats an earlier one')

    def includes_theta(self, i: int) -> bool:
        return not self.theta_all_absent and i not in self.theta_excluded

    def includes_coclique(self, i: int) -> bool:
        return not self.coclique_all_absent and i not in self.coclique_excluded


@dataclass(frozen=True)
class ThetaComparability:
    '''Indices i with θ_i ⊴ g or g ⊴ θ_i; `all_indices` when g is K_1.'''

    indices: frozenset[int]
    all_indices: bool = False


def comparable_with_theta(
    g: Multigraph, max_vertices: int = MAX_MODEL_VERTICES
) -> ThetaComparability:
    '''θ_i contracts only to θ_i and K_1; θ_i ⊴ g needs i <= max_bond_size(g).'''
    g = g.without_roots().without_labels()
    if g.vertex_count == 1:
        return ThetaComparability(indices=frozenset(), all_indices=True)
    indices = {
        i
        for i in range(1, max_bond_size(g) + 1)
        if is_contraction(theta(i), g, max_vertices=max_vertices)
    }
    member = canonical_member(g)
    if member is not None and member[0] == 'theta':
        indices.add(member[1])
    return ThetaComparability(indices=frozenset(indices))


def comparable_with_coclique(g: Multigraph) -> frozenset[int]:
    '''K̄_p ⊴ g exactly for p = the component count of g.'''
    if g.vertex_count == 0:
        return frozenset()
    return frozenset({len(components(g))})


def is_valid_antichain(
    a: SymbolicAntichain,
    probe_bound: int = 20,
    max_vertices: int = MAX_MODEL_VERTICES,
) -> bool:
    '''Decide whether the presented family is a contraction antichain.

    Extras are compared pairwise and against the canonical families through
    their finite comparability sets. Indices up to `probe_bound` are also
    checked directly with the model search.
    '''
    for i, x in enumerate(a.extra):
        for j, y in enumerate(a.extra):
            if i != j and is_contraction(x, y, max_vertices=max_vertices):
                logging.info(f'Extra graphs {i} and {j} are comparable')
                return False

    # K̄_1 = K_1 is a contraction of every θ_i.
    if a.includes_coclique(1) and not a.theta_all_absent:
        logging.info('K̄_1 is included together with θ members')
        return False

    for position, x in enumerate(a.extra):
        thetas = comparable_with_theta(x, max_vertices=max_vertices)
        if thetas.all_indices and not a.theta_all_absent:
            logging.info(f'Extra graph {position} is below every θ_i')
            return False
        if any(a.includes_theta(i) for i in thetas.indices):
            logging.info(f'Extra graph {position} is comparable with an included θ_i')
            return False
        if any(a.includes_coclique(i) for i in comparable_with_coclique(x)):
            logging.info(f'Extra graph {position} is comparable with an included K̄_i')
            return False

    return not _probe_conflicts(a, probe_bound, max_vertices)


def _probe_conflicts(
    a: SymbolicAntichain, probe_bound: int, max_vertices: int
) -> bool:
    members = [theta(i) for i in range(1, probe_bound + 1) if a.includes_theta(i)]
    members += [
        coclique(i)
        for i in range(1, min(probe_bound, max_vertices) + 1)
        if a.includes_coclique(i)
    ]
    for x in a.extra:
        for y in members:
            if is_contraction(y, x, max_vertices=max_vertices):
                return True
            if is_contraction(x, y, max_vertices=max_vertices):
                return True
    return False


def is_canonical(
    a: SymbolicAntichain, max_vertices: int = MAX_MODEL_VERTICES
) -> bool:
    '''Both canonical families cofinitely present; extras are finite by construction.

    Raises:
        InvalidAntichainError: If a is not an antichain.
    '''
    if not is_valid_antichain(a, max_vertices=max_vertices):
        raise InvalidAntichainError('the family is not an antichain')
    return not a.theta_all_absent and not a.coclique_all_absent


def down_set(
    a: SymbolicAntichain, max_edges: int = MAX_ORACLE_EDGES
) -> list[Multigraph]:
    '''Graphs strictly below some member, up to isomorphism.

    Included θ members contribute K_1, coclique members contribute nothing.
    '''
    below: list[Multigraph] = []
    if not a.theta_all_absent:
        below.append(K1)
    for x in a.extra:
        below.extend(contraction_closure(x, strict=True, max_edges=max_edges))
    return dedupe_isomorphic(below)


def is_fundamental(a: SymbolicAntichain, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    '''Whether the down-set of a holds no infinite antichain.'''
    family = SymbolicFamily(members=tuple(down_set(a, max_edges=max_edges)))
    return not has_infinite_antichain(family)


@dataclass(frozen=True)
class SymbolicFamily:
    '''Finitely many graphs plus, optionally, all but finitely many θ_i or K̄_i.'''

    members: tuple[Multigraph, ...] = field(default=())
    theta_tail: bool = False
    coclique_tail: bool = False


def closure(
    family: SymbolicFamily, max_edges: int = MAX_ORACLE_EDGES
) -> SymbolicFamily:
    '''Contraction closure; a θ tail adds K_1, a coclique tail is already closed.'''
    members = [
        c for g in family.members for c in contraction_closure(g, max_edges=max_edges)
    ]
    if family.theta_tail:
        members.append(K1)
    return SymbolicFamily(
        members=tuple(dedupe_isomorphic(members)),
        theta_tail=family.theta_tail,
        coclique_tail=family.coclique_tail,
    )


def has_infinite_antichain(family: SymbolicFamily) -> bool:
    return family.theta_tail or family.coclique_tail


def is_wqo(family: SymbolicFamily) -> bool:
    '''A contraction-closed class is wqo iff it has bounded θ and K̄ members.'''
    return not has_infinite_antichain(family)


def wqo_witness(family: SymbolicFamily) -> tuple[int, int] | None:
    '''(p, k) with every member in G_{p,k}, or None when the family is not wqo.'''
    if not is_wqo(family):
        return None
    classes = [classify(g) for g in family.members]
    return (
        max((c.p for c in classes), default=0),
        max((c.k for c in classes), default=0),
    )


def meets_infinitely(family: SymbolicFamily, a: SymbolicAntichain) -> bool:
    '''Whether family ∩ a is infinite; only the cofinite parts can make it so.'''
    return (family.theta_tail and not a.theta_all_absent) or (
        family.coclique_tail and not a.coclique_all_absent
    )


def parse_antichain(text: str, base_dir: Path | str = '.') -> SymbolicAntichain:
    '''Read `theta exclude ...`, `coclique exclude ...` and `extra <file>` lines.

    `exclude` takes a comma-separated index list, `none` or `all`. A family
    with no line is absent. Extra paths are relative to `base_dir`.
    '''
    base_dir = Path(base_dir)
    settings: dict[str, tuple[frozenset[int], bool]] = {}
    extra: list[Multigraph] = []

    for tokens in iter_directives(text):
        keyword = tokens[0]
        if keyword.text in ('theta', 'coclique'):
            if len(tokens) != 3 or tokens[1].text != 'exclude':
                raise keyword.error(f'expected {keyword.text} exclude <i,...>|none|all')
            if keyword.text in settings:
                raise keyword.error(f'{keyword.text} declared twice')
            settings[keyword.text] = _parse_exclusion(tokens[2])
        elif keyword.text == 'extra':
            if len(tokens) != 2:
                raise keyword.error('expected extra <file>')
            path = base_dir / tokens[1].text
            if not path.exists():
                raise tokens[1].error(f'no such graph file {tokens[1].text!r}')
            extra.append(load_graph(path).without_roots().without_labels())
        else:
            raise keyword.error(f'unknown directive {keyword.text!r}')

    theta_excluded, theta_absent = settings.get('theta', (frozenset(), True))
    coclique_excluded, coclique_absent = settings.get('coclique', (frozenset(), True))
    try:
        return SymbolicAntichain(
            theta_excluded=theta_excluded,
            coclique_excluded=coclique_excluded,
            theta_all_absent=theta_absent,
            coclique_all_absent=coclique_absent,
            extra=tuple(extra),
        )
    except ValueError as exc:
        raise GraphFormatError(str(exc), 1) from None


def _parse_exclusion(token: Token) -> tuple[frozenset[int], bool]:
    if token.text == 'none':
        return frozenset(), False
    if token.text == 'all':
        return frozenset(), True
    indices = []
    for part in token.text.split(','):
        index = Token(part, token.line, token.column).as_int('index')
        if index < 1:
            raise token.error(f'family indices start at 1, got {index}')
        indices.append(index)
    return frozenset(indices), False
