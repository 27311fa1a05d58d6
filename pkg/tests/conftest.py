"""Shared fixtures for contraction toolkit tests."""

from pathlib import Path

import pytest
from hypothesis import strategies as st

from src.graphs.construct import house, theta
from src.graphs.io import serialize_graph
from src.graphs.multigraph import Multigraph


def make_graph(
    n: int,
    edges: list[tuple[int, int, int]] | None = None,
    roots: tuple[int, ...] = (),
    labels: dict[int, set[str]] | None = None,
) -> Multigraph:
    """Create a multigraph from an edge list.

    Args:
        n: Number of vertices.
        edges: (u, v, multiplicity) triples. Defaults to no edges.
        roots: Root vertices, at most two.
        labels: Vertex to label set; unlisted vertices are unlabeled.

    Returns:
        The Multigraph value.
    """
    label_tuple = None
    if labels:
        label_tuple = tuple(frozenset(labels.get(v, ())) for v in range(n))
    return Multigraph(
        vertex_count=n, edges=tuple(edges or ()), labels=label_tuple, roots=roots
    )


def make_rooted_house(r: int = 0, s: int = 3) -> Multigraph:
    """The house graph with two roots, by default on its 0-3 edge."""
    return house().with_roots(r, s)


def make_config_dict(**overrides) -> dict:
    """Create a minimal valid config dict for testing.

    Args:
        **overrides: Fields to replace or add.

    Returns:
        A dictionary matching ConfigDict structure.
    """
    config = {
        'max_model_vertices': 9,
        'max_oracle_edges': 12,
        'seed': 7,
        'props_budget': 1.0,
        'probe': {'p': 1, 'k': 3, 'length': 50, 'trials': 20, 'max_edges': 8},
    }
    config.update(overrides)
    return config


def write_graph(directory: Path, name: str, g: Multigraph) -> Path:
    """Write g in MG text to directory/name and return the path."""
    path = directory / name
    path.write_text(serialize_graph(g))
    return path


@st.composite
def multigraphs(
    draw, max_vertices: int = 6, max_multiplicity: int = 3, connected: bool = False
) -> Multigraph:
    """Hypothesis strategy for loop-free multigraphs."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    multiplicities = draw(
        st.lists(
            st.integers(min_value=0, max_value=max_multiplicity),
            min_size=len(pairs),
            max_size=len(pairs),
        )
    )
    edges = [(u, v, m) for (u, v), m in zip(pairs, multiplicities) if m]
    if connected:
        edges += [(v - 1, v, 1) for v in range(1, n)]
    return Multigraph(vertex_count=n, edges=tuple(edges))


@pytest.fixture
def house_graph() -> Multigraph:
    """The unrooted house graph."""
    return house()


@pytest.fixture
def theta3() -> Multigraph:
    """Two vertices joined by three parallel edges."""
    return theta(3)
