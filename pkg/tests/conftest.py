import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lpaideals import DirectedGraph

settings.register_profile(
    "suite",
    max_examples=40,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def graph(vertices, edges=(), bundles=()):
    return DirectedGraph.from_parts(vertices, edges, bundles)


def unique_maximal_graph():
    """u with two loops, u -> v -> w, loop c at w."""
    return graph(
        ["u", "v", "w"],
        [("f1", "u", "u"), ("g1", "u", "u"), ("e1", "u", "v"), ("e2", "v", "w"), ("c", "w", "w")],
    )


def mixed_maximals_graph():
    """u with two loops, v -> u and v -> w, loop c at w."""
    return graph(
        ["u", "v", "w"],
        [("f1", "u", "u"), ("g1", "u", "u"), ("e1", "v", "u"), ("e2", "v", "w"), ("c", "w", "w")],
    )


def omega_graph():
    """Named loop f at v plus a bundle v -> w; v breaks H = {w}."""
    return graph(["v", "w"], [("f", "v", "v")], [("v", "w")])


def chain_graph(n, reverse=False):
    """Two loops at each of v1..vn; chain edges v_{i+1} -> v_i, or
    v_i -> v_{i+1} when reversed."""
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(1, n + 1):
        edges.append((f"f{i}", f"v{i}", f"v{i}"))
        edges.append((f"g{i}", f"v{i}", f"v{i}"))
    for i in range(1, n):
        if reverse:
            edges.append((f"e{i}", f"v{i}", f"v{i + 1}"))
        else:
            edges.append((f"e{i}", f"v{i + 1}", f"v{i}"))
    return graph(vertices, edges)


@pytest.fixture
def unique_max():
    return unique_maximal_graph()


@pytest.fixture
def mixed_max():
    return mixed_maximals_graph()


@pytest.fixture
def omega():
    return omega_graph()


def random_graph(rng, max_vertices=7, max_named=12, max_bundles=2, with_bundles=True):
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    m = rng.randint(0, max_named)
    edges = [
        (f"e{j}", rng.choice(vertices), rng.choice(vertices)) for j in range(m)
    ]
    bundles = []
    if with_bundles and rng.random() < 0.35:
        pairs = {(rng.choice(vertices), rng.choice(vertices)) for _ in range(rng.randint(1, max_bundles))}
        bundles = sorted(pairs)
    return graph(vertices, edges, bundles)


def random_corpus(count, seed=20260809, **kwargs):
    rng = random.Random(seed)
    return [random_graph(rng, **kwargs) for _ in range(count)]


@st.composite
def graphs(draw, max_vertices=5, max_edges=10, bundles=True):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertices = [f"v{i}" for i in range(n)]
    vertex = st.sampled_from(vertices)
    pairs = draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges))
    edges = [(f"e{j}", src, dst) for j, (src, dst) in enumerate(pairs)]
    bundle_list = []
    if bundles:
        bundle_list = sorted(set(draw(st.lists(st.tuples(vertex, vertex), max_size=2))))
    return graph(vertices, edges, bundle_list)


@st.composite
def graph_and_subset(draw, **kwargs):
    g = draw(graphs(**kwargs))
    subset = draw(st.sets(st.sampled_from(list(g.vertices))))
    return g, frozenset(subset)
