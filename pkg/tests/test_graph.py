import json

import pytest
from hypothesis import given

from conftest import graph, graphs, unique_maximal_graph, mixed_maximals_graph, random_corpus
from oracles import reach_sets
from lpaideals import (
    DirectedGraph,
    GraphError,
    GraphFormatError,
    UnknownVertexError,
    VertexKind,
    parse_graph,
    serialize_graph,
)

FIXTURE_DOC = """
{
  "vertices": ["u", "v", "w"],
  "edges": [
    {"id": "f1", "src": "u", "dst": "u"},
    {"id": "g1", "src": "u", "dst": "u"},
    {"id": "e1", "src": "u", "dst": "v"},
    {"id": "e2", "src": "v", "dst": "w"},
    {"id": "c", "src": "w", "dst": "w"}
  ]
}
"""


def test_parse_fixture_document():
    g = parse_graph(FIXTURE_DOC)
    assert g == unique_maximal_graph()
    assert g.vertices == ("u", "v", "w")
    assert [e.id for e in g.edges] == ["c", "e1", "e2", "f1", "g1"]


def test_parse_smallest_graph():
    g = parse_graph('{"vertices": ["v"], "edges": []}')
    assert g.vertices == ("v",)
    assert g.edges == ()
    assert g.omega_bundles == ()


def test_parse_infinite_emitter():
    doc = {
        "vertices": ["v", "w"],
        "edges": [{"id": "f", "src": "v", "dst": "v"}],
        "omega_bundles": [{"src": "v", "dst": "w"}],
    }
    g = parse_graph(json.dumps(doc))
    assert g.vertex_kind("v") is VertexKind.INFINITE_EMITTER
    assert g.vertex_kind("w") is VertexKind.SINK


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"vertices": ["v"]}',
        '{"vertices": ["v"], "edges": [], "extra": 1}',
        '{"vertices": ["v", "v"], "edges": []}',
        '{"vertices": [""], "edges": []}',
        '{"vertices": [], "edges": []}',
        '{"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "x"}]}',
        '{"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "v"},'
        ' {"id": "e", "src": "v", "dst": "v"}]}',
        '{"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "v", "weight": 2}]}',
        '{"vertices": ["v", "w"], "edges": [],'
        ' "omega_bundles": [{"src": "v", "dst": "w"}, {"src": "v", "dst": "w"}]}',
        '{"vertices": ["v"], "edges": [], "omega_bundles": [{"src": "v"}]}',
    ],
)
def test_parse_rejects_bad_documents(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parallel_named_edges_are_allowed():
    g = graph(["u", "v"], [("a", "u", "v"), ("b", "u", "v")])
    assert len(g.edges) == 2


def test_vertex_kinds():
    a = unique_maximal_graph()
    assert a.vertex_kind("w") is VertexKind.REGULAR
    single = graph(["v"])
    assert single.vertex_kind("v") is VertexKind.SINK
    with pytest.raises(UnknownVertexError):
        single.vertex_kind("nope")


def test_kind_partition_is_exact():
    for g in random_corpus(40, seed=7):
        for v in g.vertices:
            kind = g.vertex_kind(v)
            has_bundle = bool(g.out_bundles(v))
            has_named = bool(g.out_edges(v))
            if has_bundle:
                assert kind is VertexKind.INFINITE_EMITTER
            elif has_named:
                assert kind is VertexKind.REGULAR
            else:
                assert kind is VertexKind.SINK


def test_reaches_examples():
    a = unique_maximal_graph()
    assert a.reaches("u", "w")
    assert a.reaches("w", "w")
    b = mixed_maximals_graph()
    assert not b.reaches("u", "w")


def test_m_of_examples():
    a = unique_maximal_graph()
    assert a.m_of("w") == {"u", "v", "w"}
    assert graph(["v"]).m_of("v") == {"v"}
    b = mixed_maximals_graph()
    assert b.m_of("u") == {"u", "v"}


def test_reachability_against_floyd_warshall():
    for g in random_corpus(60, seed=11, max_vertices=8):
        expected = reach_sets(g)
        for u in g.vertices:
            assert g.descendants(u) == expected[u]
            for v in g.vertices:
                assert g.reaches(u, v) == (v in expected[u])
                assert (u in g.m_of(v)) == g.reaches(u, v)


@given(graphs())
def test_reaches_is_reflexive_and_transitive(g):
    for u in g.vertices:
        assert g.reaches(u, u)
    for u in g.vertices:
        for v in g.descendants(u):
            assert g.descendants(v) <= g.descendants(u)


@given(graphs())
def test_serialize_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


def test_canonical_ordering_is_input_order_independent():
    g1 = DirectedGraph.from_parts(
        ["b", "a"], [("e2", "a", "b"), ("e1", "b", "a")], [("b", "a"), ("a", "b")]
    )
    g2 = DirectedGraph.from_parts(
        ["a", "b"], [("e1", "b", "a"), ("e2", "a", "b")], [("a", "b"), ("b", "a")]
    )
    assert g1 == g2
    assert serialize_graph(g1) == serialize_graph(g2)


def test_direct_construction_validates():
    with pytest.raises(GraphError):
        graph([])
    with pytest.raises(GraphError):
        graph(["v"], [("e", "v", "x")])
    with pytest.raises(GraphError):
        graph(["v"], bundles=[("v", "v"), ("v", "v")])
