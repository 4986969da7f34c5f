import random
from fractions import Fraction

import pytest

from conftest import graph, omega_graph, unique_maximal_graph
from lpaideals import (
    GraphError,
    edge_element,
    ghost_element,
    is_idempotent,
    make_path,
    parse_element,
    render_element,
    v_H_element,
    vertex_element,
)
from lpaideals.algebra import Monomial, monomial_element, zero


def test_path_validation(unique_max):
    p = make_path(unique_max, "u", ["e1", "e2"])
    assert (p.source, p.target, len(p)) == ("u", "w", 2)
    with pytest.raises(GraphError):
        make_path(unique_max, "u", ["e2"])
    with pytest.raises(GraphError):
        make_path(unique_max, "u", ["e1", "e1"])


def test_monomial_requires_matching_ranges(unique_max):
    alpha = make_path(unique_max, "u", ["e1"])
    beta = make_path(unique_max, "u", [])
    with pytest.raises(GraphError):
        Monomial(Fraction(1), alpha, beta)
    with pytest.raises(GraphError):
        Monomial(Fraction(0), alpha, make_path(unique_max, "v", []))


def test_ck1_products(unique_max):
    e = edge_element(unique_max, "e1")
    e_star = ghost_element(unique_max, "e1")
    f = edge_element(unique_max, "e2")
    assert e_star * e == vertex_element(unique_max, "v")
    assert (e_star * f).is_zero()
    assert e * f == monomial_element(unique_max, "u", ["e1", "e2"], "w", [])


def test_vertex_orthogonality(unique_max):
    u = vertex_element(unique_max, "u")
    v = vertex_element(unique_max, "v")
    assert u * u == u
    assert (u * v).is_zero()


def test_degrees(unique_max):
    assert vertex_element(unique_max, "u").homogeneous_degree() == 0
    assert edge_element(unique_max, "e1").homogeneous_degree() == 1
    m = monomial_element(unique_max, "u", ["e1", "e2"], "u", ["e1", "e2", "c"])
    assert m.terms[0].degree == -1
    mixed = vertex_element(unique_max, "u") + edge_element(unique_max, "e1")
    assert mixed.homogeneous_degree() is None


def test_linear_combination_canonical_form(unique_max):
    u = vertex_element(unique_max, "u")
    x = u.scale(Fraction(1, 2)) + u.scale(Fraction(1, 2))
    assert x == u
    assert (u - u).is_zero()
    assert render_element(zero(unique_max)) == "0"


def _random_element(g, rng, monomial_pool):
    terms = []
    for _ in range(rng.randint(1, 3)):
        alpha, beta = rng.choice(monomial_pool)
        coeff = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        if coeff == 0:
            coeff = Fraction(1)
        terms.append(Monomial(coeff, alpha, beta))
    from lpaideals import AlgebraElement

    return AlgebraElement(g, tuple(terms))


def _monomial_pool(g, max_len=3):
    paths = [make_path(g, v) for v in g.vertices]
    frontier = list(paths)
    for _ in range(max_len):
        new = []
        for p in frontier:
            for e in g.out_edges(p.target):
                new.append(make_path(g, p.source, p.edges + (e.id,)))
        paths += new
        frontier = new
    by_target = {}
    for p in paths:
        by_target.setdefault(p.target, []).append(p)
    return [
        (alpha, beta)
        for target, group in by_target.items()
        for alpha in group
        for beta in group
    ]


def test_mul_is_associative_and_bilinear():
    for g in (unique_maximal_graph(), omega_graph()):
        rng = random.Random(99)
        pool = _monomial_pool(g)
        for _ in range(60):
            x = _random_element(g, rng, pool)
            y = _random_element(g, rng, pool)
            z = _random_element(g, rng, pool)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x + y) * z == x * z + y * z
            k = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
            assert x.scale(k) * y == (x * y).scale(k)


def test_homogeneous_degrees_add():
    g = unique_maximal_graph()
    rng = random.Random(7)
    pool = _monomial_pool(g)
    checked = 0
    for _ in range(300):
        alpha1, beta1 = rng.choice(pool)
        alpha2, beta2 = rng.choice(pool)
        x = monomial_element(g, alpha1.source, alpha1.edges, beta1.source, beta1.edges)
        y = monomial_element(g, alpha2.source, alpha2.edges, beta2.source, beta2.edges)
        product = x * y
        if not product.is_zero():
            expected = x.homogeneous_degree() + y.homogeneous_degree()
            assert product.homogeneous_degree() == expected
            checked += 1
    assert checked > 50


def test_local_units():
    for g in (unique_maximal_graph(), omega_graph()):
        rng = random.Random(3)
        pool = _monomial_pool(g)
        for _ in range(40):
            x = _random_element(g, rng, pool)
            sources = {m.alpha.source for m in x.terms} | {m.beta.source for m in x.terms}
            f = zero(g)
            for v in sorted(sources):
                f = f + vertex_element(g, v)
            assert f * x * f == x


def test_v_H_element(omega):
    vh = v_H_element(omega, {"w"}, "v")
    ff = monomial_element(omega, "v", ["f"], "v", ["f"])
    assert vh == vertex_element(omega, "v") - ff
    with pytest.raises(GraphError):
        v_H_element(omega, set(), "v")


def test_v_H_with_two_named_escapes():
    g = graph(
        ["h", "x", "y", "z"],
        [("a", "x", "y"), ("b", "x", "z"), ("ly", "y", "y"), ("lz", "z", "z")],
        [("x", "h")],
    )
    vh = v_H_element(g, {"h"}, "x")
    expected = (
        vertex_element(g, "x")
        - monomial_element(g, "x", ["a"], "x", ["a"])
        - monomial_element(g, "x", ["b"], "x", ["b"])
    )
    assert vh == expected
    assert vh.is_idempotent()
    for eid in ("a", "b"):
        ee = monomial_element(g, "x", [eid], "x", [eid])
        assert (vh * ee).is_zero()


def test_idempotents(unique_max, omega):
    assert is_idempotent(unique_max, vertex_element(unique_max, "u"))
    assert v_H_element(omega, {"w"}, "v").is_idempotent()
    assert not edge_element(unique_max, "e1").is_idempotent()
    assert not is_idempotent(unique_max, edge_element(unique_max, "f1"))


def test_parse_and_render(unique_max):
    assert parse_element(unique_max, "u") == vertex_element(unique_max, "u")
    assert parse_element(unique_max, "e1 e2") == monomial_element(unique_max, "u", ["e1", "e2"], "w", [])
    with_pipe = parse_element(unique_max, "e1 e2 | c*")
    assert with_pipe == monomial_element(unique_max, "u", ["e1", "e2"], "w", ["c"])
    assert parse_element(unique_max, "e1 e2 c*") == with_pipe
    assert parse_element(unique_max, "c*") == ghost_element(unique_max, "c")
    combo = parse_element(unique_max, "2/3 e1 - u + f1 | g1*")
    assert combo == (
        monomial_element(unique_max, "u", ["e1"], "v", [], Fraction(2, 3))
        - vertex_element(unique_max, "u")
        + monomial_element(unique_max, "u", ["f1"], "u", ["g1"])
    )
    for x in (combo, with_pipe, v_H_element(omega_graph(), {"w"}, "v")):
        assert parse_element(x.graph, render_element(x)) == x


def test_parse_rejects_garbage(unique_max):
    for text in ("", "unknown", "e1 |", "| |", "e2 e1", "u | c*", "e1 u", "3/0 u"):
        with pytest.raises(GraphError):
            parse_element(unique_max, text)
