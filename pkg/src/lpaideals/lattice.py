"""The lattice of hereditary saturated vertex sets, and its ideal data.

A vertex set is hereditary when it is closed under moving forward along
edges (bundle targets included), and saturated when it contains every
regular vertex all of whose edge targets it contains.  These sets,
ordered by inclusion, index the graded ideals via admissible pairs
(H, S) with S a set of breaking vertices of H.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    DirectedGraph,
    Edge,
    GraphError,
    OmegaBundle,
    ResourceCapError,
    VertexKind,
)

DEFAULT_LATTICE_CAP = 1_000_000
MAX_EXACT_VERTICES = 20

PRIME_MARK = "'"


def is_hereditary(g: DirectedGraph, subset) -> bool:
    vs = g.require_vertices(subset)
    return all(g.successors(v) <= vs for v in vs)


def is_saturated(g: DirectedGraph, subset) -> bool:
    vs = g.require_vertices(subset)
    for v in g.vertices:
        if v in vs or g.vertex_kind(v) is not VertexKind.REGULAR:
            continue
        if all(e.dst in vs for e in g.out_edges(v)):
            return False
    return True


def hereditary_closure(g: DirectedGraph, subset) -> frozenset[str]:
    """Least hereditary superset: forward reachability closure."""
    vs = g.require_vertices(subset)
    out: set[str] = set()
    for v in vs:
        out |= g.descendants(v)
    return frozenset(out)


def _saturate(g: DirectedGraph, closed: frozenset[str]) -> frozenset[str]:
    current = set(closed)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in current or g.vertex_kind(v) is not VertexKind.REGULAR:
                continue
            if all(e.dst in current for e in g.out_edges(v)):
                current.add(v)
                changed = True
    return frozenset(current)


def hs_closure(g: DirectedGraph, subset) -> frozenset[str]:
    """Least hereditary and saturated superset (a closure operator)."""
    current = g.require_vertices(subset)
    while True:
        nxt = _saturate(g, hereditary_closure(g, current))
        if nxt == current:
            return current
        current = nxt


@dataclass(frozen=True)
class HSLattice:
    """All hereditary saturated sets of a graph, canonically ordered."""

    graph: DirectedGraph
    sets: tuple[frozenset[str], ...]

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in set(self.sets)

    def join(self, a, b) -> frozenset[str]:
        return hs_closure(self.graph, frozenset(a) | frozenset(b))

    def to_json_dict(self) -> dict:
        return {
            "sets": [sorted(s) for s in self.sets],
            "maximal_proper": [sorted(s) for s in maximal_proper_elements(self)],
        }


def enumerate_HE(
    g: DirectedGraph,
    cap: int = DEFAULT_LATTICE_CAP,
    max_vertices: int = MAX_EXACT_VERTICES,
) -> HSLattice:
    """Exactly all hereditary saturated sets, via join-closure of the
    closures of singletons.  Refuses graphs above ``max_vertices`` and
    lattices above ``cap`` rather than approximating.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if len(g.vertices) > max_vertices:
        raise ResourceCapError(
            f"exact enumeration limited to {max_vertices} vertices, graph has {len(g.vertices)}"
        )
    atoms = sorted({hs_closure(g, {v}) for v in g.vertices}, key=sorted)
    found: set[frozenset[str]] = {frozenset()} | set(atoms)
    if len(found) > cap:
        raise ResourceCapError(f"lattice exceeds cap {cap}")
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        for atom in atoms:
            if atom <= current:
                continue
            joined = hs_closure(g, current | atom)
            if joined not in found:
                found.add(joined)
                if len(found) > cap:
                    raise ResourceCapError(f"lattice exceeds cap {cap}")
                frontier.append(joined)
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    return HSLattice(g, tuple(ordered))


def maximal_proper_elements(lat: HSLattice) -> list[frozenset[str]]:
    """All H with H != E^0 and nothing strictly between H and E^0."""
    full = frozenset(lat.graph.vertices)
    proper = [s for s in lat.sets if s != full]
    return [s for s in proper if not any(s < t for t in proper)]


def breaking_vertices(g: DirectedGraph, subset) -> frozenset[str]:
    """Breaking vertices of a hereditary saturated set H: infinite
    emitters outside H whose edges leaving H are named, at least one,
    and finitely many (so every bundle must land in H).
    """
    hset = g.require_vertices(subset)
    if not (is_hereditary(g, hset) and is_saturated(g, hset)):
        raise GraphError("set is not hereditary saturated")
    out = set()
    for w in g.vertices:
        if w in hset or g.vertex_kind(w) is not VertexKind.INFINITE_EMITTER:
            continue
        if any(b.dst not in hset for b in g.out_bundles(w)):
            continue
        if any(e.dst not in hset for e in g.out_edges(w)):
            out.add(w)
    return frozenset(out)


@dataclass(frozen=True)
class AdmissiblePair:
    """(H, S) with H hereditary saturated and S a set of breaking
    vertices of H; stands for the graded ideal generated by H and the
    elements v^H, v in S.
    """

    graph: DirectedGraph = field(repr=False)
    H: frozenset[str]
    S: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "H", frozenset(self.H))
        object.__setattr__(self, "S", frozenset(self.S))
        bad = self.S - breaking_vertices(self.graph, self.H)
        if bad:
            raise GraphError(f"not breaking vertices of H: {sorted(bad)}")

    def to_json_dict(self) -> dict:
        return {"H": sorted(self.H), "S": sorted(self.S)}


def leq_prime(p1: AdmissiblePair, p2: AdmissiblePair) -> bool:
    """The ideal-inclusion order: H1 within H2 and S1 within H2 union S2."""
    if p1.graph != p2.graph:
        raise GraphError("admissible pairs belong to different graphs")
    return p1.H <= p2.H and p1.S <= (p2.H | p2.S)


def quotient_graph(g: DirectedGraph, pair: AdmissiblePair) -> DirectedGraph:
    """The quotient graph at (H, S).

    Vertices outside H survive; every unbroken breaking vertex v (in
    B_H but not in S) additionally gets a primed sink copy v'.  Edges
    and bundles into H disappear; edges and bundles into an unbroken
    breaking vertex are doubled by a primed copy landing on the sink.
    """
    if g != pair.graph:
        raise GraphError("pair was built for a different graph")
    hset = pair.H
    unbroken = breaking_vertices(g, hset) - pair.S
    primed = {v: v + PRIME_MARK for v in unbroken}
    kept = [v for v in g.vertices if v not in hset]
    if not kept:
        raise GraphError("quotient at the full vertex set would be the empty graph")
    collisions = set(primed.values()) & set(kept)
    if collisions:
        raise GraphError(f"primed vertex ids collide with existing ids: {sorted(collisions)}")

    edges: list[Edge] = []
    for e in g.edges:
        if e.dst in hset:
            continue
        edges.append(e)
        if e.dst in primed:
            primed_id = e.id + PRIME_MARK
            if g.has_edge_id(primed_id):
                raise GraphError(f"primed edge id {primed_id!r} collides with an existing edge")
            edges.append(Edge(primed_id, e.src, primed[e.dst]))
    bundles: list[OmegaBundle] = []
    for b in g.omega_bundles:
        if b.dst in hset:
            continue
        bundles.append(b)
        if b.dst in primed:
            bundles.append(OmegaBundle(b.src, primed[b.dst]))
    return DirectedGraph(tuple(kept) + tuple(primed.values()), tuple(edges), tuple(bundles))
