"""Prime and maximal ideal classification over the graded-ideal lattice.

Ideals are described symbolically: a graded ideal is an admissible pair
(H, S); a non-graded prime/maximal ideal only ever occurs in an
infinite family I(H, B_H) + <f(c)> indexed by an irreducible Laurent
polynomial f, so such a family is reported once, as the pair of its
hereditary saturated set and its witness cycle, with the polynomial
kept as an opaque token.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import (
    DEFAULT_CYCLE_CAP,
    Cycle,
    _has_exit_unchecked,
    condition_L,
    cycles_without_K,
    is_downward_directed,
    make_cycle,
    simple_cycles,
)
from .graph import DirectedGraph, GraphError
from .lattice import (
    DEFAULT_LATTICE_CAP,
    MAX_EXACT_VERTICES,
    AdmissiblePair,
    breaking_vertices,
    enumerate_HE,
    is_hereditary,
    is_saturated,
    maximal_proper_elements,
    quotient_graph,
)

POLY_TOKEN = "irreducible f in K[x,x^-1]"


@dataclass(frozen=True)
class GradedIdeal:
    pair: AdmissiblePair

    def to_json_dict(self) -> dict:
        return {"kind": "graded", **self.pair.to_json_dict()}


@dataclass(frozen=True)
class NonGradedFamily:
    """All ideals I(H, B_H) + <f(c)>, one per irreducible polynomial f."""

    graph: DirectedGraph = field(repr=False)
    H: frozenset[str]
    cycle: Cycle
    poly: str = POLY_TOKEN

    def __post_init__(self):
        object.__setattr__(self, "H", frozenset(self.H))
        g = self.graph
        if not (is_hereditary(g, self.H) and is_saturated(g, self.H)):
            raise GraphError("H is not hereditary saturated")
        if self.cycle not in cycles_without_K(g):
            raise GraphError("cycle is not a cycle without K of this graph")
        if set(self.cycle.vertices) & self.H:
            raise GraphError("cycle meets H")

    def to_json_dict(self) -> dict:
        return {
            "kind": "nongraded_family",
            "H": sorted(self.H),
            "cycle": list(self.cycle.edges),
            "poly": self.poly,
        }


IdealDescriptor = GradedIdeal | NonGradedFamily


def descriptor_sort_key(d: IdealDescriptor):
    if isinstance(d, GradedIdeal):
        return (sorted(d.pair.H), 0, sorted(d.pair.S))
    return (sorted(d.H), 1, list(d.cycle.edges))


def classify_prime(g: DirectedGraph, d: IdealDescriptor) -> bool:
    """Decide primeness by the trichotomy over (H, S) shape and cycles.

    Graded descriptors must come with S = B_H or S = B_H minus one
    vertex; anything else is rejected as malformed.  The improper pair
    (E^0, empty) is not a prime ideal.
    """
    full = frozenset(g.vertices)
    if isinstance(d, GradedIdeal):
        pair = d.pair
        if pair.graph != g:
            raise GraphError("descriptor was built for a different graph")
        if pair.H == full:
            return False
        complement = full - pair.H
        b_h = breaking_vertices(g, pair.H)
        if pair.S == b_h:
            return is_downward_directed(g, complement)
        missing = b_h - pair.S
        if len(missing) != 1:
            raise GraphError("graded descriptor needs S = B_H or S = B_H minus one vertex")
        (u,) = missing
        return complement == g.m_of(u)
    if isinstance(d, NonGradedFamily):
        if d.graph != g:
            raise GraphError("descriptor was built for a different graph")
        return full - d.H == g.m_of(d.cycle.base)
    raise GraphError(f"not an ideal descriptor: {d!r}")


def gr_of(d: IdealDescriptor) -> AdmissiblePair:
    """The largest graded ideal inside the described ideal."""
    if isinstance(d, GradedIdeal):
        return d.pair
    if isinstance(d, NonGradedFamily):
        return AdmissiblePair(d.graph, d.H, breaking_vertices(d.graph, d.H))
    raise GraphError(f"not an ideal descriptor: {d!r}")


def enumerate_primes(
    g: DirectedGraph,
    cap: int = DEFAULT_LATTICE_CAP,
    max_vertices: int = MAX_EXACT_VERTICES,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> list[IdealDescriptor]:
    """All prime-ideal descriptors, one entry per non-graded family."""
    lat = enumerate_HE(g, cap, max_vertices)
    without_k = cycles_without_K(g, cycle_cap)
    full = frozenset(g.vertices)
    out: list[IdealDescriptor] = []
    for hset in lat.sets:
        if hset == full:
            continue
        complement = full - hset
        b_h = breaking_vertices(g, hset)
        if is_downward_directed(g, complement):
            out.append(GradedIdeal(AdmissiblePair(g, hset, b_h)))
        for u in sorted(b_h):
            if complement == g.m_of(u):
                out.append(GradedIdeal(AdmissiblePair(g, hset, b_h - {u})))
        for c in without_k:
            if not (set(c.vertices) & hset) and complement == g.m_of(c.base):
                out.append(NonGradedFamily(g, hset, c))
    out.sort(key=descriptor_sort_key)
    return out


def maximal_graded_ideals(
    g: DirectedGraph,
    cap: int = DEFAULT_LATTICE_CAP,
    max_vertices: int = MAX_EXACT_VERTICES,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> list[AdmissiblePair]:
    """Pairs (H, B_H) with H maximal proper whose quotient satisfies (L)."""
    lat = enumerate_HE(g, cap, max_vertices)
    out = []
    for hset in maximal_proper_elements(lat):
        pair = AdmissiblePair(g, hset, breaking_vertices(g, hset))
        if condition_L(quotient_graph(g, pair), cycle_cap).holds:
            out.append(pair)
    out.sort(key=lambda p: (sorted(p.H), sorted(p.S)))
    return out


def maximal_nongraded_families(
    g: DirectedGraph,
    cap: int = DEFAULT_LATTICE_CAP,
    max_vertices: int = MAX_EXACT_VERTICES,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> list[NonGradedFamily]:
    """One family per maximal proper H and exitless cycle of its quotient.

    Exitless quotient cycles use only surviving named edges, so each
    one is literally a cycle of the original graph as well, and it is
    automatically a cycle without K there.
    """
    lat = enumerate_HE(g, cap, max_vertices)
    out = []
    for hset in maximal_proper_elements(lat):
        pair = AdmissiblePair(g, hset, breaking_vertices(g, hset))
        quotient = quotient_graph(g, pair)
        report = condition_L(quotient, cycle_cap)
        if report.holds:
            continue
        for c in simple_cycles(quotient, cycle_cap):
            if not _has_exit_unchecked(quotient, c):
                out.append(NonGradedFamily(g, hset, make_cycle(g, c.edges)))
    out.sort(key=lambda f: (sorted(f.H), f.cycle.edges))
    return out


@dataclass(frozen=True)
class MaximalityReport:
    graded_maximals: tuple[AdmissiblePair, ...]
    nongraded_maximal_families: tuple[NonGradedFamily, ...]
    exists_maximal: bool
    every_ideal_below_maximal: bool
    every_maximal_graded: bool
    unique_maximal: GradedIdeal | None

    def to_json_dict(self) -> dict:
        return {
            "graded_maximals": [p.to_json_dict() for p in self.graded_maximals],
            "nongraded_maximal_families": [
                {"H": sorted(f.H), "cycle": list(f.cycle.edges)}
                for f in self.nongraded_maximal_families
            ],
            "exists_maximal": self.exists_maximal,
            "every_ideal_below_maximal": self.every_ideal_below_maximal,
            "every_maximal_graded": self.every_maximal_graded,
            "unique_maximal": (
                None if self.unique_maximal is None else self.unique_maximal.to_json_dict()
            ),
        }


def existence_report(
    g: DirectedGraph,
    cap: int = DEFAULT_LATTICE_CAP,
    max_vertices: int = MAX_EXACT_VERTICES,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> MaximalityReport:
    """Aggregate maximal-ideal structure of the graph's algebra.

    On a finite graph a maximal ideal always exists and every proper
    ideal sits below one; both facts are still computed from the
    definitions so the predicates stay visible in the output.
    """
    lat = enumerate_HE(g, cap, max_vertices)
    maximal = maximal_proper_elements(lat)
    full = frozenset(g.vertices)
    graded = tuple(maximal_graded_ideals(g, cap, max_vertices, cycle_cap))
    families = tuple(maximal_nongraded_families(g, cap, max_vertices, cycle_cap))
    every_below = all(
        any(x <= z for z in maximal) for x in lat.sets if x != full
    )
    unique = None
    if len(graded) == 1 and not families:
        unique = GradedIdeal(graded[0])
    return MaximalityReport(
        graded_maximals=graded,
        nongraded_maximal_families=families,
        exists_maximal=bool(maximal),
        every_ideal_below_maximal=every_below,
        every_maximal_graded=not families,
        unique_maximal=unique,
    )
