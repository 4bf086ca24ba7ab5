"""Dense Berge-C4-free constructions and the asymptotic comparators.

The lower-bound family starts from the point-line incidence graph of the
projective plane of prime order q: a bipartite, (q+1)-regular, C4-free
graph on 2(q^2+q+1) vertices with (q^2+q+1)(q+1) edges (girth 6).  Blowing
every vertex up into 3 identical copies turns each edge into a 6-vertex
hyperedge; the resulting 6-uniform hypergraph is Berge-C4-free whenever the
base graph has neither a C3 nor a C4, and its weight is 3 |E(G)|.

Only prime orders are generated; prime-power fields are out of scope and
primes already realize the asymptotic edge density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .berge import find_c4_in_graph, find_triangle
from .core import BipartiteGraph, Graph, Hypergraph, weight


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PlaneIncidence:
    """Point-line incidence of the projective plane of prime order q.

    Points and lines are nonzero coordinate triples over the q-element
    field, normalized so the first nonzero coordinate is 1.  In the
    incidence graph, point i is vertex i and line j is vertex N + j with
    N = q^2 + q + 1.
    """

    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]
    incidence: BipartiteGraph

    def graph(self) -> Graph:
        return self.incidence.to_graph()


def _projective_triples(q: int) -> list[tuple[int, int, int]]:
    triples = [(1, a, b) for a in range(q) for b in range(q)]
    triples.extend((0, 1, b) for b in range(q))
    triples.append((0, 0, 1))
    return triples


def projective_plane_incidence(q: int, verify_c4_free: bool = False) -> PlaneIncidence:
    """Incidence graph of PG(2, q) for prime q.

    A point P lies on a line L iff the dot product P . L vanishes mod q.
    With verify_c4_free=True the full pair scan re-checks that no C4 slipped
    in (it never should; a failure raises AssertionError).
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime (prime powers unsupported), got {q}")
    reps = _projective_triples(q)
    count = q * q + q + 1
    edges = set()
    for i, p in enumerate(reps):
        for j, line in enumerate(reps):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.add((i, count + j))
    incidence = BipartiteGraph(
        left=tuple(range(count)),
        right=tuple(range(count, 2 * count)),
        edges=frozenset(edges),
    )
    plane = PlaneIncidence(q=q, points=tuple(reps), lines=tuple(reps), incidence=incidence)
    if verify_c4_free:
        cycle = find_c4_in_graph(plane.graph())
        if cycle is not None:
            raise AssertionError(f"incidence graph of order {q} contains a C4: {cycle}")
    return plane


def blow_up(graph: Graph, r: int) -> Hypergraph:
    """Replace each vertex u by r copies r*u..r*u+r-1; each edge uv becomes
    the 2r-vertex hyperedge copies(u) | copies(v).  Hyperedge order follows
    the sorted edge list of the graph."""
    if r < 1:
        raise ValueError(f"blow-up factor must be >= 1, got {r}")
    hyperedges = []
    for u, v in sorted(graph.edges):
        copies = frozenset(range(r * u, r * u + r)) | frozenset(range(r * v, r * v + r))
        hyperedges.append(copies)
    return Hypergraph(r * graph.n, tuple(hyperedges))


@dataclass(frozen=True)
class BlowupCertificate:
    """Verdict of the triangle/C4 scan that licenses the 3-fold blow-up.

    If the base graph has neither a C3 nor a C4, any Berge-C4 in the
    blow-up would force copies of >= 3 distinct base vertices (giving a C3
    or C4 downstairs) or two equal hyperedges; so certified=True means the
    blow-up is Berge-C4-free.
    """

    certified: bool
    obstruction_kind: Optional[str] = None  # "triangle" | "four_cycle"
    obstruction: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        return {
            "certified": self.certified,
            "obstruction_kind": self.obstruction_kind,
            "obstruction": None if self.obstruction is None else list(self.obstruction),
        }


def certify_blowup_free(graph: Graph) -> BlowupCertificate:
    """Certify that blow_up(graph, 3) is Berge-C4-free, or return the
    offending C3/C4 of the base graph."""
    triangle = find_triangle(graph)
    if triangle is not None:
        return BlowupCertificate(False, "triangle", triangle)
    cycle = find_c4_in_graph(graph)
    if cycle is not None:
        return BlowupCertificate(False, "four_cycle", cycle)
    return BlowupCertificate(True)


class LowerBoundConstruction(NamedTuple):
    hypergraph: Hypergraph
    achieved_ratio: float
    q: int
    weight: int


def largest_fitting_prime(n: int) -> Optional[int]:
    """Largest prime q with 6(q^2+q+1) <= n, or None."""
    best = None
    q = 2
    while 6 * (q * q + q + 1) <= n:
        if is_prime(q):
            best = q
        q += 1
    return best


def lower_bound_construction(n: int) -> LowerBoundConstruction:
    """Best plane blow-up fitting on n vertices, padded with isolated
    vertices; reports weight / n^{3/2} as the achieved ratio."""
    q = largest_fitting_prime(n)
    if q is None:
        raise ValueError(f"need n >= 42 for the smallest plane blow-up, got {n}")
    plane = projective_plane_incidence(q)
    blown = blow_up(plane.graph(), 3)
    padded = Hypergraph(n, blown.hyperedges)
    w = weight(padded)
    return LowerBoundConstruction(padded, w / n ** 1.5, q, w)


def theoretical_bounds(n: int) -> tuple[float, float]:
    """Asymptotic comparators (upper, lower) for the extremal weight at n;
    o(1) terms are dropped, so these are labels, not guarantees."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    scale = n ** 1.5
    return 0.5 * scale, scale / (2 * math.sqrt(6))
