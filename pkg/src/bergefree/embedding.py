"""Edge embedding and the per-vertex auxiliary graphs it supports.

For each hyperedge h we place |h|-3 edges on h's vertices as pairwise
vertex-disjoint triangles and single edges, tagging every placed edge with
the id of its hyperedge (its color).  The union over all hyperedges is a
colored multigraph whose edge count equals the hypergraph weight whenever
all hyperedges have at least 3 vertices.

Around a fixed vertex v the module derives the proof objects used to bound
that multigraph:

    G        simple projection induced on N1(v)
    G_aux    x,y in N1(v) joined when some w in N2(v) sees both
    G'_aux   G_aux minus G
    B, B'    the 2-path bipartite graph between N1(v) and N2(v), and its
             subgraph of edges whose N2 endpoint has a second N1 neighbor
    D        a 6-vertex digraph recording hyperedge membership between two
             disjoint triples of colored neighbors of v

plus verifiers that replay, on concrete instances, every structural
statement the objects are supposed to satisfy.  All freeness and counting
checks run on the simple projection; parallel colored edges on a pair are
legal and only multiplicity-blind statements are asserted about them.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .berge import BergeCycleWitness, distinct_representatives, find_berge_cycle
from .core import (
    BipartiteGraph,
    ColoredGraph,
    Digraph,
    Graph,
    Hypergraph,
    iter_bits,
    worker_count,
)
from .patterns import contains_kst


class NotBergeC4FreeError(ValueError):
    """Input to a lemma verifier contains a Berge-C4; carries the witness."""

    def __init__(self, witness: BergeCycleWitness):
        super().__init__(f"input is not Berge-C4-free: {witness.to_json_dict()}")
        self.witness = witness


class NonNeighborError(ValueError):
    """A triple vertex for D has no colored edge to the center vertex."""


class SharedColorError(ValueError):
    """No way to pick six pairwise distinct colors for the two triples."""


# ---------------------------------------------------------------------------
# hyperedge decomposition and the colored graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """Vertex-disjoint triangles and single edges placed inside one hyperedge."""

    triangles: tuple[tuple[int, int, int], ...]
    single_edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "triangles", tuple(tuple(t) for t in self.triangles))
        object.__setattr__(self, "single_edges", tuple(tuple(e) for e in self.single_edges))
        seen: set[int] = set()
        for part in (*self.triangles, *self.single_edges):
            for v in part:
                if v in seen:
                    raise ValueError(f"vertex {v} reused across triangles/edges")
                seen.add(v)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All placed edges: three per triangle, then the single edges."""
        out: list[tuple[int, int]] = []
        for a, b, c in self.triangles:
            out.extend(((a, b), (a, c), (b, c)))
        out.extend(self.single_edges)
        return tuple(out)


def validate_decomposition(hyperedge: Iterable[int], dec: Decomposition) -> None:
    """Raise unless dec is a legal decomposition of the given hyperedge."""
    h = frozenset(hyperedge)
    used = [v for part in (*dec.triangles, *dec.single_edges) for v in part]
    for v in used:
        if v not in h:
            raise ValueError(f"vertex {v} not in the hyperedge")
    t, m = len(dec.triangles), len(dec.single_edges)
    want = max(0, len(h) - 3)
    if 3 * t + m != want:
        raise ValueError(f"decomposition places {3 * t + m} edges, expected {want}")
    if 3 * t + 2 * m > len(h):
        raise ValueError("decomposition uses more vertices than the hyperedge has")


def decompose_hyperedge(hyperedge: Iterable[int]) -> Decomposition:
    """Deterministic decomposition of one hyperedge into triangles and edges.

    With s = |h| >= 4 it uses t = max(0, ceil((s-6)/3)) triangles and
    m = s-3-3t single edges, assigning vertices in ascending order: the
    first 3t form consecutive triples, the next 2m consecutive pairs.
    Hyperedges with s <= 3 embed nothing.
    """
    verts = sorted(set(hyperedge))
    s = len(verts)
    if s <= 3:
        return Decomposition((), ())
    t = max(0, -(-(s - 6) // 3))
    m = s - 3 - 3 * t
    triangles = tuple(
        (verts[3 * i], verts[3 * i + 1], verts[3 * i + 2]) for i in range(t)
    )
    base = 3 * t
    singles = tuple(
        (verts[base + 2 * i], verts[base + 2 * i + 1]) for i in range(m)
    )
    dec = Decomposition(triangles, singles)
    validate_decomposition(verts, dec)
    return dec


def build_embedded_graph(hypergraph: Hypergraph) -> ColoredGraph:
    """Embed every hyperedge and color each placed edge by its hyperedge id."""
    colored: list[tuple[int, int, int]] = []
    for hid, h in enumerate(hypergraph.hyperedges):
        for u, v in decompose_hyperedge(h).edges():
            colored.append((u, v, hid))
    return ColoredGraph(hypergraph.n, tuple(colored))


# ---------------------------------------------------------------------------
# observation check: at most 2 same-colored edges per vertex, closed to a triangle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ObservationReport:
    """Outcome of the same-color degree/closure check on a colored graph."""

    n: int
    colored_edge_count: int
    violations: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "colored_edges": self.colored_edge_count,
            "ok": self.ok,
            "violations": list(self.violations),
        }


def verify_observation1(colored_graph: ColoredGraph) -> ObservationReport:
    """Check per vertex x and color h: at most two incident edges carry h,
    and two same-colored edges xy, xz force the same-colored edge yz."""
    incident: dict[tuple[int, int], list[int]] = {}
    present = set()
    for u, v, color in colored_graph.colored_edges:
        incident.setdefault((u, color), []).append(v)
        incident.setdefault((v, color), []).append(u)
        present.add((u, v, color))
    violations: list[dict] = []
    for (x, color), others in sorted(incident.items()):
        if len(others) > 2:
            violations.append({
                "check": "color_multiplicity",
                "vertex": x,
                "color": color,
                "incident_count": len(others),
            })
        for y, z in combinations(sorted(others), 2):
            if (min(y, z), max(y, z), color) not in present:
                violations.append({
                    "check": "triangle_closure",
                    "vertex": x,
                    "color": color,
                    "missing_edge": [min(y, z), max(y, z)],
                })
    return ObservationReport(
        n=colored_graph.n,
        colored_edge_count=len(colored_graph.colored_edges),
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# per-vertex auxiliary bundle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AuxBundle:
    """The proof objects attached to one vertex v."""

    v: int
    n1: tuple[int, ...]
    n2: tuple[int, ...]
    g: Graph
    g_aux: Graph
    g_aux_prime: Graph
    b: BipartiteGraph
    b_prime: BipartiteGraph
    d: Optional[Digraph] = None


def build_aux_bundle(hypergraph: Hypergraph, colored_graph: ColoredGraph, v: int) -> AuxBundle:
    """Build G, G_aux, G'_aux, B, B' around v from the colored graph.

    Everything is measured on the simple projection; the graphs keep the
    hypergraph's vertex labels (vertices outside N1(v) are just isolated).
    """
    if hypergraph.n != colored_graph.n:
        raise ValueError("hypergraph and colored graph disagree on vertex count")
    proj = colored_graph.simple_projection
    if not 0 <= v < proj.n:
        raise ValueError(f"vertex {v} out of range for n={proj.n}")
    masks = proj.adjacency_masks
    n1_mask = masks[v]
    n1 = tuple(iter_bits(n1_mask))
    n2_mask = 0
    for x in n1:
        n2_mask |= masks[x]
    n2_mask &= ~n1_mask & ~(1 << v)
    n2 = tuple(iter_bits(n2_mask))

    g_edges = set()
    g_aux_edges = set()
    for x, y in combinations(n1, 2):
        if masks[x] >> y & 1:
            g_edges.add((x, y))
        if masks[x] & masks[y] & n2_mask:
            g_aux_edges.add((x, y))
    g = Graph(proj.n, frozenset(g_edges))
    g_aux = Graph(proj.n, frozenset(g_aux_edges))
    g_aux_prime = Graph(proj.n, frozenset(g_aux_edges - g_edges))

    b_edges = set()
    for x in n1:
        for y in iter_bits(masks[x] & n2_mask):
            b_edges.add((x, y))
    b_prime_edges = {
        (x, y) for x, y in b_edges
        if masks[y] & n1_mask & ~(1 << x)
    }
    b = BipartiteGraph(n1, n2, frozenset(b_edges))
    b_prime = BipartiteGraph(n1, n2, frozenset(b_prime_edges))
    return AuxBundle(v=v, n1=n1, n2=n2, g=g, g_aux=g_aux,
                     g_aux_prime=g_aux_prime, b=b, b_prime=b_prime)


def build_D(
    hypergraph: Hypergraph,
    colored_graph: ColoredGraph,
    v: int,
    triple_a: Sequence[int],
    triple_b: Sequence[int],
) -> Digraph:
    """The membership digraph between two disjoint triples of neighbors of v.

    The result has 6 vertices ordered tuple(triple_a) + tuple(triple_b);
    position i maps to the i-th listed vertex.  Each listed vertex u must
    carry a colored edge vu, and a system of six pairwise distinct colors
    h_u must exist (chosen deterministically).  Arc i -> j is present iff
    the vertices sit in different triples and vertex_i is inside the
    hyperedge h_{vertex_j}.
    """
    a = tuple(triple_a)
    b = tuple(triple_b)
    if len(a) != 3 or len(b) != 3:
        raise ValueError("both triples must have exactly 3 vertices")
    order = a + b
    if len(set(order)) != 6:
        raise ValueError("triples must be disjoint and repetition-free")
    color_choices = []
    for u in order:
        colors = colored_graph.colors_of(v, u)
        if not colors:
            raise NonNeighborError(f"vertex {u} has no colored edge to {v}")
        color_choices.append(colors)
    chosen = distinct_representatives(color_choices)
    if chosen is None:
        raise SharedColorError(
            f"no six pairwise distinct colors exist for triples {a} and {b}"
        )
    arcs = set()
    for i, u in enumerate(order):
        for j, w in enumerate(order):
            if (i < 3) == (j < 3):
                continue
            if u in hypergraph.hyperedges[chosen[j]]:
                arcs.add((i, j))
    return Digraph(6, frozenset(arcs))


# ---------------------------------------------------------------------------
# the lemma suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaSuiteReport:
    """Per-vertex counts plus any violated structural assertion."""

    n: int
    checked_vertices: tuple[int, ...]
    k27_free: bool
    k27_witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    rows: tuple[dict, ...]
    violations: tuple[dict, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.k27_free and not self.violations

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "checked_vertices": list(self.checked_vertices),
            "k27_free": self.k27_free,
            "k27_witness": (None if self.k27_witness is None
                            else [list(self.k27_witness[0]), list(self.k27_witness[1])]),
            "ok": self.ok,
            "rows": list(self.rows),
            "violations": list(self.violations),
        }


def _vertex_checks(
    hypergraph: Hypergraph,
    colored_graph: ColoredGraph,
    proj_masks: tuple[int, ...],
    v: int,
) -> tuple[dict, list[dict]]:
    bundle = build_aux_bundle(hypergraph, colored_graph, v)
    d = len(bundle.n1)
    violations: list[dict] = []
    checks: dict[str, bool] = {}

    g_count = len(bundle.g.edges)
    checks["g_size_vs_degree"] = g_count <= 3 * d
    if not checks["g_size_vs_degree"]:
        violations.append({"check": "g_size_vs_degree", "v": v,
                           "g_edges": g_count, "bound": 3 * d})

    gap_count = len(bundle.g_aux_prime.edges)
    k55 = contains_kst(bundle.g_aux_prime, 5, 5)
    checks["k55_freeness"] = k55 is None
    if k55 is not None:
        violations.append({"check": "k55_freeness", "v": v,
                           "parts": [list(k55[0]), list(k55[1])]})
    checks["g_aux_prime_bound"] = d < 1 or gap_count < math.pow(d, 9 / 5)
    if not checks["g_aux_prime_bound"]:
        violations.append({"check": "g_aux_prime_bound", "v": v,
                           "g_aux_prime_edges": gap_count,
                           "bound": math.pow(d, 9 / 5)})

    checks["inclusion"] = True
    for x, y in sorted(bundle.g_aux_prime.edges):
        cx = colored_graph.colors_of(v, x)
        cy = colored_graph.colors_of(v, y)
        admissible = [(hx, hy) for hx in cx for hy in cy if hx != hy]
        if not admissible:
            checks["inclusion"] = False
            violations.append({"check": "inclusion_no_distinct_colors", "v": v,
                               "edge": [x, y], "colors_x": list(cx),
                               "colors_y": list(cy)})
        elif not any(x in hypergraph.hyperedges[hy] or y in hypergraph.hyperedges[hx]
                     for hx, hy in admissible):
            checks["inclusion"] = False
            violations.append({"check": "inclusion", "v": v, "edge": [x, y],
                               "colors_x": list(cx), "colors_y": list(cy)})

    loose = {}
    for x, y in bundle.b.edges - bundle.b_prime.edges:
        loose[y] = loose.get(y, 0) + 1
    checks["b_minus_bprime_degree"] = True
    for y, count in sorted(loose.items()):
        if count > 1:
            checks["b_minus_bprime_degree"] = False
            violations.append({"check": "b_minus_bprime_degree", "v": v,
                               "n2_vertex": y, "incident": count})

    two_paths = sum(proj_masks[x].bit_count() - 1 for x in bundle.n1)
    checks["two_path_count"] = len(bundle.b.edges) + 2 * g_count == two_paths
    if not checks["two_path_count"]:
        violations.append({"check": "two_path_count", "v": v,
                           "b_edges": len(bundle.b.edges), "g_edges": g_count,
                           "two_paths": two_paths})

    row = {
        "v": v,
        "d": d,
        "g_edges": g_count,
        "g_aux_edges": len(bundle.g_aux.edges),
        "g_aux_prime_edges": gap_count,
        "b_edges": len(bundle.b.edges),
        "b_prime_edges": len(bundle.b_prime.edges),
        "checks": checks,
        "ok": not violations,
    }
    return row, violations


def verify_lemma_suite(
    hypergraph: Hypergraph,
    vertices: Optional[Iterable[int]] = None,
    workers: Optional[int] = None,
) -> LemmaSuiteReport:
    """Replay the structural lemma assertions on a Berge-C4-free hypergraph.

    Raises NotBergeC4FreeError (with the witness) if the input has a
    Berge-C4.  Otherwise builds the colored graph and asserts, globally,
    K_{2,7}-freeness of its simple projection, and per checked vertex v:
    |G| <= 3 d(v), K_{5,5}-freeness of G'_aux, |G'_aux| < d(v)^{9/5},
    the color-inclusion rule on G'_aux edges, the one-loose-edge rule on
    N2(v), and the 2-path count identity |B| + 2|G|.
    """
    cycle = find_berge_cycle(hypergraph, 4)
    if cycle is not None:
        raise NotBergeC4FreeError(cycle)
    colored_graph = build_embedded_graph(hypergraph)
    proj = colored_graph.simple_projection
    masks = proj.adjacency_masks

    checked = tuple(sorted(set(range(proj.n) if vertices is None else vertices)))
    for v in checked:
        if not 0 <= v < proj.n:
            raise ValueError(f"vertex {v} out of range for n={proj.n}")

    k27 = contains_kst(proj, 2, 7)
    violations: list[dict] = []
    if k27 is not None:
        violations.append({"check": "k27_freeness",
                           "parts": [list(k27[0]), list(k27[1])]})

    workers = worker_count() if workers is None else max(1, workers)
    if workers == 1 or len(checked) < 2:
        results = [_vertex_checks(hypergraph, colored_graph, masks, v) for v in checked]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda v: _vertex_checks(hypergraph, colored_graph, masks, v),
                checked,
            ))
    rows = []
    for row, vertex_violations in results:
        rows.append(row)
        violations.extend(vertex_violations)
    return LemmaSuiteReport(
        n=hypergraph.n,
        checked_vertices=checked,
        k27_free=k27 is None,
        k27_witness=k27,
        rows=tuple(rows),
        violations=tuple(violations),
    )
