"""Data types and elementary statistics for Berge-C4-free hypergraph work.

Vertices are dense integer indices 0..n-1.  A hypergraph is an ordered list
of vertex sets; the position of a set is its stable hyperedge id, so
multiple copies of the same set stay distinguishable (Berge cycles require
distinct hyperedges, not distinct sets).  All types are frozen after
construction and safe for concurrent reads.

JSON interchange formats:

    Hypergraph    {"n": int, "hyperedges": [[int, ...], ...]}
    Graph         {"n": int, "edges": [[int, int], ...]}
    ColoredGraph  {"n": int, "edges": [[u, v, color], ...]}

Hyperedge order in a file defines the hyperedge id.  Writers emit canonical
documents (vertices sorted inside each hyperedge, edges sorted, fixed key
order) so a write/read/write round trip is byte-stable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Union

HyperedgeId = int


class FormatError(ValueError):
    """A JSON document does not match the interchange schema."""


def iter_bits(mask: int):
    """Yield the set bit positions of a non-negative int, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def worker_count() -> int:
    """Worker cap from the BERGE_THREADS environment variable (default 1)."""
    raw = os.environ.get("BERGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """Multihypergraph on vertices 0..n-1; hyperedge id = position."""

    n: int
    hyperedges: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        edges = tuple(frozenset(h) for h in self.hyperedges)
        object.__setattr__(self, "hyperedges", edges)
        for i, h in enumerate(edges):
            for v in h:
                if not 0 <= v < self.n:
                    raise ValueError(
                        f"hyperedge {i} contains vertex {v}, out of range for n={self.n}"
                    )

    def __len__(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def pair_cover(self) -> dict[tuple[int, int], tuple[HyperedgeId, ...]]:
        """Map from a sorted vertex pair to the ids of hyperedges containing it."""
        cover: dict[tuple[int, int], list[int]] = {}
        for hid, h in enumerate(self.hyperedges):
            for pair in combinations(sorted(h), 2):
                cover.setdefault(pair, []).append(hid)
        return {pair: tuple(ids) for pair, ids in cover.items()}

    def to_json_dict(self) -> dict:
        return {"n": self.n, "hyperedges": [sorted(h) for h in self.hyperedges]}

    @classmethod
    def from_json_dict(cls, doc: object) -> "Hypergraph":
        if not isinstance(doc, dict):
            raise FormatError(f"expected a JSON object, got {type(doc).__name__}")
        if "n" not in doc or "hyperedges" not in doc:
            raise FormatError('hypergraph document needs fields "n" and "hyperedges"')
        n = _as_int(doc["n"], "n")
        raw = doc["hyperedges"]
        if not isinstance(raw, list):
            raise FormatError('field "hyperedges" must be a list of vertex lists')
        edges = []
        for i, item in enumerate(raw):
            if not isinstance(item, list):
                raise FormatError(f"hyperedges[{i}]: expected a list of vertices")
            verts = [_as_int(v, f"hyperedges[{i}][{j}]") for j, v in enumerate(item)]
            if len(set(verts)) != len(verts):
                raise FormatError(f"hyperedges[{i}]: repeated vertex in {verts}")
            edges.append(frozenset(verts))
        try:
            return cls(n, tuple(edges))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc


def _as_int(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _normalize_edge(edge, n: int, what: str) -> tuple[int, int]:
    u, v = edge
    if u == v:
        raise ValueError(f"{what} ({u},{v}) is a loop")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"{what} ({u},{v}) out of range for n={n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 (no loops, no parallels)."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        norm = frozenset(_normalize_edge(e, self.n, "edge") for e in self.edges)
        object.__setattr__(self, "edges", norm)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return self.adjacency_masks[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adjacency_masks[v]))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": sorted([u, v] for u, v in self.edges)}

    @classmethod
    def from_json_dict(cls, doc: object) -> "Graph":
        if not isinstance(doc, dict):
            raise FormatError(f"expected a JSON object, got {type(doc).__name__}")
        if "n" not in doc or "edges" not in doc:
            raise FormatError('graph document needs fields "n" and "edges"')
        n = _as_int(doc["n"], "n")
        raw = doc["edges"]
        if not isinstance(raw, list):
            raise FormatError('field "edges" must be a list of [u, v] pairs')
        edges = []
        for i, item in enumerate(raw):
            if not isinstance(item, list) or len(item) != 2:
                raise FormatError(f"edges[{i}]: expected a pair [u, v]")
            edges.append((_as_int(item[0], f"edges[{i}][0]"),
                          _as_int(item[1], f"edges[{i}][1]")))
        try:
            return cls(n, frozenset(edges))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc


@dataclass(frozen=True)
class ColoredGraph:
    """Multigraph whose edges carry a hyperedge-id color.

    Stored as flat (u, v, color) triples with u < v.  Parallel edges are
    allowed only with distinct colors; the builder in the embedding module
    guarantees that both endpoints of every colored edge lie inside the
    source hyperedge named by the color.
    """

    n: int
    colored_edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        norm = []
        seen = set()
        for u, v, color in self.colored_edges:
            u, v = _normalize_edge((u, v), self.n, "colored edge")
            if color < 0:
                raise ValueError(f"colored edge ({u},{v}) has negative color {color}")
            if (u, v, color) in seen:
                raise ValueError(f"duplicate colored edge ({u},{v}) with color {color}")
            seen.add((u, v, color))
            norm.append((u, v, color))
        object.__setattr__(self, "colored_edges", tuple(norm))

    @cached_property
    def pair_colors(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for u, v, color in self.colored_edges:
            out.setdefault((u, v), []).append(color)
        return {pair: tuple(sorted(cs)) for pair, cs in out.items()}

    def colors_of(self, u: int, v: int) -> tuple[int, ...]:
        """Colors carried by the pair uv (empty if not an edge)."""
        key = (u, v) if u < v else (v, u)
        return self.pair_colors.get(key, ())

    @cached_property
    def simple_projection(self) -> Graph:
        """The simple graph obtained by forgetting colors and multiplicity."""
        return Graph(self.n, frozenset((u, v) for u, v, _ in self.colored_edges))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v, c] for u, v, c in self.colored_edges]}

    @classmethod
    def from_json_dict(cls, doc: object) -> "ColoredGraph":
        if not isinstance(doc, dict):
            raise FormatError(f"expected a JSON object, got {type(doc).__name__}")
        if "n" not in doc or "edges" not in doc:
            raise FormatError('colored graph document needs fields "n" and "edges"')
        n = _as_int(doc["n"], "n")
        raw = doc["edges"]
        if not isinstance(raw, list):
            raise FormatError('field "edges" must be a list of [u, v, color] triples')
        triples = []
        for i, item in enumerate(raw):
            if not isinstance(item, list) or len(item) != 3:
                raise FormatError(f"edges[{i}]: expected a triple [u, v, color]")
            triples.append(tuple(_as_int(x, f"edges[{i}][{j}]")
                                 for j, x in enumerate(item)))
        try:
            return cls(n, tuple(triples))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with explicit (disjoint) parts and cross edges only."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        left = tuple(self.left)
        right = tuple(self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        lset, rset = set(left), set(right)
        if len(lset) != len(left) or len(rset) != len(right):
            raise ValueError("parts must not repeat vertices")
        if lset & rset:
            raise ValueError(f"parts overlap on {sorted(lset & rset)}")
        edges = frozenset(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for a, b in edges:
            if a not in lset or b not in rset:
                raise ValueError(f"edge ({a},{b}) does not go from left to right")

    def to_graph(self) -> Graph:
        """Forget the bipartition; vertex labels are kept as-is."""
        n = max(self.left + self.right, default=-1) + 1
        return Graph(n, frozenset(self.edges))


@dataclass(frozen=True)
class Digraph:
    """Directed graph, no self-arcs, no duplicate arcs."""

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        arcs = frozenset(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-arc at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)


GraphLike = Union[Graph, ColoredGraph]


# ---------------------------------------------------------------------------
# elementary statistics
# ---------------------------------------------------------------------------

def weight(hypergraph: Hypergraph) -> int:
    """Sum of (|h| - 3) over all hyperedges; may be negative, never clamped."""
    return sum(len(h) - 3 for h in hypergraph.hyperedges)


def shadow(hypergraph: Hypergraph) -> Graph:
    """Simple graph with an edge xy iff some hyperedge contains both x and y."""
    edges = set()
    for h in hypergraph.hyperedges:
        edges.update(combinations(sorted(h), 2))
    return Graph(hypergraph.n, frozenset(edges))


def _projection(graph_like: GraphLike) -> Graph:
    if isinstance(graph_like, ColoredGraph):
        return graph_like.simple_projection
    return graph_like


def neighborhoods(graph_like: GraphLike, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """First and second neighborhood of v: (N1, N2).

    N1 holds the vertices adjacent to v, N2 those at distance exactly two.
    A ColoredGraph is measured through its simple projection.
    """
    graph = _projection(graph_like)
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range for n={graph.n}")
    masks = graph.adjacency_masks
    n1_mask = masks[v]
    n2_mask = 0
    for x in iter_bits(n1_mask):
        n2_mask |= masks[x]
    n2_mask &= ~n1_mask & ~(1 << v)
    return frozenset(iter_bits(n1_mask)), frozenset(iter_bits(n2_mask))


def degree_stats(graph: Graph) -> tuple[list[int], float]:
    """Degree sequence and average degree 2|E|/n.  Undefined for n=0."""
    if graph.n == 0:
        raise ValueError("average degree is undefined for a graph on 0 vertices")
    degrees = [graph.degree(v) for v in range(graph.n)]
    return degrees, 2 * len(graph.edges) / graph.n


# ---------------------------------------------------------------------------
# canonical JSON plumbing
# ---------------------------------------------------------------------------

def dumps_canonical(doc: dict) -> str:
    """Single-line canonical JSON, trailing newline; byte-stable."""
    return json.dumps(doc, separators=(",", ":")) + "\n"


def loads_document(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def load_hypergraph(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return Hypergraph.from_json_dict(loads_document(fh.read()))


def save_hypergraph(hypergraph: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(hypergraph.to_json_dict()))
