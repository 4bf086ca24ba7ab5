"""Berge cycle detection with verifiable witnesses.

A Berge cycle of length k alternates k distinct vertices and k distinct
hyperedges v1,h1,v2,h2,...,vk,hk with {v_i, v_{i+1}} inside h_i and
{v_k, v_1} inside h_k.  Detection enumerates candidate vertex cycles on the
shadow graph, one representative per dihedral class (v1 is the minimum
vertex, oriented so v2 < vk), and then asks whether the k pair-slots admit
k distinct covering hyperedges -- a system of distinct representatives over
the slot-to-hyperedge bipartite graph, decided by backtracking.

Every witness a search returns is re-validated against the definition
before it is handed out, independently of how it was found.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .core import Graph, Hypergraph, iter_bits, shadow


@dataclass(frozen=True)
class BergeCycleWitness:
    """Alternating vertex/hyperedge sequence certifying a Berge-Ck."""

    vertices: tuple[int, ...]
    hyperedges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "hyperedges", tuple(self.hyperedges))
        if len(self.vertices) != len(self.hyperedges):
            raise ValueError("witness needs as many hyperedges as vertices")

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "hyperedges": list(self.hyperedges)}


def validate_witness(hypergraph: Hypergraph, witness: BergeCycleWitness) -> None:
    """Check a witness against the Berge-cycle definition; raise if invalid."""
    k = len(witness.vertices)
    if k < 2:
        raise ValueError("a Berge cycle has length at least 2")
    if len(set(witness.vertices)) != k:
        raise ValueError(f"vertices not distinct: {witness.vertices}")
    if len(set(witness.hyperedges)) != k:
        raise ValueError(f"hyperedges not distinct: {witness.hyperedges}")
    for i in range(k):
        u = witness.vertices[i]
        v = witness.vertices[(i + 1) % k]
        hid = witness.hyperedges[i]
        if not 0 <= hid < len(hypergraph.hyperedges):
            raise ValueError(f"hyperedge id {hid} out of range")
        h = hypergraph.hyperedges[hid]
        if u not in h or v not in h:
            raise ValueError(f"pair ({u},{v}) not inside hyperedge {hid}")


def distinct_representatives(slot_candidates: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """Pick one id per slot, all distinct; smallest-domain-first backtracking.

    Returns the chosen ids indexed by slot, or None when no system of
    distinct representatives exists.  Deterministic for fixed input.
    """
    k = len(slot_candidates)
    order = sorted(range(k), key=lambda i: (len(slot_candidates[i]), i))
    chosen: list[int] = [-1] * k
    used: set[int] = set()

    def place(pos: int) -> bool:
        if pos == k:
            return True
        slot = order[pos]
        for hid in slot_candidates[slot]:
            if hid not in used:
                used.add(hid)
                chosen[slot] = hid
                if place(pos + 1):
                    return True
                used.remove(hid)
        return False

    return chosen if place(0) else None


def find_berge_cycle(hypergraph: Hypergraph, k: int) -> Optional[BergeCycleWitness]:
    """First Berge-Ck of the hypergraph in canonical order, or None.

    Canonical order: cycles are keyed by their vertex sequence with the
    minimum vertex first and v2 < vk; sequences are generated
    lexicographically, so the returned witness is deterministic.
    """
    if k < 2:
        raise ValueError(f"Berge cycle length must be >= 2, got {k}")
    n = hypergraph.n
    m = len(hypergraph.hyperedges)
    if k > n or k > m:
        return None

    cover = hypergraph.pair_cover
    adj = shadow(hypergraph).adjacency_masks
    cover_masks = {pair: _ids_mask(ids) for pair, ids in cover.items()}

    path = [0] * k

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def extend(depth: int, used_mask: int, allowed: int, union_mask: int) -> Optional[BergeCycleWitness]:
        # path[0..depth-1] fixed; union_mask covers the depth-1 slots so far.
        last = path[depth - 1]
        if depth == k:
            v1 = path[0]
            if not (adj[last] >> v1) & 1:
                return None
            if k > 2 and path[1] > last:
                return None  # orientation: keep only v2 < vk
            closing = key(last, v1)
            if (union_mask | cover_masks[closing]).bit_count() < k:
                return None
            slots = [key(path[i], path[i + 1]) for i in range(k - 1)] + [closing]
            assignment = distinct_representatives([cover[s] for s in slots])
            if assignment is None:
                return None
            witness = BergeCycleWitness(tuple(path), tuple(assignment))
            validate_witness(hypergraph, witness)
            return witness
        for w in iter_bits(adj[last] & allowed & ~used_mask):
            slot_mask = cover_masks[key(last, w)]
            new_union = union_mask | slot_mask
            if new_union.bit_count() < depth:
                continue  # fewer distinct hyperedges than slots: dead prefix
            path[depth] = w
            found = extend(depth + 1, used_mask | (1 << w), allowed, new_union)
            if found is not None:
                return found
        return None

    for v1 in range(n):
        allowed = ~((1 << (v1 + 1)) - 1)  # cycle vertices other than v1 exceed it
        path[0] = v1
        found = extend(1, 1 << v1, allowed, 0)
        if found is not None:
            return found
    return None


def _ids_mask(ids: Sequence[int]) -> int:
    mask = 0
    for hid in ids:
        mask |= 1 << hid
    return mask


def is_berge_c4_free(hypergraph: Hypergraph) -> bool:
    """True iff the hypergraph contains no Berge-C4."""
    return find_berge_cycle(hypergraph, 4) is None


def naive_berge_oracle(
    hypergraph: Hypergraph,
    k: int,
    max_vertices: int = 12,
    max_hyperedges: int = 12,
) -> Optional[BergeCycleWitness]:
    """Brute-force Berge-Ck search used as a cross-validation oracle.

    Enumerates every ordered k-tuple of distinct vertices and, per tuple,
    the ordered k-tuples of distinct hyperedges position by position
    (a slot prefix is abandoned as soon as its pair escapes the candidate
    hyperedge, which never changes the verdict).  Intended for tiny
    instances only; the size guard is there to keep misuse loud.
    """
    if k < 2:
        raise ValueError(f"Berge cycle length must be >= 2, got {k}")
    n = hypergraph.n
    m = len(hypergraph.hyperedges)
    if n > max_vertices or m > max_hyperedges:
        raise ValueError(
            f"instance too large for the naive oracle (n={n}, m={m}, "
            f"guard n<={max_vertices}, m<={max_hyperedges})"
        )
    if k > n or k > m:
        return None

    hyperedges = hypergraph.hyperedges
    chosen = [0] * k

    def assign(pos: int, pairs: list[tuple[int, int]], used: int) -> bool:
        if pos == k:
            return True
        u, v = pairs[pos]
        for hid in range(m):
            if used >> hid & 1:
                continue
            h = hyperedges[hid]
            if u in h and v in h:
                chosen[pos] = hid
                if assign(pos + 1, pairs, used | (1 << hid)):
                    return True
        return False

    for vt in permutations(range(n), k):
        pairs = [(vt[i], vt[(i + 1) % k]) for i in range(k)]
        if assign(0, pairs, 0):
            witness = BergeCycleWitness(vt, tuple(chosen))
            validate_witness(hypergraph, witness)
            return witness
    return None


def find_c4_in_graph(graph: Graph) -> Optional[tuple[int, int, int, int]]:
    """A 4-cycle (x, a, y, b) of a simple graph, or None.

    Full pair scan: any vertex pair with two common neighbors closes a C4.
    """
    masks = graph.adjacency_masks
    for x in range(graph.n):
        for y in range(x + 1, graph.n):
            common = masks[x] & masks[y]
            if common.bit_count() >= 2:
                it = iter_bits(common)
                a = next(it)
                b = next(it)
                return (x, a, y, b)
    return None


def find_triangle(graph: Graph) -> Optional[tuple[int, int, int]]:
    """A triangle (u, v, w) of a simple graph, or None."""
    masks = graph.adjacency_masks
    for u, v in sorted(graph.edges):
        common = masks[u] & masks[v]
        if common:
            w = next(iter_bits(common))
            return (u, v, w)
    return None
