"""Exact maximum of sum(|h| - 3) over Berge-C4-free multihypergraphs.

The search universe for n vertices is every vertex subset of size >= 4
(smaller sets contribute nothing positive), each usable with multiplicity
at most 3: a fourth copy of any such set always closes a Berge-C4, so the
cap loses no optimum.  Candidates are ordered canonically (larger sets
first, lexicographic within a size); a depth-first search walks multisets
as non-decreasing candidate-index sequences, checks each added hyperedge
incrementally for a Berge-C4 through it, and prunes with the admissible
remaining-weight bound.  The first optimum reached in this preorder is the
lexicographically least one under the canonical order, so results and
witnesses are deterministic.  The search is sequential, which makes runs
trivially independent of any worker-count setting.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .berge import is_berge_c4_free
from .constructions import theoretical_bounds
from .core import Hypergraph, iter_bits


class SearchState:
    """Mutable multiset of hyperedges with a pair-coverage index.

    push/pop maintain, per sorted vertex pair, the list of hyperedge ids
    covering it, plus shadow adjacency bitmasks.  Ids are positions in the
    current hyperedge list, exactly as in Hypergraph.
    """

    def __init__(self, n: int):
        self.n = n
        self.hyperedges: list[frozenset[int]] = []
        self.cover: dict[tuple[int, int], list[int]] = {}
        self.adj: list[int] = [0] * n

    def push(self, hyperedge: Iterable[int]) -> int:
        h = frozenset(hyperedge)
        hid = len(self.hyperedges)
        self.hyperedges.append(h)
        for a, b in combinations(sorted(h), 2):
            ids = self.cover.setdefault((a, b), [])
            ids.append(hid)
            if len(ids) == 1:
                self.adj[a] |= 1 << b
                self.adj[b] |= 1 << a
        return hid

    def pop(self) -> frozenset[int]:
        h = self.hyperedges.pop()
        for a, b in combinations(sorted(h), 2):
            ids = self.cover[(a, b)]
            ids.pop()
            if not ids:
                self.adj[a] &= ~(1 << b)
                self.adj[b] &= ~(1 << a)
        return h

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, tuple(self.hyperedges))


def _without(ids: list[int], hid: int) -> list[int]:
    if not ids:
        return ids
    if ids[-1] == hid:
        return ids[:-1]
    if hid in ids:
        return [i for i in ids if i != hid]
    return ids


def _three_distinct(c1: list[int], c2: list[int], c3: list[int]) -> bool:
    for i1 in c1:
        for i2 in c2:
            if i2 == i1:
                continue
            for i3 in c3:
                if i3 != i1 and i3 != i2:
                    return True
    return False


def incremental_c4_check(state: SearchState, new_hyperedge_id: int) -> bool:
    """True iff some Berge-C4 of the state uses the given hyperedge.

    Assumes the state without that hyperedge is Berge-C4-free, so this is
    equivalent to a full Berge-C4 search on the whole state.  Rotating any
    such cycle puts the new hyperedge on the slot {a, b}; the remaining
    path b - v3 - v4 - a needs three distinct other hyperedges covering its
    slots, checked by brute force over the pair-coverage lists.
    """
    h = state.hyperedges[new_hyperedge_id]
    adj = state.adj
    cover = state.cover
    verts = sorted(h)
    for a, b in combinations(verts, 2):
        excl = (1 << a) | (1 << b)
        for v3 in iter_bits(adj[b] & ~excl):
            key1 = (b, v3) if b < v3 else (v3, b)
            c1 = _without(cover[key1], new_hyperedge_id)
            if not c1:
                continue
            for v4 in iter_bits(adj[v3] & adj[a] & ~excl & ~(1 << v3)):
                key2 = (v3, v4) if v3 < v4 else (v4, v3)
                c2 = _without(cover[key2], new_hyperedge_id)
                if not c2:
                    continue
                key3 = (v4, a) if v4 < a else (a, v4)
                c3 = _without(cover[key3], new_hyperedge_id)
                if not c3:
                    continue
                if _three_distinct(c1, c2, c3):
                    return True
    return False


@dataclass(frozen=True)
class SearchResult:
    """Optimum weight with a revalidated witness for one vertex count."""

    n: int
    best_weight: int
    witness: Hypergraph
    nodes_explored: int
    exhaustive: bool


def candidate_universe(n: int) -> list[frozenset[int]]:
    """All vertex subsets of size >= 4 in canonical order: size descending,
    lexicographic ascending within one size."""
    out: list[frozenset[int]] = []
    for size in range(n, 3, -1):
        out.extend(frozenset(c) for c in combinations(range(n), size))
    return out


def max_weight_exact(
    n: int,
    max_mult: int = 3,
    pruned: bool = True,
    allow_large: bool = False,
    first_level_orbit_reps: bool = False,
) -> SearchResult:
    """Exact extremal weight on n vertices with a witness hypergraph.

    Guarded to n <= 7 unless allow_large is set (the universe grows as
    2^n and the search is exponential on top of that).  n < 4 has an empty
    universe and answers trivially.  pruned=False disables the admissible
    remaining-weight bound and enumerates every Berge-C4-free multiset,
    which serves as the cross-check oracle at small n.
    first_level_orbit_reps restricts the first (canonically smallest)
    candidate to one representative per size class -- a relabeling argument
    shows some optimum survives; the best weight is unchanged but the
    witness tie-break guarantee applies only with the flag off.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > 7 and not allow_large:
        raise ValueError(
            f"n={n} exceeds the guard (4 <= n <= 7); pass allow_large=True to override"
        )
    if max_mult < 1:
        raise ValueError(f"max_mult must be >= 1, got {max_mult}")

    cands = candidate_universe(n)
    weights = [len(c) - 3 for c in cands]
    m = len(cands)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + max_mult * weights[i]
    is_rep = [c == frozenset(range(len(c))) for c in cands]

    state = SearchState(n)
    used = [0] * m
    chosen: list[int] = []
    best = {"weight": 0, "multiset": ()}
    nodes = 0

    def walk(min_idx: int, current_weight: int) -> None:
        nonlocal nodes
        for j in range(min_idx, m):
            if pruned and current_weight + suffix[j] <= best["weight"]:
                break
            if used[j] == max_mult:
                continue
            if first_level_orbit_reps and not chosen and not is_rep[j]:
                continue
            hid = state.push(cands[j])
            if incremental_c4_check(state, hid):
                state.pop()
                continue
            nodes += 1
            used[j] += 1
            chosen.append(j)
            new_weight = current_weight + weights[j]
            if new_weight > best["weight"]:
                best["weight"] = new_weight
                best["multiset"] = tuple(chosen)
            walk(j, new_weight)
            chosen.pop()
            used[j] -= 1
            state.pop()

    walk(0, 0)
    witness = Hypergraph(n, tuple(cands[j] for j in best["multiset"]))
    if not is_berge_c4_free(witness):
        raise AssertionError("search produced a witness with a Berge-C4")
    return SearchResult(
        n=n,
        best_weight=best["weight"],
        witness=witness,
        nodes_explored=nodes,
        exhaustive=True,
    )


class BoundsRow(NamedTuple):
    n: int
    best_weight: int
    upper: float
    lower: float


def compare_to_bounds(result: SearchResult) -> BoundsRow:
    """Tabulate an exact value against the asymptotic comparators.

    Purely a report: the o(1) terms are dropped, so no ordering between the
    exact value and the comparators is asserted.
    """
    upper, lower = theoretical_bounds(result.n)
    return BoundsRow(result.n, result.best_weight, upper, lower)


def timed_search(n: int, **kwargs) -> tuple[SearchResult, float]:
    start = time.perf_counter()
    result = max_weight_exact(n, **kwargs)
    return result, time.perf_counter() - start
