"""Exact domination and independent-domination solvers.

Two routes to the domination number: `gamma_bruteforce` is the oracle
(exhaustive subset search, guarded to small n), `gamma_exact` is the
branch-and-bound solver expected to match it everywhere.  All solvers are
deterministic: fixed branch orders, lexicographic tie-breaking.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import Graph

KIND_GAMMA = "gamma"
KIND_IDOM = "idom"
KIND_GAMMA_MIN_EDGES = "gamma-min-edges"

BRUTE_FORCE_LIMIT = 24


class SolverTimeout(Exception):
    """Raised when an exact solve exceeds its deadline."""


@dataclass(frozen=True)
class DominationCertificate:
    """A dominating set together with the facts it certifies."""

    members: frozenset[int]
    size: int
    independent: bool
    induced_edges: int
    kind: str


def closed_masks(g: Graph) -> list[int]:
    """Bitmask of N[v] per vertex."""
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.adj[v]:
            m |= 1 << u
        masks.append(m)
    return masks


def is_dominating(g: Graph, members: Iterable[int]) -> bool:
    """True iff the closed neighborhood of `members` covers every vertex."""
    cover = 0
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        cover |= 1 << v
        for u in g.adj[v]:
            cover |= 1 << u
    return cover == (1 << g.n) - 1


def induced_edge_count(g: Graph, members: Iterable[int]) -> int:
    """Number of edges inside the induced subgraph on `members`."""
    inside = set(members)
    return sum(1 for v in inside for u in g.adj[v] if u in inside) // 2


def _certificate(g: Graph, members: Iterable[int], kind: str) -> DominationCertificate:
    chosen = frozenset(members)
    if not is_dominating(g, chosen):
        raise AssertionError("internal error: certificate set does not dominate")
    induced = induced_edge_count(g, chosen)
    independent = induced == 0
    if kind == KIND_IDOM and not independent:
        raise AssertionError("internal error: idom certificate is not independent")
    return DominationCertificate(
        members=chosen,
        size=len(chosen),
        independent=independent,
        induced_edges=induced,
        kind=kind,
    )


def gamma_bruteforce(g: Graph) -> DominationCertificate:
    """Minimum dominating set by exhaustive search in increasing size.

    The witness is the lexicographically smallest minimum set.  Guarded to
    n <= 24; this is the test oracle for gamma_exact.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force solver is guarded to n <= {BRUTE_FORCE_LIMIT}")
    if g.n == 0:
        return _certificate(g, (), KIND_GAMMA)
    masks = closed_masks(g)
    full = (1 << g.n) - 1
    lo = max(1, -(-g.n // (g.max_degree() + 1)))
    for k in range(lo, g.n + 1):
        for combo in combinations(range(g.n), k):
            cover = 0
            for v in combo:
                cover |= masks[v]
            if cover == full:
                return _certificate(g, combo, KIND_GAMMA)
    raise AssertionError("unreachable: the whole vertex set dominates")


def _greedy_cover(g: Graph, masks: list[int], full: int) -> list[int]:
    chosen: list[int] = []
    dominated = 0
    while dominated != full:
        best_v = -1
        best_gain = -1
        for v in range(g.n):
            gain = (masks[v] & ~dominated).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen.append(best_v)
        dominated |= masks[best_v]
    return chosen


def _packing_bound(g: Graph, masks: list[int], dominated: int) -> int:
    # undominated vertices with pairwise disjoint closed neighborhoods each
    # need their own dominator
    packed = 0
    count = 0
    for v in range(g.n):
        if not (dominated >> v) & 1 and not (masks[v] & packed):
            packed |= masks[v]
            count += 1
    return count


def gamma_exact(g: Graph, *, deadline: float | None = None) -> DominationCertificate:
    """Branch-and-bound minimum dominating set.

    Branches on an undominated vertex of minimum degree; the candidates are
    its closed neighborhood in ascending id order.  Greedy cover supplies
    the initial upper bound, a greedy packing the lower bound.
    """
    if g.n == 0:
        return _certificate(g, (), KIND_GAMMA)
    masks = closed_masks(g)
    full = (1 << g.n) - 1
    by_degree = sorted(range(g.n), key=lambda v: (len(g.adj[v]), v))
    best = _greedy_cover(g, masks, full)
    ticks = 0

    def search(chosen: list[int], dominated: int) -> None:
        nonlocal best, ticks
        ticks += 1
        if deadline is not None and ticks % 1024 == 0 and time.monotonic() > deadline:
            raise SolverTimeout("domination solve exceeded its budget")
        if dominated == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _packing_bound(g, masks, dominated) >= len(best):
            return
        u = next(v for v in by_degree if not (dominated >> v) & 1)
        for c in sorted((u, *g.adj[u])):
            chosen.append(c)
            search(chosen, dominated | masks[c])
            chosen.pop()

    search([], 0)
    return _certificate(g, best, KIND_GAMMA)


def idom_exact(g: Graph, *, deadline: float | None = None) -> DominationCertificate:
    """Minimum maximal independent set (independent domination number).

    Same scheme as gamma_exact with the independence constraint folded in:
    a candidate dominator must not be adjacent to the chosen set.
    """
    if g.n == 0:
        return _certificate(g, (), KIND_IDOM)
    masks = closed_masks(g)
    nbr_masks = [masks[v] ^ (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1

    # lexicographically first maximal independent set as the initial bound
    best: list[int] = []
    dominated = 0
    for v in range(g.n):
        if not (dominated >> v) & 1:
            best.append(v)
            dominated |= masks[v]
    ticks = 0

    def search(chosen: list[int], chosen_mask: int, dominated: int) -> None:
        nonlocal best, ticks
        ticks += 1
        if deadline is not None and ticks % 1024 == 0 and time.monotonic() > deadline:
            raise SolverTimeout("independent domination solve exceeded its budget")
        if dominated == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _packing_bound(g, masks, dominated) >= len(best):
            return
        u = next(v for v in range(g.n) if not (dominated >> v) & 1)
        for c in sorted((u, *g.adj[u])):
            if nbr_masks[c] & chosen_mask:
                continue
            chosen.append(c)
            search(chosen, chosen_mask | (1 << c), dominated | masks[c])
            chosen.pop()

    search([], 0, 0)
    return _certificate(g, best, KIND_IDOM)


def gamma_min_edges(g: Graph) -> DominationCertificate:
    """Among minimum dominating sets, one with fewest induced edges.

    Enumeration-based, guarded to n <= 24.  Ties break lexicographically on
    the sorted member list (the first minimum found in subset order).
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"min-edge search is guarded to n <= {BRUTE_FORCE_LIMIT}")
    if g.n == 0:
        return _certificate(g, (), KIND_GAMMA_MIN_EDGES)
    k = gamma_exact(g).size
    masks = closed_masks(g)
    full = (1 << g.n) - 1
    best: tuple[int, tuple[int, ...]] | None = None
    for combo in combinations(range(g.n), k):
        cover = 0
        for v in combo:
            cover |= masks[v]
        if cover != full:
            continue
        edges = induced_edge_count(g, combo)
        if best is None or edges < best[0]:
            best = (edges, combo)
            if edges == 0:
                break
    assert best is not None
    return _certificate(g, best[1], KIND_GAMMA_MIN_EDGES)


@dataclass(frozen=True)
class DsetEnumeration:
    """All minimum dominating sets in lexicographic order, maybe truncated."""

    dsets: tuple[frozenset[int], ...]
    truncated: bool


def enumerate_min_dsets(g: Graph, limit: int | None = None) -> DsetEnumeration:
    """Every dominating set of minimum cardinality, lexicographic order."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"enumeration is guarded to n <= {BRUTE_FORCE_LIMIT}")
    if g.n == 0:
        return DsetEnumeration((frozenset(),), False)
    k = gamma_exact(g).size
    masks = closed_masks(g)
    full = (1 << g.n) - 1
    out: list[frozenset[int]] = []
    for combo in combinations(range(g.n), k):
        cover = 0
        for v in combo:
            cover |= masks[v]
        if cover != full:
            continue
        if limit is not None and len(out) == limit:
            return DsetEnumeration(tuple(out), True)
        out.append(frozenset(combo))
    return DsetEnumeration(tuple(out), False)
