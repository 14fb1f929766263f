"""Independent brute-force references for the property suites.

Everything here recomputes graph and society quantities by exhaustive
enumeration, sharing no logic with the fast paths it is used to validate
(the sweep, the subset search, the greedy coloring).  Instance-size caps
are hard errors: an oracle never silently approximates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .agreeability import AgreeParams, subset_cap
from .errors import CapExceededError
from .graphs import Graph
from .society import Interval, LineSpectrum, Society

MAX_CLIQUE_VERTICES = 24
MAX_CHROMATIC_VERTICES = 13
MAX_COVER_VERTICES = 18
MAX_COVER_LEMMA_VERTICES = 14


def _adjacency_masks(graph: Graph) -> list[int]:
    index = {v: i for i, v in enumerate(graph.vertices)}
    masks = [0] * graph.n
    for u, v in graph.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return masks


def brute_clique(graph: Graph) -> int:
    """Exact clique number by exhaustive candidate-set expansion."""
    if graph.n > MAX_CLIQUE_VERTICES:
        raise CapExceededError(f"brute_clique capped at {MAX_CLIQUE_VERTICES} vertices")
    if graph.n == 0:
        return 0
    adj = _adjacency_masks(graph)
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            expand(candidates & adj[v], size + 1)

    expand((1 << graph.n) - 1, 0)
    return best


def brute_chromatic(graph: Graph) -> int:
    """Exact chromatic number by dynamic programming over vertex subsets.

    chi(S) = 1 + min over independent sets I in S containing S's first
    vertex of chi(S - I); there is always an optimal coloring in which
    that vertex's color class is such a set.
    """
    n = graph.n
    if n > MAX_CHROMATIC_VERTICES:
        raise CapExceededError(f"brute_chromatic capped at {MAX_CHROMATIC_VERTICES} vertices")
    if n == 0:
        return 0
    adj = _adjacency_masks(graph)
    full = (1 << n) - 1

    independent = [False] * (full + 1)
    independent[0] = True
    for mask in range(1, full + 1):
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        independent[mask] = independent[rest] and not (adj[v] & rest)

    chi = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        best = n
        sub = mask
        while sub:
            if sub & low and independent[sub]:
                candidate = 1 + chi[mask ^ sub]
                if candidate < best:
                    best = candidate
            sub = (sub - 1) & mask
        chi[mask] = best
    return chi[full]


def induced_subgraph_tables(graph: Graph) -> tuple[list[int], list[int]]:
    """(omega, chi) for every induced subgraph, indexed by vertex bitmask.

    omega uses the recurrence omega(S) = max(omega(S - v), 1 + omega of
    S's neighbors of v) with v the first vertex of S; chi as in
    :func:`brute_chromatic`.  Used for exhaustive perfection checks.
    """
    n = graph.n
    if n > MAX_CHROMATIC_VERTICES:
        raise CapExceededError(f"induced tables capped at {MAX_CHROMATIC_VERTICES} vertices")
    adj = _adjacency_masks(graph)
    full = (1 << n) - 1

    omega = [0] * (full + 1)
    for mask in range(1, full + 1):
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        with_v = 1 + omega[rest & adj[v]]
        omega[mask] = max(omega[rest], with_v)

    independent = [False] * (full + 1)
    independent[0] = True
    for mask in range(1, full + 1):
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        independent[mask] = independent[rest] and not (adj[v] & rest)

    chi = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        best = n
        sub = mask
        while sub:
            if sub & low and independent[sub]:
                candidate = 1 + chi[mask ^ sub]
                if candidate < best:
                    best = candidate
            sub = (sub - 1) & mask
        chi[mask] = best
    return omega, chi


def is_perfect_by_enumeration(graph: Graph) -> bool:
    """True iff every induced subgraph has equal clique and chromatic number."""
    omega, chi = induced_subgraph_tables(graph)
    return all(omega[mask] == chi[mask] for mask in range(len(omega)))


@dataclass(frozen=True)
class CoverCertificate:
    """A minimum vertex cover with its exhaustively-proved size."""

    cover: tuple[str, ...]
    size: int


def _edge_index_pairs(graph: Graph) -> list[tuple[int, int]]:
    index = {v: i for i, v in enumerate(graph.vertices)}
    return [(index[u], index[v]) for u, v in graph.sorted_edges()]


def _has_cover_of_size(edges: list[tuple[int, int]], n: int, size: int) -> tuple[int, ...] | None:
    if size < 0:
        return None
    if not edges:
        return ()
    if size == 0:
        return None
    for combo in itertools.combinations(range(n), size):
        chosen = set(combo)
        if all(u in chosen or v in chosen for u, v in edges):
            return combo
    return None


def brute_min_vertex_cover(graph: Graph) -> CoverCertificate:
    """Minimum vertex cover by ascending-size exhaustion."""
    if graph.n > MAX_COVER_VERTICES:
        raise CapExceededError(f"brute_min_vertex_cover capped at {MAX_COVER_VERTICES} vertices")
    edges = _edge_index_pairs(graph)
    for size in range(graph.n + 1):
        combo = _has_cover_of_size(edges, graph.n, size)
        if combo is not None:
            return CoverCertificate(tuple(graph.vertices[i] for i in combo), size)
    raise AssertionError("the full vertex set always covers")


@dataclass(frozen=True)
class CoverLemmaReport:
    hypothesis_holds: bool
    conclusion_holds: bool
    cover_size: int


def check_cover_lemma(graph: Graph) -> CoverLemmaReport:
    """Check one graph against the critical-cover lemma.

    Hypothesis: the minimum cover size is z, and deleting any single
    vertex drops it to z-1.  Conclusion: the graph has at most 2z
    vertices.  An edgeless graph fails the hypothesis (deletions would
    need covers of size -1).  Any instance with a true hypothesis and a
    false conclusion is a bug-stopper.
    """
    if graph.n > MAX_COVER_LEMMA_VERTICES:
        raise CapExceededError(f"check_cover_lemma capped at {MAX_COVER_LEMMA_VERTICES} vertices")
    z = brute_min_vertex_cover(graph).size
    hypothesis = True
    for v in graph.vertices:
        rest = graph.induced([u for u in graph.vertices if u != v])
        edges = _edge_index_pairs(rest)
        if _has_cover_of_size(edges, rest.n, z - 1) is None:
            hypothesis = False
            break
    return CoverLemmaReport(hypothesis, graph.n <= 2 * z, z)


def _has_clique_of_size(members: list[int], adj: list[int], k: int) -> bool:
    if k == 0:
        return True

    def extend(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        while candidates:
            if candidates.bit_count() < need:
                return False
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            if extend(candidates & adj[v], need - 1):
                return True
        return False

    mask = 0
    for i in members:
        mask |= 1 << i
    return extend(mask, k)


def every_m_subset_has_k_clique(graph: Graph, params: AgreeParams, cap: int | None = None) -> bool:
    """Exhaustively test: does every m-subset of vertices include a k-clique?

    This is the purely graph-theoretic hypothesis shared by the coloring
    and small-m bounds, checked here independently of any geometry.
    """
    import math

    n = graph.n
    k, m = params.k, params.m
    if n < m:
        raise ValueError(f"graph has {n} vertices but m={m}")
    if cap is None:
        cap = subset_cap()
    if math.comb(n, m) > cap:
        raise CapExceededError(f"C({n},{m}) exceeds the enumeration cap {cap}")
    adj = _adjacency_masks(graph)
    for subset in itertools.combinations(range(n), m):
        if not _has_clique_of_size(list(subset), adj, k):
            return False
    return True


def brute_agreement_line(society: Society) -> int:
    """Agreement number of a line society by evaluating every endpoint.

    The maximum depth over the line is attained at some interval endpoint,
    so scoring each endpoint platform directly is exhaustive.  Kept
    independent of the sweep it cross-checks.
    """
    if not isinstance(society.spectrum, LineSpectrum):
        raise ValueError("brute_agreement_line applies to line societies")
    intervals = [v.approval for v in society.voters if isinstance(v.approval, Interval)]
    platforms = {iv.lo for iv in intervals} | {iv.hi for iv in intervals}
    best = 0
    for p in platforms:
        depth = sum(1 for iv in intervals if iv.contains(p))
        best = max(best, depth)
    return best
