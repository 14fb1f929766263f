"""Agreement graphs, interval-graph coloring and graph plumbing.

The agreement graph of a society joins two voters whenever their approval
sets intersect.  For line and candidate societies this is an interval
graph, whose clique number equals the society's agreement number; the
first-fit coloring below realizes that equality constructively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .society import (
    Box,
    BoxSpectrum,
    CandidateSpectrum,
    Interval,
    Society,
    approved_candidates,
    require_valid,
)


@dataclass(frozen=True)
class Graph:
    """Undirected graph with ordered vertices and normalized edges.

    Edges are stored as (u, v) pairs with u preceding v in vertex order, so
    serialization and iteration are deterministic.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if u not in index or v not in index:
                raise ValueError(f"edge ({u}, {v}) uses unknown vertices")
            if index[u] > index[v]:
                raise ValueError(f"edge ({u}, {v}) not in vertex order")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, u: str, v: str) -> bool:
        if self._index[u] > self._index[v]:
            u, v = v, u
        return (u, v) in self.edges

    def neighbors(self, v: str) -> frozenset[str]:
        return self.adjacency[v]

    def induced(self, subset) -> "Graph":
        keep = set(subset)
        vertices = tuple(v for v in self.vertices if v in keep)
        edges = frozenset((u, v) for u, v in self.edges if u in keep and v in keep)
        return Graph(vertices, edges)

    def complement(self) -> "Graph":
        edges = set()
        for i, u in enumerate(self.vertices):
            for v in self.vertices[i + 1 :]:
                if (u, v) not in self.edges:
                    edges.add((u, v))
        return Graph(self.vertices, frozenset(edges))

    def sorted_edges(self) -> list[tuple[str, str]]:
        idx = self._index
        return sorted(self.edges, key=lambda e: (idx[e[0]], idx[e[1]]))

    def to_obj(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":")) + "\n"


def graph_from_edges(vertices, edges) -> Graph:
    """Build a Graph from any iterable of unordered vertex pairs."""
    vertices = tuple(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    normalized = set()
    for u, v in edges:
        if index[u] > index[v]:
            u, v = v, u
        normalized.add((u, v))
    return Graph(vertices, frozenset(normalized))


@dataclass(frozen=True)
class Coloring:
    """A proper coloring: voter id -> color index in 1..num_colors."""

    assignment: dict

    @property
    def num_colors(self) -> int:
        return max(self.assignment.values(), default=0)

    def is_proper(self, graph: Graph) -> bool:
        return all(self.assignment[u] != self.assignment[v] for u, v in graph.edges)


def _representing_intervals(society: Society) -> list[tuple[str, Interval | None]]:
    """Per-voter intervals that represent the agreement graph exactly.

    For a candidate spectrum each interval is shrunk to the minimal closed
    interval spanning the voter's approved candidates; two such hulls
    intersect precisely when the voters share an approved candidate.
    """
    spectrum = society.spectrum
    out: list[tuple[str, Interval | None]] = []
    if isinstance(spectrum, CandidateSpectrum):
        for v in society.voters:
            approved = approved_candidates(
                v.approval if isinstance(v.approval, Interval) else None, spectrum
            )
            out.append((v.id, Interval(approved[0], approved[-1]) if approved else None))
    else:
        for v in society.voters:
            iv = v.approval
            if isinstance(iv, Box):
                if iv.dimension != 1:
                    raise ValueError("no interval representation for boxes with d >= 2")
                iv = iv.sides[0]
            out.append((v.id, iv))
    return out


def agreement_graph(society: Society) -> Graph:
    """Graph on the voters with edges between intersecting approval sets."""
    require_valid(society)
    spectrum = society.spectrum
    ids = society.voter_ids()

    if isinstance(spectrum, BoxSpectrum):
        approvals = [v.approval for v in society.voters]
        edges = set()
        for i in range(len(ids)):
            a = approvals[i]
            if a is None:
                continue
            for j in range(i + 1, len(ids)):
                b = approvals[j]
                if b is not None and a.intersect(b) is not None:
                    edges.add((ids[i], ids[j]))
        return Graph(ids, frozenset(edges))

    reps = _representing_intervals(society)
    edges = set()
    for i in range(len(reps)):
        _, a = reps[i]
        if a is None:
            continue
        for j in range(i + 1, len(reps)):
            _, b = reps[j]
            if b is not None and a.intersect(b) is not None:
                edges.add((ids[i], ids[j]))
    return Graph(ids, frozenset(edges))


def greedy_interval_coloring(society: Society) -> Coloring:
    """First-fit coloring of an interval representation, using omega colors.

    Voters are processed by *decreasing* right endpoint (ties broken by
    society order, empty approval sets first); each receives the smallest
    color unused among its already-colored neighbors.  When a voter is
    colored, its colored neighbors all have right endpoints at least its
    own, hence their intervals all contain its right endpoint and form a
    clique: at most omega-1 colors are blocked, so omega colors suffice.
    Processing by increasing right endpoint does not have this property
    and can exceed omega.
    """
    require_valid(society)
    if isinstance(society.spectrum, BoxSpectrum) and society.spectrum.dimension >= 2:
        raise ValueError("coloring requires an interval representation (line, candidates or 1-box)")

    reps = _representing_intervals(society)
    empties = [(vid, iv) for vid, iv in reps if iv is None]
    filled = [(vid, iv) for vid, iv in reps if iv is not None]
    # sorted() is stable: equal right endpoints keep society order.
    order = empties + sorted(filled, key=lambda r: r[1].hi, reverse=True)

    assignment: dict[str, int] = {}
    colored: list[tuple[str, Interval]] = []
    for vid, iv in order:
        if iv is None:
            assignment[vid] = 1
            continue
        used = {
            assignment[other]
            for other, other_iv in colored
            if iv.intersect(other_iv) is not None
        }
        color = 1
        while color in used:
            color += 1
        assignment[vid] = color
        colored.append((vid, iv))
    return Coloring(assignment)


def clique_number_linear(society: Society) -> int:
    """Clique number of the agreement graph of a line/candidate society.

    Equals the agreement number: a clique's approval sets pairwise
    intersect, so on the line they share a platform.  The greedy coloring
    provides the matching upper bound and is asserted against it (skipped
    in the degenerate all-empty society, where the lone isolated-vertex
    color exceeds the agreement number 0).
    """
    from .agreement import agreement

    if isinstance(society.spectrum, BoxSpectrum) and society.spectrum.dimension >= 2:
        raise ValueError("clique_number_linear applies to societies with interval representations")
    number = agreement(society).agreement_number
    if any(v.approval is not None for v in society.voters):
        assert greedy_interval_coloring(society).num_colors == number
    return number
