"""Deciding (k,m)-agreeability exactly.

A society with at least m voters is (k,m)-agreeable when every subset of m
voters contains k voters whose approval sets share a platform.  The check
reduces to: does some m-subset S have sub-society agreement number below k?

Sub-society agreement numbers are evaluated on a finite platform set that
is exhaustive for every voter subset at once: left endpoints for a line
society, the candidates themselves, and the grid of per-axis lower
endpoints for a box society (a maximum-depth point shifts onto that grid).
Each platform contributes the bitmask of voters approving it, and a subset
S is *deficient* iff every platform mask meets S in at most k-1 voters.
Deficient sets are closed under taking subsets, so a depth-first search in
voter order that only ever extends deficient sets finds the
lexicographically first deficient m-subset, or proves none exists.  The
search prunes a branch when its capacity bound shows size m is out of
reach: each further voter consumes a unit of some platform mask's
remaining slack, so at most sum_j min(slack_j, remaining members of mask j)
non-empty voters can still be added.

A voter with an empty approval set appears in no platform mask: it can
never be among the k agreeing voters, and (1,m)-agreeability requires a
voter with a non-empty approval set in every m-subset.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from .errors import CapExceededError
from .society import (
    Box,
    CandidateSpectrum,
    Interval,
    LineSpectrum,
    Society,
    require_valid,
)

# Upper bound on C(n, m) for an exact check; override with the
# AGREE_MAX_SUBSETS environment variable.
DEFAULT_SUBSET_CAP = 2_000_000
_NODE_BUDGET_FACTOR = 8


def subset_cap() -> int:
    raw = os.environ.get("AGREE_MAX_SUBSETS")
    return int(raw) if raw else DEFAULT_SUBSET_CAP


@dataclass(frozen=True)
class AgreeParams:
    """The pair (k, m) with 1 <= k <= m."""

    k: int
    m: int

    def __post_init__(self):
        if not (1 <= self.k <= self.m):
            raise ValueError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")


@dataclass(frozen=True)
class AgreeabilityResult:
    agreeable: bool
    params: AgreeParams
    # For a negative verdict: the lexicographically first (in voter order)
    # m-subset with no platform approved by k of its members.
    witness: tuple[str, ...] | None = None


def platform_masks(society: Society) -> list[int]:
    """Voter bitmasks of every platform that can attain a maximum depth.

    Deduplicated; masks contained in another mask are dropped (they can
    never decide a depth comparison).
    """
    voters = society.voters
    spectrum = society.spectrum
    masks: set[int] = set()

    if isinstance(spectrum, CandidateSpectrum):
        for c in spectrum.candidates:
            mask = 0
            for i, v in enumerate(voters):
                if isinstance(v.approval, Interval) and v.approval.contains(c):
                    mask |= 1 << i
            masks.add(mask)
    elif isinstance(spectrum, LineSpectrum):
        for p in {v.approval.lo for v in voters if isinstance(v.approval, Interval)}:
            mask = 0
            for i, v in enumerate(voters):
                if isinstance(v.approval, Interval) and v.approval.contains(p):
                    mask |= 1 << i
            masks.add(mask)
    else:
        boxes = [(i, v.approval) for i, v in enumerate(voters) if isinstance(v.approval, Box)]
        axes = [sorted({b.sides[axis].lo for _, b in boxes}) for axis in range(spectrum.dimension)]
        for point in itertools.product(*axes):
            mask = 0
            for i, b in boxes:
                if b.contains(point):
                    mask |= 1 << i
            masks.add(mask)

    masks.discard(0)
    ordered = sorted(masks, key=lambda m: (-m.bit_count(), m))
    maximal: list[int] = []
    if len(ordered) <= 4000:  # keep the quadratic filter cheap
        for m in ordered:
            if not any(m & keep == m for keep in maximal):
                maximal.append(m)
    else:
        maximal = ordered
    return maximal


def is_km_agreeable(
    society: Society, params: AgreeParams, cap: int | None = None
) -> AgreeabilityResult:
    """Decide (k,m)-agreeability, with a deterministic failure witness."""
    require_valid(society)
    n = society.n
    k, m = params.k, params.m
    if n < m:
        raise ValueError(f"society has {n} voters but m={m}")
    if cap is None:
        cap = subset_cap()
    if math.comb(n, m) > cap:
        raise CapExceededError(
            f"C({n},{m}) = {math.comb(n, m)} exceeds the enumeration cap {cap}"
        )

    masks = platform_masks(society)
    num_masks = len(masks)
    member_masks: list[list[int]] = [[] for _ in range(n)]
    for j, mask in enumerate(masks):
        for i in range(n):
            if mask >> i & 1:
                member_masks[i].append(j)

    # remaining[j][i]: members of mask j with voter index >= i.
    remaining = []
    for mask in masks:
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = suffix[i + 1] + (mask >> i & 1)
        remaining.append(suffix)
    # Voters in no mask approve no platform at all (empty approval set, or
    # an interval containing no candidate); they join any deficient subset.
    free_suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        free_suffix[i] = free_suffix[i + 1] + (not member_masks[i])

    counts = [0] * num_masks
    chosen: list[int] = []
    budget = cap * _NODE_BUDGET_FACTOR
    nodes = 0

    def search(start: int) -> tuple[int, ...] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise CapExceededError(f"subset search exceeded {budget} nodes")
        if len(chosen) == m:
            return tuple(chosen)
        reach = len(chosen) + free_suffix[start]
        for j in range(num_masks):
            slack = (k - 1) - counts[j]
            if slack > 0:
                rem = remaining[j][start]
                reach += slack if slack < rem else rem
            if reach >= m:
                break
        if reach < m:
            return None
        for i in range(start, n):
            mm = member_masks[i]
            if any(counts[j] >= k - 1 for j in mm):
                continue
            for j in mm:
                counts[j] += 1
            chosen.append(i)
            found = search(i + 1)
            chosen.pop()
            for j in mm:
                counts[j] -= 1
            if found is not None:
                return found
        return None

    witness = search(0)
    if witness is None:
        return AgreeabilityResult(True, params)
    ids = tuple(society.voters[i].id for i in witness)
    return AgreeabilityResult(False, params, witness=ids)


def pigeonhole_sufficient(num_candidates: int, min_approvals_per_voter: int, params: AgreeParams) -> bool:
    """Counting shortcut: sufficient (never necessary) for (k,m)-agreeability.

    If every voter approves at least a of the c candidates, then among any
    m voters the approvals total at least m*a; if every candidate were
    approved by at most k-1 of them the total would be at most (k-1)*c.
    So m*a > (k-1)*c forces a candidate approved by k of any m voters.
    """
    if num_candidates < 1 or min_approvals_per_voter < 0:
        raise ValueError("need a positive candidate count and non-negative approvals")
    return params.m * min_approvals_per_voter > (params.k - 1) * num_candidates
