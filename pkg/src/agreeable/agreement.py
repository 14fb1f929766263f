"""Exact agreement numbers for line, candidate and box societies.

The agreement number of a platform is the number of voters approving it;
the agreement number of a society is the maximum over all platforms of the
spectrum.  Everything here is exact rational arithmetic.

Closed-interval semantics enter the computation in exactly one place: the
line sweep processes interval starts before interval ends at equal
coordinates, so touching intervals count as overlapping.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import CapExceededError
from .society import (
    Box,
    BoxSpectrum,
    CandidateSpectrum,
    Coord,
    Interval,
    LineSpectrum,
    Society,
    approved_candidates,
    coord_str,
    require_valid,
)

# Box depth enumerates a grid of lower corners: O(n^(d+1)) points.  Fine at
# desk scale, unacceptable beyond it, so the limits are hard errors.
MAX_BOX_VOTERS = 30
MAX_BOX_DIMENSION = 3


@dataclass(frozen=True)
class AgreementReport:
    """Result of an agreement computation.

    ``witnesses`` holds every optimal platform, in a spectrum-dependent
    shape: maximal closed intervals for a line society, candidate platforms
    for a candidate society, and grid points (coordinate tuples) for a box
    society.  ``per_candidate`` is populated for candidate societies only.

    For a society whose approval sets are all empty the agreement number is
    0; on the line the optimum is then attained everywhere, which bounded
    intervals cannot express, so ``witnesses`` is empty in that one case.
    """

    agreement_number: int
    n: int
    witnesses: tuple
    per_candidate: Optional[dict] = field(default=None)

    @property
    def proportion(self) -> Fraction:
        return Fraction(self.agreement_number, self.n)

    def to_obj(self) -> dict:
        def enc(c):
            return c.numerator if c.denominator == 1 else coord_str(c)

        obj: dict = {
            "agreement_number": self.agreement_number,
            "n": self.n,
            "agreement_proportion": coord_str(self.proportion),
        }
        witnesses = []
        for w in self.witnesses:
            if isinstance(w, Interval):
                witnesses.append([enc(w.lo), enc(w.hi)])
            elif isinstance(w, tuple):
                witnesses.append([enc(x) for x in w])
            else:
                witnesses.append(enc(w))
        obj["witnesses"] = witnesses
        if self.per_candidate is not None:
            obj["per_candidate"] = {coord_str(c): k for c, k in self.per_candidate.items()}
        return obj


def _line_intervals(society: Society) -> list[Interval]:
    return [v.approval for v in society.voters if isinstance(v.approval, Interval)]


def _sweep(intervals: list[Interval]) -> tuple[int, tuple[Interval, ...]]:
    """Endpoint sweep over closed intervals.

    Returns the maximum overlap count and the set of maximal closed
    intervals on which it is attained.  At each event coordinate x the
    depth *at* x is the count after processing starts and before ends
    (starts-before-ends is what makes touching intervals overlap); the
    depth on the open gap to the next coordinate is the count after ends.
    Any interval covering an open gap contains both its endpoints, so gaps
    at maximal depth always bridge two optimal event points.
    """
    if not intervals:
        return 0, ()

    starts: dict[Coord, int] = {}
    ends: dict[Coord, int] = {}
    for iv in intervals:
        starts[iv.lo] = starts.get(iv.lo, 0) + 1
        ends[iv.hi] = ends.get(iv.hi, 0) + 1
    coords = sorted(set(starts) | set(ends))

    best = 0
    count = 0
    for x in coords:
        count += starts.get(x, 0)
        best = max(best, count)
        count -= ends.get(x, 0)

    pieces: list[Interval] = []
    count = 0
    for i, x in enumerate(coords):
        count += starts.get(x, 0)
        at_point = count
        count -= ends.get(x, 0)
        if at_point == best:
            pieces.append(Interval(x, x))
        if count == best and i + 1 < len(coords):
            pieces.append(Interval(x, coords[i + 1]))

    merged: list[Interval] = []
    for piece in pieces:
        if merged and piece.lo <= merged[-1].hi:
            merged[-1] = Interval(merged[-1].lo, max(merged[-1].hi, piece.hi))
        else:
            merged.append(piece)
    return best, tuple(merged)


def _box_grid_axes(boxes: list[Box], dimension: int) -> list[list[Coord]]:
    return [sorted({b.sides[axis].lo for b in boxes}) for axis in range(dimension)]


def _box_agreement(society: Society) -> AgreementReport:
    spectrum = society.spectrum
    assert isinstance(spectrum, BoxSpectrum)
    if society.n > MAX_BOX_VOTERS:
        raise CapExceededError(f"box societies are capped at {MAX_BOX_VOTERS} voters, got {society.n}")
    if spectrum.dimension > MAX_BOX_DIMENSION:
        raise CapExceededError(
            f"box societies are capped at dimension {MAX_BOX_DIMENSION}, got {spectrum.dimension}"
        )

    boxes = [v.approval for v in society.voters if isinstance(v.approval, Box)]
    if not boxes:
        return AgreementReport(0, society.n, ())

    # A maximum-depth point can be shifted, axis by axis, down to the largest
    # lower endpoint among the boxes containing it, so searching the grid of
    # per-axis lower endpoints is exhaustive.
    axes = _box_grid_axes(boxes, spectrum.dimension)
    best = 0
    witnesses: list[tuple[Coord, ...]] = []
    for point in itertools.product(*axes):
        depth = sum(1 for b in boxes if b.contains(point))
        if depth > best:
            best = depth
            witnesses = [point]
        elif depth == best and best > 0:
            witnesses.append(point)
    return AgreementReport(best, society.n, tuple(witnesses))


def agreement(society: Society) -> AgreementReport:
    """Compute the agreement number, witnesses and proportion of a society."""
    require_valid(society)
    spectrum = society.spectrum

    if isinstance(spectrum, LineSpectrum):
        best, witnesses = _sweep(_line_intervals(society))
        return AgreementReport(best, society.n, witnesses)

    if isinstance(spectrum, CandidateSpectrum):
        tally = {c: 0 for c in spectrum.candidates}
        for v in society.voters:
            if isinstance(v.approval, Interval):
                for c in approved_candidates(v.approval, spectrum):
                    tally[c] += 1
        best = max(tally.values())
        witnesses = tuple(c for c in spectrum.candidates if tally[c] == best)
        return AgreementReport(best, society.n, witnesses, per_candidate=tally)

    return _box_agreement(society)


def common_platform(society: Society) -> Interval | None:
    """The platforms approved by *every* voter, if any.

    Takes x = the largest left endpoint and y = the smallest right endpoint
    over all approval sets; when x <= y the interval [x, y] is approved by
    everyone.  For a candidate spectrum a candidate must additionally fall
    inside [x, y].  Returns None when no universally approved platform
    exists.  Raises if any approval set is empty, since such a voter rules
    out every platform.
    """
    require_valid(society)
    if isinstance(society.spectrum, BoxSpectrum):
        raise ValueError("common_platform applies to line or candidate societies")
    empties = [v.id for v in society.voters if v.approval is None]
    if empties:
        raise ValueError(f"voters with empty approval sets: {', '.join(empties)}")

    x = max(v.approval.lo for v in society.voters)
    y = min(v.approval.hi for v in society.voters)
    if x > y:
        return None
    if isinstance(society.spectrum, CandidateSpectrum):
        if not any(x <= c <= y for c in society.spectrum.candidates):
            return None
    return Interval(x, y)


@dataclass(frozen=True)
class TwoPlatformCover:
    """Two platforms such that every approval set contains at least one."""

    x: Coord
    y: Coord
    count_x: int
    count_y: int

    @property
    def best_count(self) -> int:
        return max(self.count_x, self.count_y)


def two_platform_cover(society: Society) -> TwoPlatformCover:
    """The two-platform construction behind the half-approval guarantee.

    For a society in which every three voters contain an agreeing pair, the
    platforms x = max of left endpoints and y = min of right endpoints
    together meet every approval set, so the more popular of the two is
    approved by at least half the voters.  The precondition is checked and
    violations are reported as errors.
    """
    require_valid(society)
    if not isinstance(society.spectrum, LineSpectrum):
        raise ValueError("two_platform_cover applies to line societies")
    empties = [v.id for v in society.voters if v.approval is None]
    if empties:
        raise ValueError(f"voters with empty approval sets: {', '.join(empties)}")

    from .agreeability import AgreeParams, is_km_agreeable

    check = is_km_agreeable(society, AgreeParams(2, 3))
    if not check.agreeable:
        raise ValueError(f"society is not (2,3)-agreeable; witness {check.witness}")

    x = max(v.approval.lo for v in society.voters)
    y = min(v.approval.hi for v in society.voters)
    count_x = sum(1 for v in society.voters if v.approval.contains(x))
    count_y = sum(1 for v in society.voters if v.approval.contains(y))
    cover = TwoPlatformCover(x, y, count_x, count_y)
    assert cover.best_count >= -(-society.n // 2)
    return cover


def good_set_count(society: Society, size: int | None = None) -> int:
    """Count voter subsets of the given size whose boxes share a point.

    ``size`` defaults to d+1 for a d-box society, the subset size whose
    counting argument feeds the fractional intersection bound.  A subset
    containing an empty approval set is never counted.
    """
    require_valid(society)
    spectrum = society.spectrum
    if not isinstance(spectrum, BoxSpectrum):
        raise ValueError("good_set_count applies to box societies")
    if size is None:
        size = spectrum.dimension + 1
    if society.n <= spectrum.dimension:
        raise ValueError(f"need more than d={spectrum.dimension} voters, got {society.n}")
    if society.n > MAX_BOX_VOTERS:
        raise CapExceededError(f"box societies are capped at {MAX_BOX_VOTERS} voters")

    count = 0
    for subset in itertools.combinations(society.voters, size):
        common = subset[0].approval
        for v in subset[1:]:
            if common is None:
                break
            common = None if v.approval is None else common.intersect(v.approval)
        if common is not None:
            count += 1
    return count


def good_set_lower_bound(n: int, d: int, k: int, m: int) -> Fraction:
    """Exact counting lower bound on good sets in a (k,m)-agreeable d-box society."""
    return Fraction(math.comb(k, d + 1) * math.comb(n, d + 1), math.comb(m, d + 1))
