"""Core data model: spectra, approval sets and societies.

A society is a spectrum of platforms together with a finite list of voters,
each carrying an approval set.  Three spectrum kinds are supported:

* the whole real line (approval sets are closed bounded intervals),
* a finite sorted list of candidate platforms (approval sets are the
  candidates falling inside a voter's interval),
* d-dimensional box space (approval sets are axis-aligned boxes).

All coordinates are exact rationals (`fractions.Fraction`).  Only the
ordering of coordinates ever matters; no metric is used, and closed-set
touching (``[0,1]`` meets ``[1,2]``) must be decided exactly, which is why
floats are banned from interval logic.

Approval sets may be empty; the empty set is represented by ``None`` and
intersects nothing, including itself.  All values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import IO, Union

Coord = Fraction


def as_coord(value: Union[int, str, Fraction, Decimal]) -> Coord:
    """Convert an exact numeric representation to a coordinate.

    Accepts ints, Fractions, Decimals and strings such as ``"3/4"`` or
    ``"-1.25"``.  Floats are rejected: binary floats do not round-trip the
    decimal literals they came from, and exactness is a hard requirement.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"coordinates must be exact, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a coordinate")


def coord_str(c: Coord) -> str:
    """Render a coordinate exactly: plain integer or ``p/q``."""
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class Interval:
    """Closed bounded interval ``[lo, hi]``.

    Instances with ``lo > hi`` can be constructed (input data may be bad);
    :func:`validate` reports them.  The empty approval set is ``None``, not
    an Interval.
    """

    lo: Coord
    hi: Coord

    def contains(self, p: Coord) -> bool:
        return self.lo <= p <= self.hi

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def __str__(self) -> str:
        return f"[{coord_str(self.lo)}, {coord_str(self.hi)}]"


def make_interval(lo, hi) -> Interval:
    return Interval(as_coord(lo), as_coord(hi))


@dataclass(frozen=True)
class Box:
    """Axis-aligned box: the Cartesian product of per-axis intervals."""

    sides: tuple[Interval, ...]

    @property
    def dimension(self) -> int:
        return len(self.sides)

    def contains(self, point: tuple[Coord, ...]) -> bool:
        return len(point) == len(self.sides) and all(
            s.contains(x) for s, x in zip(self.sides, point)
        )

    def intersect(self, other: "Box") -> "Box | None":
        if len(self.sides) != len(other.sides):
            raise ValueError("boxes of different dimension")
        sides = []
        for a, b in zip(self.sides, other.sides):
            s = a.intersect(b)
            if s is None:
                return None
            sides.append(s)
        return Box(tuple(sides))

    def __str__(self) -> str:
        return " x ".join(str(s) for s in self.sides)


def make_box(*sides) -> Box:
    return Box(tuple(make_interval(lo, hi) for lo, hi in sides))


# An approval set: interval, box, or the empty set (None).
Approval = Union[Interval, Box, None]


@dataclass(frozen=True)
class LineSpectrum:
    """Spectrum consisting of every point of the real line."""

    kind = "line"


@dataclass(frozen=True)
class CandidateSpectrum:
    """Finite spectrum: a strictly increasing list of candidate platforms."""

    candidates: tuple[Coord, ...]

    kind = "candidates"


@dataclass(frozen=True)
class BoxSpectrum:
    """d-dimensional spectrum; approval sets are d-boxes."""

    dimension: int

    kind = "box"


Spectrum = Union[LineSpectrum, CandidateSpectrum, BoxSpectrum]

LINE = LineSpectrum()


@dataclass(frozen=True)
class Voter:
    id: str
    approval: Approval


@dataclass(frozen=True)
class Society:
    """A spectrum plus an ordered list of voters with approval sets.

    Voter order is preserved and used for deterministic tie-breaking in
    every downstream computation (sweeps, colorings, witness selection).
    """

    spectrum: Spectrum
    voters: tuple[Voter, ...]

    @property
    def n(self) -> int:
        return len(self.voters)

    def voter_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.voters)

    def induced(self, ids: tuple[str, ...] | list[str]) -> "Society":
        """Sub-society on the given voters, preserving society order."""
        wanted = set(ids)
        missing = wanted - set(self.voter_ids())
        if missing:
            raise KeyError(f"unknown voter ids: {sorted(missing)}")
        return Society(self.spectrum, tuple(v for v in self.voters if v.id in wanted))


def linear_society(intervals, ids=None) -> Society:
    """Convenience constructor: a line society from ``(lo, hi)`` pairs.

    ``None`` entries become empty approval sets.  Default ids are v1, v2, ...
    """
    voters = []
    for i, iv in enumerate(intervals):
        vid = ids[i] if ids is not None else f"v{i + 1}"
        if iv is None:
            voters.append(Voter(vid, None))
        elif isinstance(iv, Interval):
            voters.append(Voter(vid, iv))
        else:
            voters.append(Voter(vid, make_interval(*iv)))
    return Society(LINE, tuple(voters))


def box_society(boxes, ids=None) -> Society:
    """Convenience constructor: a d-box society from per-voter side lists."""
    dim = None
    voters = []
    for i, b in enumerate(boxes):
        vid = ids[i] if ids is not None else f"v{i + 1}"
        if b is None:
            voters.append(Voter(vid, None))
            continue
        box = b if isinstance(b, Box) else make_box(*b)
        if dim is None:
            dim = box.dimension
        voters.append(Voter(vid, box))
    if dim is None:
        raise ValueError("cannot infer dimension: all approvals empty")
    return Society(BoxSpectrum(dim), tuple(voters))


def candidate_society(candidates, intervals, ids=None) -> Society:
    """Convenience constructor: candidate-spectrum society from intervals."""
    spec = CandidateSpectrum(tuple(as_coord(c) for c in candidates))
    line = linear_society(intervals, ids)
    return Society(spec, line.voters)


def validate(society: Society) -> list[str]:
    """Check every data invariant; return a list of violation descriptions.

    Violations are data, not failures: an empty list means the society is
    well formed.  Each message names the offending voter or spectrum rule.
    """
    violations: list[str] = []
    spec = society.spectrum

    if isinstance(spec, CandidateSpectrum):
        cs = spec.candidates
        if not cs:
            violations.append("spectrum: candidate list is empty")
        if any(cs[i] >= cs[i + 1] for i in range(len(cs) - 1)):
            violations.append("spectrum: candidates not strictly increasing")
    elif isinstance(spec, BoxSpectrum):
        if spec.dimension < 1:
            violations.append("spectrum: box dimension must be >= 1")

    if society.n < 1:
        violations.append("society has no voters")

    seen: set[str] = set()
    for v in society.voters:
        if v.id in seen:
            violations.append(f"voter {v.id}: duplicate id")
        seen.add(v.id)

        a = v.approval
        if a is None:
            continue
        if isinstance(spec, (LineSpectrum, CandidateSpectrum)):
            if not isinstance(a, Interval):
                violations.append(f"voter {v.id}: expected interval approval")
            elif a.lo > a.hi:
                violations.append(f"voter {v.id}: lo > hi")
        else:
            if not isinstance(a, Box):
                violations.append(f"voter {v.id}: expected box approval")
            elif a.dimension != spec.dimension:
                violations.append(f"voter {v.id}: dimension mismatch")
            else:
                for axis, side in enumerate(a.sides):
                    if side.lo > side.hi:
                        violations.append(f"voter {v.id}: lo > hi on axis {axis}")
    return violations


def require_valid(society: Society) -> None:
    """Raise ValueError listing all violations if the society is malformed."""
    violations = validate(society)
    if violations:
        raise ValueError("invalid society: " + "; ".join(violations))


def approved_candidates(interval: Interval | None, spectrum: CandidateSpectrum) -> tuple[Coord, ...]:
    """The candidates a voter with this interval approves (a contiguous run)."""
    if interval is None:
        return ()
    return tuple(c for c in spectrum.candidates if interval.contains(c))


def restrict_to_candidates(society: Society, candidates) -> Society:
    """Restrict a line society to a finite slate of candidate platforms.

    Each approval set becomes the candidates inside the voter's interval,
    stored as the minimal closed interval spanning them (its endpoints are
    candidates, so candidate membership is unchanged).  Voters approving no
    candidate are kept, with empty approval.
    """
    if not isinstance(society.spectrum, LineSpectrum):
        raise ValueError("restriction applies to line societies only")
    cs = sorted({as_coord(c) for c in candidates})
    if not cs:
        raise ValueError("candidate slate is empty")
    spec = CandidateSpectrum(tuple(cs))

    voters = []
    for v in society.voters:
        if v.approval is not None and not isinstance(v.approval, Interval):
            raise ValueError(f"voter {v.id}: line society carries a non-interval approval")
        approved = approved_candidates(v.approval, spec)
        approval = Interval(approved[0], approved[-1]) if approved else None
        voters.append(Voter(v.id, approval))
    return Society(spec, tuple(voters))


def to_box_society(society: Society) -> Society:
    """View a line society as the equivalent 1-box society."""
    if not isinstance(society.spectrum, LineSpectrum):
        raise ValueError("only line societies convert to 1-box societies")
    voters = tuple(
        Voter(v.id, None if v.approval is None else Box((v.approval,)))
        for v in society.voters
    )
    return Society(BoxSpectrum(1), voters)


# ---------------------------------------------------------------------------
# JSON interchange format (bit-exact):
#
#   {"spectrum": "line" | {"candidates": [c1, c2, ...]} | {"box": d},
#    "voters": [{"id": "v1", "interval": [lo, hi] | null}, ...]         or
#              [{"id": "v1", "box": [[lo1, hi1], ..., [lod, hid]] | null}, ...]}
#
# null means an empty approval set.  Coordinates are JSON numbers (parsed as
# exact decimals, never as binary floats) or "p/q" strings.
# ---------------------------------------------------------------------------


class SocietyFormatError(ValueError):
    """Raised when a society document does not match the JSON contract."""


def _coord_from_json(value) -> Coord:
    if isinstance(value, bool):
        raise SocietyFormatError(f"coordinate {value!r} is not a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SocietyFormatError(f"bad coordinate string {value!r}: {exc}") from exc
    raise SocietyFormatError(f"coordinate {value!r} is not a number or 'p/q' string")


def _coord_to_json(c: Coord):
    return c.numerator if c.denominator == 1 else coord_str(c)


def _interval_from_json(value, where: str) -> Interval | None:
    if value is None:
        return None
    if not isinstance(value, list) or len(value) != 2:
        raise SocietyFormatError(f"{where}: interval must be [lo, hi] or null")
    return Interval(_coord_from_json(value[0]), _coord_from_json(value[1]))


def society_from_obj(obj) -> Society:
    """Build a Society from parsed JSON data (see module-level format)."""
    if not isinstance(obj, dict):
        raise SocietyFormatError("top level must be an object")
    if "spectrum" not in obj or "voters" not in obj:
        raise SocietyFormatError("missing 'spectrum' or 'voters'")

    raw_spec = obj["spectrum"]
    spectrum: Spectrum
    if raw_spec == "line":
        spectrum = LINE
    elif isinstance(raw_spec, dict) and "candidates" in raw_spec:
        spectrum = CandidateSpectrum(
            tuple(_coord_from_json(c) for c in raw_spec["candidates"])
        )
    elif isinstance(raw_spec, dict) and "box" in raw_spec:
        d = raw_spec["box"]
        if not isinstance(d, int) or isinstance(d, bool):
            raise SocietyFormatError("box dimension must be an integer")
        spectrum = BoxSpectrum(d)
    else:
        raise SocietyFormatError(f"unknown spectrum {raw_spec!r}")

    if not isinstance(obj["voters"], list):
        raise SocietyFormatError("'voters' must be a list")
    voters = []
    for i, raw in enumerate(obj["voters"]):
        where = f"voters[{i}]"
        if not isinstance(raw, dict) or "id" not in raw:
            raise SocietyFormatError(f"{where}: each voter needs an 'id'")
        vid = raw["id"]
        if not isinstance(vid, str):
            raise SocietyFormatError(f"{where}: id must be a string")
        if "interval" in raw:
            approval: Approval = _interval_from_json(raw["interval"], where)
        elif "box" in raw:
            rawbox = raw["box"]
            if rawbox is None:
                approval = None
            elif isinstance(rawbox, list):
                sides = tuple(
                    _interval_from_json(s, f"{where} axis {a}") for a, s in enumerate(rawbox)
                )
                if any(s is None for s in sides):
                    raise SocietyFormatError(f"{where}: box sides may not be null")
                approval = Box(sides)  # type: ignore[arg-type]
            else:
                raise SocietyFormatError(f"{where}: box must be a list of sides or null")
        else:
            raise SocietyFormatError(f"{where}: voter needs 'interval' or 'box'")
        voters.append(Voter(vid, approval))

    return Society(spectrum, tuple(voters))


def society_to_obj(society: Society) -> dict:
    """Serialize a Society to JSON-ready data, preserving voter order."""
    spec = society.spectrum
    if isinstance(spec, LineSpectrum):
        raw_spec = "line"
    elif isinstance(spec, CandidateSpectrum):
        raw_spec = {"candidates": [_coord_to_json(c) for c in spec.candidates]}
    else:
        raw_spec = {"box": spec.dimension}

    voters = []
    for v in society.voters:
        a = v.approval
        if isinstance(a, Box):
            voters.append(
                {"id": v.id, "box": [[_coord_to_json(s.lo), _coord_to_json(s.hi)] for s in a.sides]}
            )
        elif isinstance(a, Interval):
            voters.append({"id": v.id, "interval": [_coord_to_json(a.lo), _coord_to_json(a.hi)]})
        elif isinstance(spec, BoxSpectrum):
            voters.append({"id": v.id, "box": None})
        else:
            voters.append({"id": v.id, "interval": None})
    return {"spectrum": raw_spec, "voters": voters}


def _parse_exact(text: str):
    # Parse JSON with float literals captured as exact decimals.
    return json.loads(text, parse_float=lambda s: Fraction(Decimal(s)))


def loads_society(text: str) -> Society:
    try:
        obj = _parse_exact(text)
    except json.JSONDecodeError as exc:
        raise SocietyFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return society_from_obj(obj)


def dumps_society(society: Society) -> str:
    return json.dumps(society_to_obj(society), separators=(",", ":")) + "\n"


def load_society(fp: Union[str, IO[str]]) -> Society:
    """Load a society from a path or an open text file."""
    if isinstance(fp, str):
        with open(fp, "r", encoding="utf-8") as f:
            return loads_society(f.read())
    return loads_society(fp.read())


def save_society(society: Society, fp: Union[str, IO[str]]) -> None:
    text = dumps_society(society)
    if isinstance(fp, str):
        with open(fp, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        fp.write(text)
