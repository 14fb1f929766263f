"""Closed-form lower bounds on agreement numbers, in exact arithmetic.

For a (k,m)-agreeable society the guarantees implemented here are:

* line/candidate spectra: agreement number >= ceil((n - rho)/q) where
  m - 1 = (k-1)q + rho with 0 <= rho <= k-2, hence agreement proportion
  >= (k-1)/(m-1);
* d-box spectra: agreement proportion >= 1 - (1 - C(k,d+1)/C(m,d+1))^(1/(d+1))
  (fractional intersection counting), and when m <= 2k-2 the sharper
  agreement number >= n - m + k.

The root in the box-proportion bound is irrational in general, so the
normative comparison is done on (d+1)-th powers of rationals; decimal
digits appear only in display output, as certified enclosures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .agreeability import AgreeParams, AgreeabilityResult, is_km_agreeable
from .agreement import agreement
from .society import BoxSpectrum, Society, coord_str


@dataclass(frozen=True)
class Division:
    """The division with remainder m - 1 = (k-1)*q + rho, 0 <= rho <= k-2."""

    q: int
    rho: int


def division(params: AgreeParams) -> Division:
    k, m = params.k, params.m
    if k < 2:
        raise ValueError("division with remainder requires k >= 2")
    q, rho = divmod(m - 1, k - 1)
    return Division(q, rho)


def clique_bound(n: int, params: AgreeParams) -> int:
    """ceil((n - rho)/q): the clique-number guarantee, best possible."""
    if n < params.m:
        raise ValueError(f"need n >= m, got n={n}, m={params.m}")
    div = division(params)
    return -((-(n - div.rho)) // div.q)


def proportion_bound(params: AgreeParams) -> Fraction:
    """(k-1)/(m-1): the agreement-proportion guarantee on the line."""
    if params.k < 2:
        raise ValueError("proportion bound requires k >= 2")
    return Fraction(params.k - 1, params.m - 1)


def nth_root_enclosure(x: Fraction, degree: int, digits: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of x**(1/degree) with width 10**-digits.

    Returns rationals (lo, hi) with lo <= x**(1/degree) <= hi, computed by
    integer binary search on t/10**digits; no floating point is involved.
    """
    if x < 0:
        raise ValueError("radicand must be non-negative")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    scale = 10**digits
    hi_int = 1
    while Fraction(hi_int, scale) ** degree < x:
        hi_int *= 2
    lo_int = 0
    # invariant: (lo_int/scale)^degree <= x < ((hi_int+1)/scale)^degree
    while lo_int < hi_int:
        mid = (lo_int + hi_int + 1) // 2
        if mid**degree * x.denominator <= x.numerator * scale**degree:
            lo_int = mid
        else:
            hi_int = mid - 1
    lo = Fraction(lo_int, scale)
    if lo**degree == x:  # root is exactly representable
        return lo, lo
    return lo, Fraction(lo_int + 1, scale)


def decimal_str(value: Fraction, sig_digits: int = 6) -> str:
    """Decimal rendering of a rational, rounded to significant digits."""
    with localcontext() as ctx:
        ctx.prec = sig_digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


@dataclass(frozen=True)
class FractionalHellyBound:
    """The proportion bound 1 - radicand**(1/degree), kept exact.

    ``radicand`` is 1 - C(k,d+1)/C(m,d+1) and ``degree`` is d+1.  The value
    is irrational in general and is never materialized as a float in
    pass/fail logic: a proportion satisfies the bound iff
    (1 - proportion)**degree <= radicand, a comparison of rationals.
    """

    radicand: Fraction
    degree: int

    def satisfied_by(self, proportion: Fraction) -> bool:
        shortfall = 1 - proportion
        if shortfall <= 0:
            return True
        return shortfall**self.degree <= self.radicand

    def enclosure(self, digits: int = 6) -> tuple[Fraction, Fraction]:
        root_lo, root_hi = nth_root_enclosure(self.radicand, self.degree, digits)
        return 1 - root_hi, 1 - root_lo

    def __str__(self) -> str:
        lo, hi = self.enclosure()
        return (
            f"1 - ({coord_str(self.radicand)})^(1/{self.degree})"
            f" in [{decimal_str(lo)}, {decimal_str(hi)}]"
        )


def fractional_helly_bound(d: int, params: AgreeParams) -> FractionalHellyBound:
    """Agreement-proportion bound for (k,m)-agreeable societies of convex
    sets in d dimensions (verified here on box societies)."""
    k, m = params.k, params.m
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if m <= d:
        raise ValueError(f"need m > d, got m={m}, d={d}")
    alpha = Fraction(math.comb(k, d + 1), math.comb(m, d + 1))
    return FractionalHellyBound(1 - alpha, d + 1)


def small_m_bound(n: int, params: AgreeParams) -> int:
    """n - m + k: valid exactly in the regime k <= m <= 2k-2."""
    k, m = params.k, params.m
    if k < 2:
        raise ValueError("small-m bound requires k >= 2")
    if m > 2 * k - 2:
        raise ValueError(f"bound inapplicable: m={m} > 2k-2={2 * k - 2}")
    if n < m:
        raise ValueError(f"need n >= m, got n={n}, m={m}")
    return n - m + k


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    value: object = None
    satisfied: bool | None = None
    note: str = ""

    def to_obj(self) -> dict:
        obj: dict = {"name": self.name, "applicable": self.applicable}
        v = self.value
        if isinstance(v, FractionalHellyBound):
            lo, hi = v.enclosure()
            obj["value"] = {
                "radicand": coord_str(v.radicand),
                "degree": v.degree,
                "enclosure": [decimal_str(lo), decimal_str(hi)],
            }
        elif isinstance(v, Fraction):
            obj["value"] = coord_str(v)
            obj["value_decimal"] = decimal_str(v)
        elif v is not None:
            obj["value"] = v
        if self.satisfied is not None:
            obj["satisfied"] = self.satisfied
        if self.note:
            obj["note"] = self.note
        return obj


@dataclass(frozen=True)
class BoundSheet:
    """Every applicable guarantee for one (society, k, m), with verdicts.

    ``vacuous`` is set when the society is not (k,m)-agreeable: the
    theorems then promise nothing, and no entry carries a verdict.
    """

    params: AgreeParams
    n: int
    agreement_number: int
    vacuous: bool
    entries: tuple[BoundEntry, ...]
    agreeability_witness: tuple[str, ...] | None = field(default=None)

    @property
    def all_satisfied(self) -> bool:
        return all(e.satisfied for e in self.entries if e.applicable)

    def to_obj(self) -> dict:
        obj = {
            "k": self.params.k,
            "m": self.params.m,
            "n": self.n,
            "agreement_number": self.agreement_number,
            "agreement_proportion": coord_str(Fraction(self.agreement_number, self.n)),
            "vacuous": self.vacuous,
            "bounds": [e.to_obj() for e in self.entries],
        }
        if self.agreeability_witness is not None:
            obj["agreeability_witness"] = list(self.agreeability_witness)
        return obj


def bound_sheet(
    society: Society,
    params: AgreeParams,
    agreeability: AgreeabilityResult | None = None,
) -> BoundSheet:
    """Evaluate every bound applicable to this society against its
    computed agreement number.

    The agreeability verdict may be passed in to avoid recomputing it.
    """
    if params.k < 2:
        raise ValueError("bounds require k >= 2")
    report = agreement(society)
    n = report.n
    a = report.agreement_number
    proportion = report.proportion

    if agreeability is None:
        agreeability = is_km_agreeable(society, params)
    vacuous = not agreeability.agreeable

    entries: list[BoundEntry] = []
    is_box = isinstance(society.spectrum, BoxSpectrum)

    def verdict(ok: bool) -> bool | None:
        return None if vacuous else ok

    if not is_box:
        cb = clique_bound(n, params)
        entries.append(BoundEntry("clique", not vacuous, cb, verdict(a >= cb)))
        pb = proportion_bound(params)
        entries.append(BoundEntry("proportion", not vacuous, pb, verdict(proportion >= pb)))
    else:
        d = society.spectrum.dimension
        if params.m > d:
            fh = fractional_helly_bound(d, params)
            entries.append(
                BoundEntry("fractional_helly", not vacuous, fh, verdict(fh.satisfied_by(proportion)))
            )
        else:
            entries.append(BoundEntry("fractional_helly", False, note=f"needs m > d={d}"))
        if params.m <= 2 * params.k - 2:
            sb = small_m_bound(n, params)
            entries.append(BoundEntry("small_m", not vacuous, sb, verdict(a >= sb)))
        else:
            entries.append(
                BoundEntry("small_m", False, note=f"needs m <= 2k-2 = {2 * params.k - 2}")
            )

    return BoundSheet(
        params=params,
        n=n,
        agreement_number=a,
        vacuous=vacuous,
        entries=tuple(entries),
        agreeability_witness=agreeability.witness,
    )
