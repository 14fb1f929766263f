"""Exact agreement analysis for interval and box approval societies.

A society pairs a spectrum of platforms with voters whose approval sets
are closed intervals (on a line or a finite candidate slate) or
axis-aligned boxes.  The package computes agreement numbers and witnesses
exactly, decides (k,m)-agreeability, evaluates the associated
lower-bound guarantees, and ships brute-force oracles plus seeded
property suites that re-verify every claim on demand.
"""

from .agreeability import AgreeParams, AgreeabilityResult, is_km_agreeable, pigeonhole_sufficient
from .agreement import (
    AgreementReport,
    TwoPlatformCover,
    agreement,
    common_platform,
    good_set_count,
    good_set_lower_bound,
    two_platform_cover,
)
from .bounds import (
    BoundEntry,
    BoundSheet,
    Division,
    FractionalHellyBound,
    bound_sheet,
    clique_bound,
    division,
    fractional_helly_bound,
    proportion_bound,
    small_m_bound,
)
from .errors import CapExceededError
from .generators import (
    RandomConfig,
    clique_plus_isolated,
    disjoint_cliques,
    extremal_linear,
    five_cycle_boxes,
    random_graph,
    random_society,
)
from .graphs import Coloring, Graph, agreement_graph, clique_number_linear, greedy_interval_coloring
from .society import (
    Box,
    BoxSpectrum,
    CandidateSpectrum,
    Coord,
    Interval,
    LINE,
    LineSpectrum,
    Society,
    SocietyFormatError,
    Voter,
    box_society,
    candidate_society,
    dumps_society,
    linear_society,
    load_society,
    loads_society,
    make_box,
    make_interval,
    restrict_to_candidates,
    save_society,
    to_box_society,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AgreeParams",
    "AgreeabilityResult",
    "AgreementReport",
    "BoundEntry",
    "BoundSheet",
    "Box",
    "BoxSpectrum",
    "CandidateSpectrum",
    "CapExceededError",
    "Coloring",
    "Coord",
    "Division",
    "FractionalHellyBound",
    "Graph",
    "Interval",
    "LINE",
    "LineSpectrum",
    "RandomConfig",
    "Society",
    "SocietyFormatError",
    "TwoPlatformCover",
    "Voter",
    "agreement",
    "agreement_graph",
    "bound_sheet",
    "box_society",
    "candidate_society",
    "clique_bound",
    "clique_number_linear",
    "clique_plus_isolated",
    "common_platform",
    "disjoint_cliques",
    "division",
    "dumps_society",
    "extremal_linear",
    "five_cycle_boxes",
    "fractional_helly_bound",
    "good_set_count",
    "good_set_lower_bound",
    "greedy_interval_coloring",
    "is_km_agreeable",
    "linear_society",
    "load_society",
    "loads_society",
    "make_box",
    "make_interval",
    "pigeonhole_sufficient",
    "proportion_bound",
    "random_graph",
    "random_society",
    "restrict_to_candidates",
    "save_society",
    "small_m_bound",
    "to_box_society",
    "two_platform_cover",
    "validate",
]
