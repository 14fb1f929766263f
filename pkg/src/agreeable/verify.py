"""Seeded property suites cross-checking every fast path against oracles.

Each suite generates a deterministic stream of random instances from a
base seed (child seeds are ``crc32(label) * 1_000_003 + index`` offsets of
the base; see README) and re-verifies the package's guarantees on them:
sweeps against endpoint enumeration, greedy colorings against brute-force
clique numbers, every lower bound against computed agreement numbers, and
the purely graph-theoretic statements against exhaustive search.  The
fixed-construction regressions (tight generators, the 5-cycle box
society) run in every suite invocation regardless of the trial count.

A violation report always carries the child seed that reproduces the
failing instance, and the instance itself can be written to a directory
for replay.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .agreeability import AgreeParams, is_km_agreeable
from .agreement import agreement, common_platform, good_set_count, good_set_lower_bound, two_platform_cover
from .bounds import clique_bound, division, fractional_helly_bound, proportion_bound, small_m_bound
from .generators import (
    RandomConfig,
    clique_plus_isolated,
    disjoint_cliques,
    extremal_linear,
    five_cycle_boxes,
    random_graph,
    random_society,
)
from .graphs import agreement_graph, greedy_interval_coloring
from .oracles import (
    brute_agreement_line,
    brute_chromatic,
    brute_clique,
    brute_min_vertex_cover,
    check_cover_lemma,
    every_m_subset_has_k_clique,
    is_perfect_by_enumeration,
)
from .society import LINE, Society, Voter, dumps_society, restrict_to_candidates, to_box_society, validate

SUITES = ("linear", "box", "graph")

# One interval-length profile that keeps societies loosely connected and one
# that concentrates them, so both agreeable and non-agreeable instances occur.
SPREAD = RandomConfig(coord_min=0, coord_max=12, min_length=0, max_length=8)
CONCENTRATED = RandomConfig(coord_min=0, coord_max=5, min_length=2, max_length=8)
SPREAD_EMPTY = RandomConfig(coord_min=0, coord_max=12, min_length=0, max_length=8, empty_percent=15)


def child_seed(base: int, label: str, index: int) -> int:
    """Deterministic per-instance seed; stable across runs and platforms."""
    return base + zlib.crc32(label.encode("ascii")) * 1_000_003 + index


@dataclass
class PropertyResult:
    suite: str
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "property": self.name,
            "checked": self.checked,
            "violations": list(self.violations),
        }


class _Recorder:
    def __init__(self, suite: str, failure_dir: str | None):
        self.suite = suite
        self.results: dict[str, PropertyResult] = {}
        self.failure_dir = failure_dir

    def prop(self, name: str) -> PropertyResult:
        if name not in self.results:
            self.results[name] = PropertyResult(self.suite, name)
        return self.results[name]

    def check(self, name: str, ok: bool, detail: str, artifact: str | None = None) -> None:
        r = self.prop(name)
        r.checked += 1
        if not ok:
            r.violations.append(detail)
            if self.failure_dir and artifact is not None:
                path = Path(self.failure_dir) / f"{self.suite}_{name}_{len(r.violations)}.json"
                path.write_text(artifact, encoding="utf-8")

    def ordered(self) -> list[PropertyResult]:
        return [self.results[name] for name in sorted(self.results)]


def _km_pairs(rng: random.Random, n: int, count: int = 2, k_max: int = 6) -> list[AgreeParams]:
    pairs = []
    for _ in range(count):
        k = rng.randint(2, min(k_max, n))
        m = rng.randint(k, min(k_max, n))
        pairs.append(AgreeParams(k, m))
    return pairs


def run_linear_suite(trials: int, seed: int, failure_dir: str | None = None) -> list[PropertyResult]:
    rec = _Recorder("linear", failure_dir)

    for t in range(trials):
        shape_rng = random.Random(child_seed(seed, "linear-shape", t))
        n = shape_rng.randint(2, 12)
        config = (SPREAD, CONCENTRATED, SPREAD_EMPTY)[t % 3]
        s_seed = child_seed(seed, "linear-society", t)
        society = random_society("line", n, s_seed, config)
        tag = f"seed={s_seed} n={n}"
        art = dumps_society(society)

        rec.check("generated-societies-validate", not validate(society), tag, art)

        report = agreement(society)
        rec.check(
            "sweep-matches-endpoint-oracle",
            report.agreement_number == brute_agreement_line(society),
            f"{tag} sweep={report.agreement_number} oracle={brute_agreement_line(society)}",
            art,
        )
        for w in report.witnesses:
            depth = sum(
                1
                for v in society.voters
                if v.approval is not None and v.approval.intersect(w) == w
            )
            rec.check(
                "witness-intervals-attain-maximum",
                depth == report.agreement_number,
                f"{tag} witness={w}",
                art,
            )

        all_nonempty = all(v.approval is not None for v in society.voters)
        if all_nonempty:
            platform = common_platform(society)
            rec.check(
                "superagreeable-iff-common-platform",
                (platform is not None) == (report.agreement_number == society.n),
                f"{tag} common={platform} a={report.agreement_number}",
                art,
            )
            if n >= 3 and is_km_agreeable(society, AgreeParams(2, 3)).agreeable:
                cover = two_platform_cover(society)
                covered = all(
                    v.approval.contains(cover.x) or v.approval.contains(cover.y)
                    for v in society.voters
                )
                rec.check(
                    "two-platform-cover-covers-everyone",
                    covered and cover.best_count >= -(-n // 2),
                    f"{tag} cover={cover}",
                    art,
                )

        pair_rng = random.Random(child_seed(seed, "linear-params", t))
        for params in _km_pairs(pair_rng, n):
            if n < params.m:
                continue
            if not is_km_agreeable(society, params).agreeable:
                continue
            cb = clique_bound(n, params)
            pb = proportion_bound(params)
            ok = report.agreement_number >= cb and report.proportion >= pb
            rec.check(
                "agreeable-societies-meet-linear-bounds",
                ok,
                f"{tag} k={params.k} m={params.m} a={report.agreement_number} cb={cb}",
                art,
            )
            rec.check(
                "clique-bound-dominates-proportion-bound",
                Fraction(cb) >= pb * n,
                f"{tag} k={params.k} m={params.m}",
            )

        if n <= 9:
            graph = agreement_graph(society)
            if any(v.approval is not None for v in society.voters):
                omega = brute_clique(graph)
                colors = greedy_interval_coloring(society).num_colors
                rec.check(
                    "greedy-colors-equal-omega-equal-sweep",
                    colors == omega == report.agreement_number,
                    f"{tag} colors={colors} omega={omega} a={report.agreement_number}",
                    art,
                )
            rec.check(
                "agreement-graph-is-perfect",
                is_perfect_by_enumeration(graph),
                tag,
                art,
            )

        slate_rng = random.Random(child_seed(seed, "linear-slate", t))
        slate = sorted(slate_rng.sample(range(-1, 14), 4))
        restricted = restrict_to_candidates(society, slate)
        sub_report = agreement(restricted)
        per_candidate_ok = all(
            sub_report.per_candidate[c]
            == sum(
                1 for v in society.voters if v.approval is not None and v.approval.contains(c)
            )
            for c in restricted.spectrum.candidates
        )
        rec.check(
            "restriction-preserves-candidate-tallies",
            per_candidate_ok and sub_report.agreement_number <= report.agreement_number,
            f"{tag} slate={slate}",
            art,
        )

    # Fixed-construction regressions (independent of the trial count).
    for params, n in [
        (AgreeParams(4, 15), 21),
        (AgreeParams(2, 3), 7),
        (AgreeParams(2, 4), 7),
        (AgreeParams(3, 5), 9),
        (AgreeParams(5, 7), 11),
    ]:
        society = extremal_linear(n, params)
        a = agreement(society).agreement_number
        cb = clique_bound(n, params)
        ok = (
            not validate(society)
            and a == cb
            and is_km_agreeable(society, params).agreeable
        )
        rec.check("extremal-construction-tight", ok, f"n={n} k={params.k} m={params.m} a={a} cb={cb}")

    for params, n in [(AgreeParams(3, 4), 10), (AgreeParams(2, 2), 6), (AgreeParams(4, 6), 9)]:
        society = clique_plus_isolated(n, params)
        expected = n - params.m + params.k
        a = agreement(society).agreement_number
        box_a = agreement(to_box_society(society)).agreement_number
        rec.check(
            "clique-plus-isolated-achieves-small-m-bound",
            not validate(society) and a == expected == box_a,
            f"n={n} k={params.k} m={params.m} a={a}",
        )

    return rec.ordered()


def run_box_suite(trials: int, seed: int, failure_dir: str | None = None) -> list[PropertyResult]:
    rec = _Recorder("box", failure_dir)

    small_m_params = [AgreeParams(k, m) for k in (2, 3, 4) for m in range(k, 2 * k - 1)]

    for t in range(trials):
        shape_rng = random.Random(child_seed(seed, "box-shape", t))
        d = 1 if t % 2 else 2
        n = shape_rng.randint(2, 12 if d == 1 else 10)
        base = (SPREAD, CONCENTRATED)[t % 4 // 2]
        config = RandomConfig(
            coord_min=base.coord_min,
            coord_max=base.coord_max,
            min_length=base.min_length,
            max_length=base.max_length,
            dimension=d,
        )
        s_seed = child_seed(seed, "box-society", t)
        society = random_society("box", n, s_seed, config)
        tag = f"seed={s_seed} n={n} d={d}"
        art = dumps_society(society)

        rec.check("generated-societies-validate", not validate(society), tag, art)

        report = agreement(society)
        graph = agreement_graph(society)
        omega = brute_clique(graph)
        rec.check(
            "box-depth-equals-brute-clique",
            report.agreement_number == omega,
            f"{tag} depth={report.agreement_number} omega={omega}",
            art,
        )

        if d == 1:
            line = Society(
                LINE,
                tuple(
                    Voter(v.id, None if v.approval is None else v.approval.sides[0])
                    for v in society.voters
                ),
            )
            rec.check(
                "one-box-matches-line-agreement",
                agreement(line).agreement_number == report.agreement_number,
                tag,
                art,
            )

        pair_rng = random.Random(child_seed(seed, "box-params", t))
        pairs = _km_pairs(pair_rng, n) + small_m_params
        seen: set[tuple[int, int]] = set()
        for params in pairs:
            if (params.k, params.m) in seen or n < params.m or params.m <= d:
                continue
            seen.add((params.k, params.m))
            if not is_km_agreeable(society, params).agreeable:
                continue
            fh = fractional_helly_bound(d, params)
            rec.check(
                "fractional-helly-power-inequality",
                fh.satisfied_by(report.proportion),
                f"{tag} k={params.k} m={params.m} a={report.agreement_number}",
                art,
            )
            if n >= d + 1:
                g = good_set_count(society)
                bound = good_set_lower_bound(n, d, params.k, params.m)
                rec.check(
                    "good-set-counting-inequality",
                    Fraction(g) >= bound,
                    f"{tag} k={params.k} m={params.m} g={g} bound={bound}",
                    art,
                )
            if params.m <= 2 * params.k - 2:
                sb = small_m_bound(n, params)
                rec.check(
                    "small-m-bound-on-boxes",
                    report.agreement_number >= sb,
                    f"{tag} k={params.k} m={params.m} a={report.agreement_number} bound={sb}",
                    art,
                )

    ring = five_cycle_boxes()
    graph = agreement_graph(ring)
    cycle_edges = {("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v1", "v5")}
    rec.check(
        "five-cycle-boxes-regression",
        set(graph.edges) == cycle_edges
        and brute_clique(graph) == 2
        and brute_chromatic(graph) == 3
        and agreement(ring).agreement_number == 2,
        f"edges={sorted(graph.edges)}",
        dumps_society(ring),
    )

    return rec.ordered()


def run_graph_suite(trials: int, seed: int, failure_dir: str | None = None) -> list[PropertyResult]:
    rec = _Recorder("graph", failure_dir)

    hypothesis_pairs = [
        AgreeParams(2, 2),
        AgreeParams(2, 3),
        AgreeParams(2, 4),
        AgreeParams(3, 3),
        AgreeParams(3, 4),
        AgreeParams(3, 5),
        AgreeParams(4, 5),
        AgreeParams(4, 6),
    ]

    for t in range(trials):
        shape_rng = random.Random(child_seed(seed, "graph-shape", t))
        n = shape_rng.randint(3, 10)
        percent = (50, 70, 85)[t % 3]
        g_seed = child_seed(seed, "graph-instance", t)
        graph = random_graph(n, percent, g_seed)
        tag = f"seed={g_seed} n={n} p={percent}"
        art = graph.to_json()

        omega = brute_clique(graph)
        chi = brute_chromatic(graph)
        rec.check("omega-at-most-chi", omega <= chi, f"{tag} omega={omega} chi={chi}", art)

        cert = brute_min_vertex_cover(graph.complement())
        rec.check(
            "cover-clique-complement-duality",
            n - omega == cert.size,
            f"{tag} omega={omega} cover={cert.size}",
            art,
        )

        for params in hypothesis_pairs:
            if n < params.m:
                continue
            if not every_m_subset_has_k_clique(graph, params):
                continue
            div = division(params)
            rec.check(
                "clique-hypothesis-implies-chi-bound",
                Fraction(chi) >= Fraction(n - div.rho, div.q),
                f"{tag} k={params.k} m={params.m} chi={chi}",
                art,
            )
            if params.m <= 2 * params.k - 2:
                rec.check(
                    "clique-hypothesis-implies-small-m-omega",
                    omega >= n - params.m + params.k,
                    f"{tag} k={params.k} m={params.m} omega={omega}",
                    art,
                )

    for t in range(trials):
        shape_rng = random.Random(child_seed(seed, "cover-shape", t))
        n = shape_rng.randint(1, 12)
        percent = (30, 50, 70)[t % 3]
        g_seed = child_seed(seed, "cover-instance", t)
        graph = random_graph(n, percent, g_seed)
        result = check_cover_lemma(graph)
        rec.check(
            "critical-cover-lemma-holds",
            not (result.hypothesis_holds and not result.conclusion_holds),
            f"seed={g_seed} n={n} z={result.cover_size}",
            graph.to_json(),
        )

    for params, n in [(AgreeParams(2, 3), 10), (AgreeParams(3, 5), 12), (AgreeParams(2, 4), 8)]:
        society = disjoint_cliques(n, params)
        graph = agreement_graph(society)
        a = agreement(society).agreement_number
        hypothesis = every_m_subset_has_k_clique(graph, params)
        rec.check(
            "disjoint-cliques-show-gate-necessity",
            hypothesis and a == -(-n // 2) and a < n - params.m + params.k,
            f"n={n} k={params.k} m={params.m} a={a}",
        )

    return rec.ordered()


@dataclass
class VerifyReport:
    seed: int
    trials: int
    results: list[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_obj(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "properties": [r.to_obj() for r in self.results],
        }


def run_suites(
    suite: str, trials: int, seed: int, failure_dir: str | None = None
) -> VerifyReport:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    results: list[PropertyResult] = []
    if suite in ("all", "linear"):
        results += run_linear_suite(trials, seed, failure_dir)
    if suite in ("all", "box"):
        results += run_box_suite(trials, seed, failure_dir)
    if suite in ("all", "graph"):
        results += run_graph_suite(trials, seed, failure_dir)
    return VerifyReport(seed, trials, results)
