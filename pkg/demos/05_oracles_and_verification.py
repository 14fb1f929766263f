"""Brute-force oracles and the seeded verification suites.

Every fast path in the package has an independent exhaustive counterpart:
sweeps vs endpoint scoring, greedy coloring vs exact clique and chromatic
numbers, subset search vs direct enumeration.  The verify suites wire
these together over seeded random instances.
"""

from agreeable import AgreeParams, agreement_graph, disjoint_cliques, random_graph
from agreeable.oracles import (
    brute_chromatic,
    brute_clique,
    brute_min_vertex_cover,
    check_cover_lemma,
    every_m_subset_has_k_clique,
)
from agreeable.verify import run_suites

graph = random_graph(9, 70, seed=2024)
omega = brute_clique(graph)
chi = brute_chromatic(graph)
print(f"random graph: omega={omega}, chi={chi} (omega <= chi always)")

cover = brute_min_vertex_cover(graph.complement())
print(f"complement's minimum cover {cover.size} == n - omega = {graph.n - omega}")

# Critical covers: if deleting any vertex drops the minimum cover size,
# the graph has at most twice-the-cover many vertices.
report = check_cover_lemma(graph)
print(f"cover lemma: z={report.cover_size}, hypothesis={report.hypothesis_holds}, "
      f"conclusion={report.conclusion_holds}")

# The clique-in-every-m-subset hypothesis is purely graph-theoretic; the
# two-block construction satisfies it while beating the n-m+k floor that
# holds only for m <= 2k-2.
params = AgreeParams(2, 3)
blocks = agreement_graph(disjoint_cliques(10, params))
print("two blocks satisfy the hypothesis:", every_m_subset_has_k_clique(blocks, params))
print("but their clique number", brute_clique(blocks), "< n-m+k =", 10 - 3 + 2)

# The full property suites, exactly what `agreeable verify` runs:
outcome = run_suites("all", trials=40, seed=11)
worst = max(outcome.results, key=lambda r: len(r.violations))
print(f"verify: {len(outcome.results)} properties, "
      f"{sum(r.checked for r in outcome.results)} checks, ok={outcome.ok}")
assert worst.ok
