"""Box societies: approval sets with several independent axes.

When platforms have d coordinates and voters accept a range per axis,
approval sets are axis-aligned boxes.  Pairwise structure is weaker in
boxes: the intersection graph can contain odd holes, and the guarantees
change shape.
"""

from fractions import Fraction

from agreeable import (
    AgreeParams,
    agreement,
    agreement_graph,
    box_society,
    five_cycle_boxes,
    fractional_helly_bound,
    good_set_count,
    good_set_lower_bound,
    is_km_agreeable,
)
from agreeable.oracles import brute_chromatic, brute_clique

# Two policy axes: spending (x) and openness (y).
committee = box_society(
    [
        ((0, 4), (0, 3)),
        ((2, 6), (1, 5)),
        ((3, 8), (2, 6)),
        ((5, 9), (0, 4)),
    ]
)
report = agreement(committee)
print("committee agreement number:", report.agreement_number)
print("achieved at grid points:", [tuple(map(str, p)) for p in report.witnesses])

# A ring of five boxes meeting only their neighbors: the agreement graph
# is a 5-cycle, so clique number 2 but chromatic number 3.  Box societies
# still satisfy depth == clique number, unlike general convex sets.
ring = five_cycle_boxes()
graph = agreement_graph(ring)
print("ring edges:", graph.sorted_edges())
print("clique number:", brute_clique(graph), " chromatic number:", brute_chromatic(graph))
print("agreement number equals clique number:",
      agreement(ring).agreement_number == brute_clique(graph))

# The ring is (2,3)-agreeable; the d-dimensional proportion guarantee is
# an exact (d+1)-th power comparison, never a float.
params = AgreeParams(2, 3)
print("(2,3)-agreeable:", is_km_agreeable(ring, params).agreeable)
bound = fractional_helly_bound(2, params)
print("proportion bound:", bound)
print("ring satisfies it:", bound.satisfied_by(agreement(ring).proportion))

# Its counting ingredient: triples of boxes with a common point.
g = good_set_count(ring)
print("commonly-intersecting triples:", g,
      ">= bound", good_set_lower_bound(ring.n, 2, params.k, params.m))

# In one dimension the same formula is strictly weaker than the exact
# interval guarantee of 1/2:
weaker = fractional_helly_bound(1, AgreeParams(2, 3))
lo, hi = weaker.enclosure()
print(f"d=1 version sits in [{float(lo):.6f}, {float(hi):.6f}], below {Fraction(1, 2)}")
