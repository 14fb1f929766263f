"""(k,m)-agreeability and the guarantees it buys.

A society is (k,m)-agreeable when every m voters include k who share a
platform.  For interval approval sets this local condition forces a
global floor under the agreement number; this demo evaluates those floors
and shows they are attained by explicit constructions.
"""

from agreeable import (
    AgreeParams,
    agreement,
    bound_sheet,
    clique_bound,
    division,
    extremal_linear,
    pigeonhole_sufficient,
    proportion_bound,
    random_society,
    RandomConfig,
    is_km_agreeable,
    two_platform_cover,
)

params = AgreeParams(4, 15)
d = division(params)
print(f"k={params.k}, m={params.m}: q={d.q}, rho={d.rho}")
print("guaranteed agreement proportion:", proportion_bound(params))

# The guarantee floor((n - rho)/q) is tight: a cyclic arrangement of q
# disjoint intervals plus rho singletons achieves it exactly.
society = extremal_linear(21, params)
print("tight example: n=21 =>", agreement(society).agreement_number,
      "== bound", clique_bound(21, params))

sheet = bound_sheet(society, params)
for entry in sheet.entries:
    print(f"  bound {entry.name}: {entry.value} satisfied={entry.satisfied}")

# On a random agreeable society the floors hold with room to spare.
cozy = RandomConfig(coord_min=0, coord_max=6, min_length=2, max_length=8)
trial = 0
while True:
    trial += 1
    candidate = random_society("line", 9, 500 + trial, cozy)
    if is_km_agreeable(candidate, AgreeParams(2, 3)).agreeable:
        break
print(f"random (2,3)-agreeable society found after {trial} draws")
print(bound_sheet(candidate, AgreeParams(2, 3)).to_obj())

# The half-the-voters guarantee comes with an explicit pair of platforms.
cover = two_platform_cover(candidate)
print(f"platforms {cover.x} and {cover.y} cover everyone; "
      f"the better one wins {cover.best_count} of {candidate.n}")

# A counting shortcut: 14 restaurants, everyone visits 5 consecutive ones.
print("pigeonhole guarantees (2,3)-agreeability:",
      pigeonhole_sufficient(14, 5, AgreeParams(2, 3)))
