"""Restricting a line society to a finite slate of candidates.

With an infinite spectrum every platform is available; an election offers
only the platforms candidates actually adopt.  Restriction keeps each
voter's approved candidates (the slice of the slate inside their
interval) and can only lower agreement numbers.
"""

from agreeable import (
    AgreeParams,
    agreement,
    is_km_agreeable,
    linear_society,
    restrict_to_candidates,
)
from agreeable.society import approved_candidates, coord_str

voters = linear_society(
    [(1, 4), (2, 5), (3, 7), (6, 11), (8, 13), (8, 10), (10, 15)]
)

print("full spectrum agreement:", agreement(voters).agreement_number)
print("every 3 voters contain an agreeing pair:",
      is_km_agreeable(voters, AgreeParams(2, 3)).agreeable)

# Two candidates enter, at platforms 3 and 9.
election = restrict_to_candidates(voters, [3, 9])
for voter in election.voters:
    approved = approved_candidates(voter.approval, election.spectrum)
    shown = ", ".join(coord_str(c) for c in approved) or "(none)"
    print(f"  {voter.id} approves: {shown}")

report = agreement(election)
print("tallies:", {coord_str(c): k for c, k in report.per_candidate.items()})
print("best candidate reaches", report.agreement_number, "of", report.n, "voters")

# The pairwise-agreement guarantee weakens: v1, v4 and v7 now pairwise
# disagree, so the society is only (2,4)-agreeable, not (2,3)-agreeable.
print("(2,3) after restriction:", is_km_agreeable(election, AgreeParams(2, 3)))
print("(2,4) after restriction:", is_km_agreeable(election, AgreeParams(2, 4)).agreeable)
