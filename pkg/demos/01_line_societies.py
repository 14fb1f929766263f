"""Line societies: agreement numbers, witness platforms, consensus.

Five friends are picking a start time for a movie night.  Each is happy
with any time inside a personal window.  Where do the most windows stack
up, and is there a time everyone accepts?
"""

from fractions import Fraction

from agreeable import agreement, common_platform, linear_society, validate

friends = linear_society(
    [
        (18, 21),            # Ari: any time from 6pm to 9pm
        (19, 22),            # Bo
        (Fraction(39, 2), 21),  # Cat: 7:30pm to 9pm
        (20, 23),            # Dee
        (16, 19),            # Eli: prefers the early evening
    ],
    ids=["ari", "bo", "cat", "dee", "eli"],
)
assert validate(friends) == []

report = agreement(friends)
print(f"{report.n} friends, agreement number {report.agreement_number}")
print(f"agreement proportion: {report.proportion}")
for window in report.witnesses:
    print(f"best platforms: every time in {window}")

# Four of five windows overlap on [20, 21]; Eli's ends at 19, so no time
# suits everyone:
print("time acceptable to all:", common_platform(friends))

# Drop Eli and a full consensus window appears.
rest = friends.induced(["ari", "bo", "cat", "dee"])
print("without eli:", common_platform(rest))

# Closed windows touching at a single point still count as agreeing:
touching = linear_society([(18, 19), (19, 20)])
print("touching windows share a platform:", agreement(touching).agreement_number == 2)
