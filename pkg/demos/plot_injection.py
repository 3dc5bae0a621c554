"""
The injection xi and its missed labeled partitions
==================================================

A labeled partition has one starred part.  ``xi`` maps the labeled
partitions whose starred part is not 1 modulo d + 1 into those starred at
a gap smaller than d.  The number of targets it misses equals the slack
in the inequality between the total of dif_d and the total of mod'_d.
"""

from perimeter import bijections, verify
from perimeter.partitions import parse_labeled

d = 5
for text in ("14,13,11*,10,5,2", "14,13,11*,5,5,2"):
    print(text, "->", bijections.xi(parse_labeled(text), d))

# the four labeled partitions of perimeter 6 missed when d = 2
print(sorted(str(lp) for lp in bijections.xi_complement(6, 2)))

r = verify.check_ineq(6, 2)
print(r.details)

# The missed set is: starred part not 1 mod d+1, with a value that is 1 mod
# d+1 lying above it and at or below the part before it.  The shorter rule
# "the part before is itself 1 mod d+1" is exact for d <= 2 only.
print(verify.check_xi_literal(7, 3).summary())
missed = bijections.xi_complement(7, 3)
short = bijections.xi_complement_literal(7, 3)
print(len(missed), len(short), sorted(str(lp) for lp in missed - short))
