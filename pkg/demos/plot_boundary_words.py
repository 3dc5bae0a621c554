"""
Partitions of fixed perimeter and their boundary words
======================================================

The perimeter of a partition is its largest part plus its number of parts,
minus one.  Walking the boundary of the Young diagram gives a 01-word that
determines the partition, so there are exactly 2^(n-1) partitions of
perimeter n.
"""

from collections import Counter

from perimeter import enum_perimeter, format_partition, from_bits, stat_even, stat_rep, to_bits

# the boundary word of (6, 3, 3, 1): 1 for a vertical edge, 0 for a horizontal one
print(to_bits((6, 3, 3, 1)))
print(from_bits("0100110001"))

# all sixteen partitions of perimeter 5 with their (rep, even) pairs
for lam in enum_perimeter(5):
    print(f"{to_bits(lam)}  {format_partition(lam):10}  rep={stat_rep(lam)} even={stat_even(lam)}")

# both statistics have the same distribution
rep = Counter(stat_rep(lam) for lam in enum_perimeter(5))
even = Counter(stat_even(lam) for lam in enum_perimeter(5))
print(sorted(rep.items()))
print(sorted(even.items()))
