"""
Truncated generating functions
==============================

Every generating function in the package is a ratio of integer
polynomials whose denominator has constant term 1 or -1.  Long division
then gives exact coefficients to any order.
"""

from perimeter import series

# joint distribution of (rep, even) by perimeter: coefficient of x^n is a
# polynomial in p and q
s = series.gf_rep_even(6)
for n in range(1, 7):
    print(n, s[n])

# setting q = 1 recovers the rep distribution; p = q = 1 counts partitions
print(s.subs(q=1)[5])
print(s.subs(p=1, q=1).to_ints())

# totals of mod'_d through the t-derivative at t = 1
d = 2
print(series.gf_mod(d, 10).derivative_at("t").to_ints())
print(series.sum_series_mod(d, 10).to_ints())

# the difference series Delta_d is coefficientwise nonnegative
for d in (2, 3, 4):
    print(d, series.delta_series(d, 10).to_ints())
print(all(series.delta_series(d, 300).is_nonnegative() for d in range(13)))
