"""
The bijection phi_d on boundary words
=====================================

``phi_d`` permutes the boundary words of each length.  For d = 1 it sends
the number of repeated parts of a partition to the number of even parts
of its image.  For larger d it carries small gaps to parts that are not
1 modulo d + 1.
"""

from perimeter import orbit, phi_d, phi_d_inverse
from perimeter.bijections import phi_on_partition
from perimeter.partitions import stat_dif, stat_even, stat_mod_prime, stat_rep

lam = (4, 4, 2, 2, 1)
mu = phi_on_partition(lam, 1)
print(lam, "->", mu)
print("rep =", stat_rep(lam), " even of image =", stat_even(mu))

# round trip on a word
w = "0010110011"
image = phi_d(w, 2)
print(w, "->", image, "->", phi_d_inverse(image, 2))

# dif_d of the source dominates mod'_d of the image
d = 3
for lam in [(7, 6, 4, 4, 1), (9, 5, 1), (3, 3, 3, 2, 2)]:
    mu = phi_on_partition(lam, d)
    print(lam, "dif =", stat_dif(lam, d), " image", mu, "mod' =", stat_mod_prime(mu, d))

# repeated application returns to the start; the cycle is the orbit
report = orbit("00001", 2)
print("orbit of 00001 under phi_2 has length", report.length)
print(" -> ".join(report.cycle))
