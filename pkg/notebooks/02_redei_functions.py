"""
Rédei functions
===============

Powers of the matrix [[z+h, d], [1, z]] give polynomials N_n, D_n whose ratio
is the n-th power of z in the parametric group.
"""

# %%
# The classical case
# ------------------
# h = 0, d = 2 and z = 1 give the convergents of sqrt(2).
from fractions import Fraction

from pellconic import ConicParams, FieldSpec, nd_pair, p_pow, redei_Q, redei_table

for row in redei_table(0, 2, 1, 8):
    print(row.n, row.N, row.D, row.Q)

# %%
# Three strategies, one answer
# ----------------------------
for strategy in ("matrix", "recurrence", "naive"):
    pair = nd_pair(Fraction(1, 3), -2, Fraction(5, 7), 40, strategy)
    print(strategy, pair.D.denominator)

# %%
# Power and composition
# ---------------------
z = Fraction(3, 2)
print(redei_Q(0, 2, z, 5) == p_pow(z, 5, ConicParams(0, 2)))
print(redei_Q(0, 2, redei_Q(0, 2, z, 3), 4) == redei_Q(0, 2, z, 12))

# %%
# Norm identity
# -------------
h, d, z = Fraction(1, 2), Fraction(-3), Fraction(2, 3)
pair = nd_pair(h, d, z, 9)
print(pair.norm() == (z * z + h * z - d) ** 9)

# %%
# Permutations of F_p
# -------------------
# Over F_11 with d = 2 a non-residue, Q_n permutes the field when gcd(n, 12) = 1.
f = FieldSpec.prime(11)
print([redei_Q(f(0), f(2), f(z), 5).value for z in range(11)])
