"""
Powers of a point and their limit
=================================

The coordinates of P^n satisfy a second order recurrence. When |2x + hy| > 2
the ratio y_n/x_n converges to a quadratic irrational.
"""

# %%
# A hyperbola with h = -13/4, d = 2
# ---------------------------------
from fractions import Fraction

from pellconic import ConicParams, ConicPoint, fg_pair, point_ratio_limit, q_param

p = ConicPoint(4, 1, ConicParams(Fraction(-13, 4), 2))
for n in range(1, 6):
    pair = fg_pair(p, n)
    print(n, pair.F, pair.G, q_param(p, n), float(pair.G / pair.F))

# %%
# The limit in closed form
# ------------------------
lim = point_ratio_limit(p)
print(lim, "=", lim.reciprocal_form(), "~", float(lim))

# %%
# Halving
# -------
# q_{2n} is F_n/G_n, so doubling the exponent costs one pair of terms.
for n in range(1, 5):
    pair = fg_pair(p, n)
    print(q_param(p, 2 * n) == pair.F / pair.G)

# %%
# Rotations do not converge
# -------------------------
try:
    point_ratio_limit(ConicPoint(Fraction(3, 5), Fraction(4, 5), ConicParams(0, -1)))
except ValueError as exc:
    print(type(exc).__name__, exc)
