"""
The group of a conic
====================

Points of x^2 + hxy - dy^2 = 1 form a group, and a single line through the
point (-1, 0) turns that group into a product on parameters.
"""

# %%
# A Pell hyperbola
# ----------------
# On x^2 - 2y^2 = 1 the point (3, 2) generates the solutions of Pell's equation.
from fractions import Fraction

from pellconic import ALPHA, ConicParams, ConicPoint, FieldSpec, all_points, e_pow, eps, p_mul, tau

pell = ConicParams(0, 2)
g = ConicPoint(3, 2, pell)
for n in range(1, 6):
    print(n, e_pow(g, n))

# %%
# Parameters instead of points
# ----------------------------
# tau sends a point to the slope parameter (1 + x)/y. The identity (1, 0)
# goes to the extra symbol alpha.
print(tau(g), tau(g * g), p_mul(tau(g), tau(g), pell))
print(tau(ConicPoint.identity(pell)) is ALPHA)
print(eps(Fraction(3, 2), pell))

# %%
# The unit circle
# ---------------
# With h = 0, d = -1 the parameter m gives the rational point
# ((m^2 - 1)/(m^2 + 1), 2m/(m^2 + 1)).
circle = ConicParams(0, -1)
for m in (2, 3, Fraction(5, 2)):
    print(m, eps(Fraction(m), circle))

# %%
# Finite fields
# -------------
# When x^2 - hx - d has no root mod p the conic has exactly p + 1 points,
# so every point has order dividing p + 1.
f11 = ConicParams(0, 2, FieldSpec.prime(11))
pts = all_points(f11)
print(len(pts), sorted({min(k for k in range(1, 13) if e_pow(p, k) == ConicPoint.identity(f11)) for p in pts}))
