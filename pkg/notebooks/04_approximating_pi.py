"""
Approximating pi with rational points
=====================================

Solve for the parameter alpha whose point on the circle has slope pi, then
push the convergents of alpha through the parametrization.
"""

# %%
# The auxiliary irrational
# ------------------------
from pellconic import ConicParams, FieldSpec, approx_over_conic, cf_expand, pythagorean_stream, solve_auxiliary

circle = ConicParams(0, -1)
alpha = solve_auxiliary(circle, "pi").root("+")
print(alpha, float(alpha))
print(cf_expand(alpha, 10).digits)

# %%
# Points on the circle
# --------------------
# The first convergent 1/1 lands on x = 0, where y/x is undefined, so it is skipped.
table = approx_over_conic(circle, "pi", 9, FieldSpec.real(60))
for step in table:
    print(step.n, step.p, step.q, step.ratio, step.abs_error, step.flag or "")

# %%
# Pythagorean triples
# -------------------
for step in pythagorean_stream("pi", 6).valid:
    print(step.triple, step.ratio)

# %%
# Other targets and conics
# ------------------------
for step in approx_over_conic(ConicParams(1, 1), "sqrt:2", 5).valid:
    print(step.x, step.y, float(step.ratio))
