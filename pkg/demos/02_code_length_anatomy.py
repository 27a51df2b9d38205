"""
What the code length is made of
===============================

For each knot count the conditional code length splits into the cost of
the knot count, the knot positions (interval occupancies), the
coefficients and the residuals. More knots buy a smaller residual term
at a higher parameter cost; the minimum balances the two.
"""

import numpy as np

from lcube import conditional_code_length, normalize_minmax

rng = np.random.default_rng(1)
x = normalize_minmax(rng.uniform(size=500))
y = normalize_minmax(np.sin(8 * x) + 0.01 * rng.standard_normal(500))

print(f"{'m':>3} {'L(m)':>7} {'L(k|m)':>8} {'L(b,beta)':>10} {'L(Y|theta)':>11} {'total':>10}")
for m in range(1, 11):
    c = conditional_code_length(x, y, m)
    print(f"{m:>3} {c.l_m:7.2f} {c.l_knots:8.2f} {c.l_coeffs:10.2f} {c.l_fit:11.2f} {c.total:10.2f}")

###############################################################################
# The fitted spline itself is available on the result.
fit = conditional_code_length(x, y, 6).fit
grid = np.linspace(0, 1, 5)
print("knots:", np.round(fit.knots, 3))
print("s(grid):", np.round(fit(grid), 3))
