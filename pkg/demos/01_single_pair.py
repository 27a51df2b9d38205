"""
Deciding the direction of one pair
==================================

Draw a noisy nonlinear cause-effect pair, score both orientations and
read off the decision.
"""

import numpy as np

from lcube import decide_direction

rng = np.random.default_rng(0)
x = rng.uniform(0, 1, size=1000)
y = np.sin(4 * x) + x**2 + 0.05 * rng.standard_normal(1000)

###############################################################################
# Scores are code lengths in nats; the smaller one wins.
res = decide_direction(x, y, m_max=10)
print(f"L(Y|X) = {res.score_xy:10.2f} nats  (best m = {res.best_m_xy})")
print(f"L(X|Y) = {res.score_yx:10.2f} nats  (best m = {res.best_m_yx})")
print(f"decision: {res.decision.value}, confidence {res.confidence:.1f}")

###############################################################################
# Swapping the inputs swaps the scores and flips the decision.
flipped = decide_direction(y, x)
print("swapped:", flipped.decision.value, f"{flipped.confidence:.1f}")
