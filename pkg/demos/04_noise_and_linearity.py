"""
Low noise helps, linear mechanisms do not
=========================================

Correct-decision rate on polynomial additive-noise pairs as the noise
level shrinks, and the symmetric case of linear Gaussian pairs where the
two scores agree on average and decisions are coin flips.
"""

import numpy as np

from lcube import Direction, decide_direction
from lcube.data import GeneratorConfig, generate, generate_linear_gaussian

for noise in (1.0, 0.5, 0.2, 0.05):
    ds = generate(GeneratorConfig("AN", pairs=100, samples_per_pair=1000, noise_level=noise, seed=3))
    rate = np.mean([decide_direction(p.x, p.y).decision is Direction.X_TO_Y for p in ds])
    print(f"AN noise {noise:4.2f}: {100 * rate:5.1f}% correct")

###############################################################################
lin = [decide_direction(p.x, p.y) for p in generate_linear_gaussian(100, 1000, seed=3)]
ratio = np.mean([r.score_xy / r.score_yx for r in lin])
rate = np.mean([r.decision is Direction.X_TO_Y for r in lin])
print(f"linear Gaussian: mean score ratio {ratio:.3f}, {100 * rate:.0f}% 'correct'")
