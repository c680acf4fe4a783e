"""
Forward model: plates, analyzers and coincidence classes
========================================================

Builds the Jones matrices used by the measurement plan, shows how a plate
acting on both photons mixes the three qutrit amplitudes, and checks the
closed-form outcome probabilities against the brute-force two-photon model.
"""

import numpy as np

from biqutrit import oracle
from biqutrit.core import random_qutrit
from biqutrit.jones import induced_qutrit_map, jones
from biqutrit.measurement import CONFIGS, outcome_probabilities

np.set_printoptions(precision=4, suppress=True)

# An eighth-wave plate with a horizontal axis only delays V by pi/4 ...
eighth_0 = jones(0.0, np.pi / 4)
print("lambda/8 @ 0:\n", eighth_0)

# ... so on the pair it multiplies (C1, C2, C3) by (1, e^{i pi/4}, i).
print("induced map:\n", induced_qutrit_map(eighth_0))

# Turned to 45 degrees the same plate mixes all three amplitudes.
print("induced map, lambda/8 @ 45:\n", induced_qutrit_map(jones(np.pi / 4, np.pi / 4)))

# %%
# Outcome probabilities for every configuration of the plan
state = random_qutrit(2024)
print("\nstate:", state.vector)
for name, cfg in CONFIGS.items():
    p = outcome_probabilities(state, name).as_tuple()
    ref = oracle.class_probabilities(state, name)
    print(f"{name} {cfg.plate.value:>10} {cfg.basis.value:>7}  p = {np.round(p, 5)}  |dev| = {max(abs(a - b) for a, b in zip(p, ref)):.1e}")
