"""
Finite counts
=============

Reconstruction error versus the number of coincidences per configuration,
with bootstrap error bars for a single run.
"""

from biqutrit.core import fidelity, random_qutrit
from biqutrit.experiments import sweep, sweep_csv
from biqutrit.measurement import simulate_counts
from biqutrit.reconstruction import reconstruct_counts

print(sweep_csv(sweep(trials=200, seed=0)))

# %%
# One state, 10^5 pairs per configuration, 200 bootstrap resamples
truth = random_qutrit(3)
rep = reconstruct_counts(simulate_counts(truth, 100_000, seed=1), n_boot=200, seed=2)
print("1 - F =", 1 - fidelity(rep.state, truth))
for key in ("abs_c1", "abs_c2", "abs_c3", "phi1", "phi3", "delta"):
    print(f"  sigma({key}) = {rep.errors[key]:.2e}")
