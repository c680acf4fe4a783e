"""
The C1 = -C3 family
===================

When C1 = -C3 the determinant of the phase system vanishes.  Both eighth-wave
configurations then only report sin(phi1), so phi1 and pi - phi1 give
identical counts.  Analyzers tilted to 22.5/112.5 degrees (config E) supply
cos(phi1) and close the gap.
"""

import cmath
import math

from biqutrit.core import QutritState, fidelity
from biqutrit.measurement import outcome_probabilities
from biqutrit.measurement import ideal_plan
from biqutrit.reconstruction import reconstruct


def special(r, phi):
    c1 = r * cmath.exp(1j * phi)
    return QutritState(c1, math.sqrt(1 - 2 * r * r), -c1)


a, b = special(0.5, 0.4), special(0.5, math.pi - 0.4)
for name in "ABCDE":
    pa = outcome_probabilities(a, name).as_tuple()
    pb = outcome_probabilities(b, name).as_tuple()
    same = max(abs(x - y) for x, y in zip(pa, pb)) < 1e-12
    print(f"config {name}: phi and pi - phi {'indistinguishable' if same else 'distinguished'}")

rep = reconstruct(ideal_plan(a))
print("\nbranch:", rep.branch, " D =", f"{rep.determinant:.1e}")
print("recovered phi1:", round(rep.state.phases.phi1, 9), " 1 - F:", 1 - fidelity(rep.state, a))
