#!/usr/bin/env python3
"""Two experiments, one grid: the separated-spin scenario and the
interferometer-pair scenario produce the same weak-value tensor.

Run: python3 demos/equivalence_grids.py
"""

import numpy as np

from weaktensor import (
    cheshire,
    hardy,
    hardy_gamma,
    hardy_overlap_labels,
    marginalize,
    render_grid,
    total_sum,
)


def show(scenario):
    t = scenario.tensor()
    print(f"--- {scenario.name} ---")
    print(render_grid(t, scenario.axis_labels))
    return t


# The spin sits in one arm while the particle sits in the other: every row
# and column of the grid sums to the single-projector weak value.
c = show(cheshire())
print("position weak values (L, R):", np.round(marginalize(c, 1), 6).real)
print("spin weak values (up, down):", np.round(marginalize(c, 0), 6).real)
print()

# The interferometer pair: both particles are found in the forbidden arms,
# yet the joint forbidden event has weak value 0.
h = show(hardy())

# Swap the axes of the pair tensor and the two grids coincide exactly.
print("pair tensor transposed equals the spin/position tensor:",
      np.allclose(c.components, h.components.T, atol=1e-12))
print()

# Reading the +1/-1 cells as particle pairs: two ordinary pairs and one
# negative pair, i.e. 4 + 2 = 6 weakly present particles.
values = h.components.real.reshape(-1)
print("positive pairs:", int((values > 0.5).sum()), "negative pairs:", int((values < -0.5).sum()))
print()

# The overlap relabeling tells the same story in O / NO language.
show(hardy_overlap_labels(hardy()))

# Replacing annihilation by a relative phase gives a one-parameter family;
# its components grow like 1/gamma near the orthogonal endpoint.
print("--- phase-coupled family ---")
for gamma in (np.pi, 0.5, 0.05):
    t = hardy_gamma(gamma).tensor()
    print(f"gamma={gamma:<5g} a(L_p,L_e)={t.component((0, 0)):+.3f}  "
          f"total={total_sum(t).real:+.6f}")
