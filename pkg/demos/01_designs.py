"""
SIC and MUB sets as quantum 2-designs
=====================================

Builds the built-in symmetric informationally complete (SIC) sets and
complete sets of mutually unbiased bases (MUBs), checks their overlap
structure and confirms the 2-design property through the frame potential.
"""

# %%
# A qubit SIC is the Weyl-Heisenberg orbit of one fiducial vector.  Its four
# Bloch vectors form a regular tetrahedron, so every pair overlaps with 1/3.
import numpy as np

from qdesign import builtin_mub, builtin_sic, check_design, validate_mub, validate_sic

sic2 = builtin_sic(2)
print("qubit SIC overlaps\n", np.round(sic2.overlaps(), 6))
print(validate_sic(sic2))

# %%
# The frame potential sum_xy p_x p_y |<x|y>|^4 is never smaller than
# 2/(d(d+1)).  It reaches that value exactly for 2-designs.
for name, states in [("SIC d=2", sic2), ("SIC d=3", builtin_sic(3)),
                     ("MUB d=3", builtin_mub(3)), ("MUB d=4", builtin_mub(4))]:
    d = states.dim
    report = check_design(states, 2)
    print(f"{name}: frame potential {report.frame_potential:.12f}  "
          f"target {2 / (d * (d + 1)):.12f}  2-design: {report.verdict}")

# %%
# A single orthonormal basis averages to the identity, which makes it a
# 1-design, but it is not a 2-design.
from qdesign import WeightedStateSet

basis = WeightedStateSet.uniform(np.eye(2))
print("basis 1-design:", check_design(basis, 1).verdict, " 2-design:", check_design(basis, 2).verdict)

# %%
# Vectors in one MUB basis are orthogonal.  Vectors from different bases
# overlap with 1/d.
mub4 = builtin_mub(4)
print(validate_mub(mub4))
print("distinct overlap values:", np.unique(np.round(mub4.overlaps(), 9)))
