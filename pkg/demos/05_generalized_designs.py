"""
Arbitrary-rank SIC and MUB sets
===============================

Depolarizing a rank-one SIC or MUB set keeps its Gram-matrix structure.
Only the purity parameter changes.  The accessible-information bound then
interpolates between the rank-one ceiling and zero.
"""

# %%
from qdesign import builtin_mub, builtin_sic, depolarize, gen_mub_bound, gen_sic_bound
from qdesign import validate_generalized_mub, validate_generalized_sic

for t in (1.0, 0.75, 0.5, 0.25, 0.0):
    sic = depolarize(builtin_sic(3), t)
    mub = depolarize(builtin_mub(3), t)
    print(f"t={t:4.2f}  a={sic.parameter:.5f} bound {gen_sic_bound(3, sic.parameter):.6f} "
          f"valid {validate_generalized_sic(sic).passed}   "
          f"k={mub.parameter:.5f} bound {gen_mub_bound(3, mub.parameter):.6f} "
          f"valid {validate_generalized_mub(mub).passed}")
