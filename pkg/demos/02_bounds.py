"""
Closed-form bounds versus dimension
===================================

Tabulates the ceiling log(2d/(d+1)) on the accessible information of any
2-design ensemble, together with the Scrooge lower bound on informational
power and the values reached by pretty-good strategies.  This is the data
that ``qdesign figure1 --bounds-only`` writes as CSV.
"""

# %%
from qdesign import accinfo_upper_bound, pg_mub_value, pg_sic_value, scrooge_bounds

print(f"{'d':>3} {'ceiling':>10} {'scrooge':>10} {'pg_sic':>10} {'pg_mub':>10}")
for d in range(2, 16):
    print(f"{d:>3} {accinfo_upper_bound(d):10.6f} {scrooge_bounds(d)[0]:10.6f} "
          f"{pg_sic_value(d):10.6f} {pg_mub_value(d):10.6f}")

# %%
# The ceiling creeps towards one bit but never reaches it.
for d in (10, 10**3, 10**6):
    print(d, 1 - accinfo_upper_bound(d))

# %%
# For a qubit the pretty-good MUB value already equals the optimum of 1/3.
# For a qutrit the pretty-good MUB value falls short of log(3/2).
import math

print(pg_mub_value(2), pg_mub_value(3), math.log2(1.5))
