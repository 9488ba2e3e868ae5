"""
The d=4 MUB witness
===================

For the complete set of five MUBs in dimension four, one orthonormal basis
extracts exactly 3/5 bit.  Used as an input ensemble, the same basis gives
3/5 bit against the MUB measurement.  The optimizer reports how close its
search gets to this value and to the ceiling log(8/5).  Whether 3/5 is
optimal is left open.
"""

# %%
import numpy as np

from qdesign import (
    Ensemble,
    OptimizerConfig,
    Povm,
    accinfo_upper_bound,
    as_ensemble,
    as_povm,
    born_statistics,
    builtin_mub,
    maximize_accessible_info,
    mutual_information,
    ququart_witness_basis,
)

mub = builtin_mub(4)
basis = ququart_witness_basis()
print("I(E, Q) =", mutual_information(born_statistics(as_ensemble(mub), Povm.from_basis(basis))))
print("I(F, P) =", mutual_information(born_statistics(Ensemble.from_vectors(np.full(4, 0.25), basis),
                                                      as_povm(mub))))

# %%
res = maximize_accessible_info(as_ensemble(mub), OptimizerConfig(restarts=4, seed=0))
print(f"optimized {res.value:.9f}   ceiling {accinfo_upper_bound(4):.9f}")
