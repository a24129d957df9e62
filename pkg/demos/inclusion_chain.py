"""
Two upper-triangular families
=============================

Neither family is stable or costable.  The first still has a surjective
derivative; the second has a one-dimensional stabilizer algebra.
"""

from adhm.experiments import remark_experiment
from adhm.io import matrix_to_json

for f in remark_experiment():
    rep = f.report
    print(f.label, f.params)
    print("  jacobian rank", f.jacobian_rank, "sj", rep.sj, "ts", rep.ts)
    print("  stabilizer algebra", [matrix_to_json(y) for y in f.stabilizer_basis])
    print("  witness", matrix_to_json(f.witness) if f.witness is not None else None)
