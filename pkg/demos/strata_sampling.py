"""
Sampling the strata
===================

Solutions are drawn stratum by stratum, checked, and the dimension
formula is compared with the parametrization count.
"""

from adhm import audit_dimensions, make_rng, sample_stratum, type_vector
from adhm.core import is_solution, stabilizing_subspace

rng = make_rng(7)

for s in range(4):
    X = sample_stratum(2, 3, s, rng, conjugate=True).X
    print(s, is_solution(X), stabilizing_subspace(X).dim, type_vector(X))

rows = audit_dimensions(rmax=3, cmax=4)
print(sum(a.equal for a in rows), "of", len(rows), "rows agree")
for a in rows[:6]:
    print(a)
