"""
Sections of the twisted monad
=============================

Global sections of the degree-zero cohomology, its support and the
Hilbert function of one point.
"""

from adhm import PointP2, h0_twisted, make_rng, sample_stratum, singular_support, stable_restriction
from adhm.acceptance import hilbert_function_oracle
from adhm.experiments import stable_point

X = stable_point()
print("h0:", [h0_twisted(X, n) for n in range(4)])
print("oracle:", [hilbert_function_oracle(PointP2(0, 0, 1), n) for n in range(4)])

# a non-stable solution has the sections of its stable part
rng = make_rng(11)
Y = sample_stratum(2, 3, 1, rng, conjugate=True).X
print([h0_twisted(Y, n) for n in range(3)], [h0_twisted(stable_restriction(Y), n) for n in range(3)])

# and its torsion lives at the sign-flipped joint spectrum of the quotient
for pt in singular_support(Y):
    print(pt)
