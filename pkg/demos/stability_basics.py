"""
Stability, costability and the star duality
===========================================

A few small data, classified by hand and by the library.
"""

from adhm import AdhmDatum, classify, star
from adhm.experiments import regular_r2c1, stable_point

# the smallest regular solution: r = 2, c = 1
X = regular_r2c1()
print(classify(X))

# one point of the plane: stable but not costable
P = stable_point()
rep = classify(P)
print("stable", rep.stable, "costable", rep.costable, "tangent", rep.tangent_dim)

# star swaps the two notions
print("star costable?", classify(star(P)).costable)
print("star twice is minus:", star(star(P)) == -P)

# the zero datum has every endomorphism in its stabilizer
print("stabilizer dim of zero (r=1, c=2):", classify(AdhmDatum.zero(1, 2)).stabilizer_dim)
