"""
Regular part plus point cloud
=============================

A stable solution with a two-dimensional costabilizing subspace splits
into a regular solution of charge one and two points.
"""

from adhm import group_action, make_rng, uhlenbeck_image, uhlenbeck_invariants
from adhm.ratmat import random_invertible
from adhm.uhlenbeck import sample_stable_with_cloud

rng = make_rng(3)
X = sample_stable_with_cloud(2, 3, 2, rng)
img = uhlenbeck_image(X)
print("charge", img.charge, "cloud", img.cloud.n)
for pt in img.points:
    print(pt)

# the fingerprint ignores the choice of basis
fp = uhlenbeck_invariants(img)
Y = group_action(random_invertible(3, 2, rng), X)
print(uhlenbeck_invariants(uhlenbeck_image(Y)) == fp)
