"""Decomposition of a stable solution into a regular part and a point cloud.

In a basis whose first ``k`` vectors span the costabilizing subspace the
datum is block upper triangular with ``J = (0  J2)``.  The top-left pair is
a commuting pair (the cloud) and the bottom-right quadruple is regular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    AdhmDatum,
    CommutingPair,
    NotASolutionError,
    adapted_basis,
    costabilizing_subspace,
    is_costable,
    is_solution,
    is_stable,
)
from .monad import Support, SupportPoint, support_from_spectrum
from .ratmat import Matrix, inverse, kernel_basis, kron, make_rng, random_matrix
from .spectrum import charpoly, joint_spectrum
from .strata import KERNEL_COEFF_BOUND, MAX_DRAWS, SamplingError, sample_commuting, sample_stable

__all__ = [
    "UhlenbeckImage",
    "Fingerprint",
    "uhlenbeck_image",
    "uhlenbeck_invariants",
    "sample_stable_with_cloud",
]


@dataclass(frozen=True)
class UhlenbeckImage:
    regular_part: AdhmDatum
    cloud: CommutingPair
    points: Support
    g: Matrix

    @property
    def charge(self) -> int:
        return self.regular_part.c


@dataclass(frozen=True)
class Fingerprint:
    rank: int
    charge: int
    cloud_charpolys: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    points: tuple[SupportPoint, ...]


def uhlenbeck_image(X: AdhmDatum) -> UhlenbeckImage:
    if not is_solution(X):
        raise NotASolutionError("datum does not satisfy [A,B] + IJ = 0")
    if not is_stable(X):
        raise ValueError("the Uhlenbeck map is defined on stable solutions only")
    upsilon = costabilizing_subspace(X)
    k = upsilon.dim
    P = adapted_basis(upsilon)
    g = inverse(P)
    A, B, I, J = g @ X.A @ P, g @ X.B @ P, g @ X.I, X.J @ P
    cloud = CommutingPair(A[:k, :k], B[:k, :k])
    regular = AdhmDatum(A[k:, k:], B[k:, k:], I[k:, :], J[:, k:])
    return UhlenbeckImage(regular, cloud, support_from_spectrum(joint_spectrum(cloud.P, cloud.Q)), g)


def uhlenbeck_invariants(img: UhlenbeckImage) -> Fingerprint:
    """Conjugation-invariant summary: rank, charge, cloud characteristic polynomials, points."""
    return Fingerprint(
        rank=img.regular_part.r,
        charge=img.regular_part.c,
        cloud_charpolys=(charpoly(img.cloud.P), charpoly(img.cloud.Q)),
        points=img.points.points,
    )


def _cloud_fiber_map(cloud: CommutingPair, Xr: AdhmDatum) -> Matrix:
    # (a, b, i) -> A1 b - B1 a + a B3 - b A3 + i J2 with (A1, B1) the cloud
    k, m = cloud.n, Xr.c
    Ik, Im = Matrix.identity(k), Matrix.identity(m)
    d_a = kron(Ik, Xr.B.T) - kron(cloud.Q, Im)
    d_b = kron(cloud.P, Im) - kron(Ik, Xr.A.T)
    d_i = kron(Ik, Xr.J.T)
    return Matrix.hstack(d_a, d_b, d_i)


def sample_stable_with_cloud(r: int, c: int, k: int, rng) -> AdhmDatum:
    """A stable solution whose costabilizing subspace has dimension ``k``.

    The regular part of size ``c - k`` comes from the nonzero-``J`` sampler
    (so ``r >= 2`` unless ``k = c``); the off-diagonal blocks are a random
    point of the fiber of the middle block equation.  Draws are repeated
    until the assembled datum is stable.
    """
    if not 0 <= k <= c:
        raise ValueError("need 0 <= k <= c")
    m = c - k
    if r < 2 and m > 0:
        raise ValueError("a regular part of positive size needs r >= 2")
    rng = make_rng(rng)
    for _ in range(MAX_DRAWS):
        Xr = sample_stable(r, m, rng, generic=True)
        if not is_costable(Xr):
            continue
        cloud = sample_commuting(k, rng)
        K = kernel_basis(_cloud_fiber_map(cloud, Xr)).basis
        v = (K @ random_matrix(K.cols, 1, KERNEL_COEFF_BOUND, rng)).col(0)
        A2 = Matrix.from_flat(v[:k * m], k, m)
        B2 = Matrix.from_flat(v[k * m:2 * k * m], k, m)
        I1 = Matrix.from_flat(v[2 * k * m:], k, r)
        A = Matrix.block([[cloud.P, A2], [Matrix.zeros(m, k), Xr.A]])
        B = Matrix.block([[cloud.Q, B2], [Matrix.zeros(m, k), Xr.B]])
        I = Matrix.vstack(I1, Xr.I)
        J = Matrix.hstack(Matrix.zeros(r, k), Xr.J)
        X = AdhmDatum(A, B, I, J)
        if is_stable(X):
            assert is_solution(X) and costabilizing_subspace(X).dim == k
            return X
    raise SamplingError(f"no stable datum with cloud size {k} in ({r},{c}) after {MAX_DRAWS} draws")
