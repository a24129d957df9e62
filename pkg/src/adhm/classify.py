"""Derivative of the moment map, stabilizers and the classification report.

Row-major vectorization is used throughout: an ``m x n`` matrix ``M`` is the
vector ``(M[0,0], M[0,1], ..., M[m-1,n-1])``, so ``vec(X M Y) =
kron(X, Y.T) vec(M)``.  Jacobian columns are ordered ``(a, b, i, j)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .core import (
    AdhmDatum,
    costabilizing_subspace,
    group_action,
    is_solution,
    stabilizing_subspace,
)
from .ratmat import Matrix, Subspace, det, kernel_basis, kron, rank

__all__ = [
    "ClassificationReport",
    "jacobian",
    "jacobian_rank",
    "is_sj",
    "stabilizer_lie",
    "stabilizer_elements",
    "stabilizer_nontrivial_witness",
    "classify",
]


def jacobian(X: AdhmDatum) -> Matrix:
    """Matrix of ``(a, b, i, j) -> [A, b] + [a, B] + I j + i J``."""
    Ic = Matrix.identity(X.c)
    d_a = kron(Ic, X.B.T) - kron(X.B, Ic)        # a B - B a
    d_b = kron(X.A, Ic) - kron(Ic, X.A.T)        # A b - b A
    d_i = kron(Ic, X.J.T)                        # i J
    d_j = kron(X.I, Ic)                          # I j
    return Matrix.hstack(d_a, d_b, d_i, d_j)


def jacobian_rank(X: AdhmDatum) -> int:
    return rank(jacobian(X))


def is_sj(X: AdhmDatum) -> bool:
    return jacobian_rank(X) == X.c ** 2


def _stabilizer_equations(X: AdhmDatum) -> Matrix:
    # y -> ([A,y], [B,y], yI, Jy), stacked as rows over vec(y)
    c = X.c
    Ic = Matrix.identity(c)
    return Matrix.vstack(
        kron(X.A, Ic) - kron(Ic, X.A.T),
        kron(X.B, Ic) - kron(Ic, X.B.T),
        kron(Ic, X.I.T),
        kron(X.J, Ic),
    )


def stabilizer_lie(X: AdhmDatum) -> Subspace:
    """Kernel of ``y -> ([A,y], [B,y], yI, Jy)`` inside ``End(V)`` (vectorized)."""
    return kernel_basis(_stabilizer_equations(X))


def stabilizer_elements(X: AdhmDatum) -> list[Matrix]:
    """Basis of ``stabilizer_lie(X)`` reshaped into ``c x c`` matrices."""
    c = X.c
    K = stabilizer_lie(X).basis
    return [Matrix.from_flat(K.col(j), c, c) for j in range(K.cols)]


def stabilizer_nontrivial_witness(X: AdhmDatum) -> Matrix | None:
    """An invertible ``g != id`` with ``g . X = X``, or ``None`` if the stabilizer is trivial.

    Uses ``g = id + t y`` for the first kernel element ``y``; at most ``c``
    values of ``t`` can make ``g`` singular, so ``t = 1, ..., c + 1`` suffices.
    """
    ys = stabilizer_elements(X)
    if not ys:
        return None
    y = ys[0]
    c = X.c
    Id = Matrix.identity(c)
    for t in range(1, c + 2):
        g = Id + y * t
        if det(g) != 0:
            if group_action(g, X) != X:
                raise AssertionError("stabilizer witness failed verification")
            return g
    raise AssertionError("no invertible perturbation found")


@dataclass(frozen=True)
class ClassificationReport:
    is_solution: bool
    stable: bool
    costable: bool
    regular: bool
    sj: bool
    stabilizer_dim: int
    ts: bool
    sigma_dim: int
    upsilon_dim: int
    jacobian_rank: int
    tangent_dim: int

    def as_dict(self) -> dict:
        return asdict(self)


def classify(X: AdhmDatum) -> ClassificationReport:
    c, r = X.c, X.r
    sigma = stabilizing_subspace(X).dim
    upsilon = costabilizing_subspace(X).dim
    stable = sigma == c
    costable = upsilon == 0
    jr = jacobian_rank(X)
    stab_dim = stabilizer_lie(X).dim
    ts = stabilizer_nontrivial_witness(X) is None
    return ClassificationReport(
        is_solution=is_solution(X),
        stable=stable,
        costable=costable,
        regular=stable and costable,
        sj=jr == c * c,
        stabilizer_dim=stab_dim,
        ts=ts,
        sigma_dim=sigma,
        upsilon_dim=upsilon,
        jacobian_rank=jr,
        tangent_dim=2 * c * c + 2 * r * c - jr,
    )

