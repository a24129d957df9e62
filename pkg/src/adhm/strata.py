"""Constructive sampling of the strata ``dim Σ_X = s`` and dimension audits.

A point of the stratum is assembled in an adapted basis from a stable
solution of size ``s``, a commuting pair of size ``c - s`` and a vector of
the affine fiber cut out by the middle block equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    AdhmDatum,
    CommutingPair,
    group_action,
    is_solution,
    is_stable,
    r_map,
    stabilizing_subspace,
)
from .ratmat import Matrix, kernel_basis, kron, make_rng, random_invertible, random_matrix, rank

__all__ = [
    "StratumSample",
    "DimensionAudit",
    "SamplingError",
    "sample_commuting",
    "sample_stable",
    "fiber_map",
    "fiber_vector_to_blocks",
    "sample_stratum",
    "stratum_dimension",
    "audit_dimensions",
]

KERNEL_COEFF_BOUND = 5
MAX_DRAWS = 100


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class StratumSample:
    X: AdhmDatum
    target_s: int


def _distinct_rationals(n: int, rng, bound: int = 6) -> list[Fraction]:
    # small-denominator rationals keep the spectra readable
    pool: set[Fraction] = set()
    out = []
    while len(out) < n:
        v = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, 3)))
        if v not in pool:
            pool.add(v)
            out.append(v)
    return out


def _poly_in(M: Matrix, coeffs: list[int]) -> Matrix:
    n = M.rows
    acc = Matrix.zeros(n, n)
    for a in reversed(coeffs):
        acc = acc @ M + Matrix.identity(n) * a
    return acc


def sample_commuting(n: int, rng) -> CommutingPair:
    """``P`` diagonal with distinct rational entries and ``Q = q(P)`` with ``deg q < n``."""
    rng = make_rng(rng)
    P = Matrix.diag(_distinct_rationals(n, rng))
    coeffs = [int(v) for v in rng.integers(-3, 4, size=n)]
    return CommutingPair(P, _poly_in(P, coeffs))


def _generic_pair(r: int, c: int, rng) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Solution with diagonal ``A`` and nonzero ``J`` (needs ``r >= 2``).

    The diagonal of ``I J`` is forced to zero by choosing each column of
    ``J`` orthogonal to the matching row of ``I``; then ``[A, B] = -I J``
    is solved entrywise off the diagonal.
    """
    a = _distinct_rationals(c, rng)
    I = random_matrix(c, r, 3, rng)
    Jcols = []
    for i in range(c):
        row = Matrix([I.row(i)], 1, r)
        K = kernel_basis(row).basis
        weights = random_matrix(K.cols, 1, KERNEL_COEFF_BOUND, rng)
        Jcols.append((K @ weights).col(0))
    J = Matrix.from_columns(Jcols, r)
    IJ = I @ J
    diag_b = random_matrix(1, c, 3, rng).row(0)
    B = Matrix([[diag_b[i] if i == j else -IJ[i, j] / (a[i] - a[j]) for j in range(c)]
                for i in range(c)], c, c)
    return Matrix.diag(a), B, I, J


def sample_stable(r: int, c: int, rng, generic: bool = False) -> AdhmDatum:
    """A stable solution of size ``(r, c)``.

    By default this draws from the ``J = 0`` slice: ``A`` diagonal with
    distinct entries, ``B`` a polynomial in ``A`` and ``I`` random, redrawn
    until ``R(X)`` has rank ``c``.  With ``generic=True`` and ``r >= 2`` the
    diagonal-``A`` chart with nonzero ``J`` is used instead.
    """
    if r < 1 or c < 0:
        raise ValueError("need r >= 1 and c >= 0")
    rng = make_rng(rng)
    for _ in range(MAX_DRAWS):
        if generic and r >= 2 and c >= 1:
            A, B, I, J = _generic_pair(r, c, rng)
        else:
            pair = sample_commuting(c, rng)
            A, B = pair.P, pair.Q
            I = random_matrix(c, r, 3, rng)
            J = Matrix.zeros(r, c)
        X = AdhmDatum(A, B, I, J)
        if rank(r_map(X)) == c:
            assert is_solution(X)
            return X
    raise SamplingError(f"no stable datum of size ({r},{c}) after {MAX_DRAWS} draws")


def fiber_map(X1: AdhmDatum, Q: CommutingPair) -> Matrix:
    """Linear constraint on ``(A2, B2, J2)`` from the middle block equation.

    ``(a, b, j) -> A1 b - b A3 + a B3 - B1 a + I1 j`` with ``(A3, B3) = Q``;
    rows index ``Hom(N, Σ)`` row-major, columns are ``a``, ``b``, ``j``.
    """
    if not is_stable(X1):
        raise ValueError("fiber map needs a stable datum")
    s, n = X1.c, Q.n
    Is, In = Matrix.identity(s), Matrix.identity(n)
    d_a = kron(Is, Q.Q.T) - kron(X1.B, In)
    d_b = kron(X1.A, In) - kron(Is, Q.P.T)
    d_j = kron(X1.I, In)
    return Matrix.hstack(d_a, d_b, d_j)


def fiber_vector_to_blocks(v, s: int, n: int, r: int) -> tuple[Matrix, Matrix, Matrix]:
    v = list(v)
    k = s * n
    return (Matrix.from_flat(v[:k], s, n), Matrix.from_flat(v[k:2 * k], s, n),
            Matrix.from_flat(v[2 * k:], r, n))


def sample_stratum(r: int, c: int, s: int, rng, conjugate: bool = False,
                   generic: bool = False) -> StratumSample:
    """A solution with ``dim Σ_X = s`` built from the fiber-bundle parametrization."""
    if not 0 <= s <= c or r < 1:
        raise ValueError("need 0 <= s <= c and r >= 1")
    rng = make_rng(rng)
    n = c - s
    X1 = sample_stable(r, s, rng, generic=generic)
    Q = sample_commuting(n, rng)
    K = kernel_basis(fiber_map(X1, Q)).basis
    weights = random_matrix(K.cols, 1, KERNEL_COEFF_BOUND, rng)
    A2, B2, J2 = fiber_vector_to_blocks((K @ weights).col(0), s, n, r)
    A = Matrix.block([[X1.A, A2], [Matrix.zeros(n, s), Q.P]])
    B = Matrix.block([[X1.B, B2], [Matrix.zeros(n, s), Q.Q]])
    I = Matrix.vstack(X1.I, Matrix.zeros(n, r))
    J = Matrix.hstack(X1.J, J2)
    X = AdhmDatum(A, B, I, J)
    if conjugate and c:
        X = group_action(random_invertible(c, 2, rng), X)
    if not is_solution(X) or stabilizing_subspace(X).dim != s:
        raise AssertionError("stratum sample left its stratum")
    return StratumSample(X, s)


@dataclass(frozen=True)
class DimensionAudit:
    r: int
    c: int
    s: int
    formula: int
    parametrization: int

    @property
    def equal(self) -> bool:
        return self.formula == self.parametrization


def stratum_dimension(r: int, c: int, s: int) -> DimensionAudit:
    """Closed-form dimension of the stratum next to the sum over the fiber-bundle factors."""
    if not 0 <= s <= c:
        raise ValueError("need 0 <= s <= c")
    n = c - s
    formula = 2 * r * c + c * c - (r - 1) * n
    grassmannian = s * n
    stable_part = 2 * r * s + s * s
    commuting = n + n * n
    fiber = (r + s) * n
    return DimensionAudit(r, c, s, formula, grassmannian + stable_part + commuting + fiber)


def audit_dimensions(rmax: int, cmax: int, rmin: int = 1) -> list[DimensionAudit]:
    return [stratum_dimension(r, c, s)
            for r in range(rmin, rmax + 1)
            for c in range(cmax + 1)
            for s in range(c + 1)]
