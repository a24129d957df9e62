"""ADHM data and their representation-level constructions.

A datum ``X = (A, B, I, J)`` on ``V = Q^c`` and ``W = Q^r`` has
``A, B`` of shape ``c x c``, ``I`` of shape ``c x r`` and ``J`` of shape
``r x c``.  Over the rationals the adjoint is the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ratmat import (
    Matrix,
    Subspace,
    column_space,
    inverse,
    kernel_basis,
    rank,
)

__all__ = [
    "AdhmDatum",
    "CommutingPair",
    "BlockForm",
    "TypeVector",
    "NotASolutionError",
    "mu",
    "is_solution",
    "group_action",
    "star",
    "r_map",
    "stabilizing_subspace",
    "costabilizing_subspace",
    "is_stable",
    "is_costable",
    "is_regular",
    "adapted_basis",
    "block_form",
    "stable_restriction",
    "quotient_representation",
    "quotient_datum",
    "type_vector",
    "is_morphism",
    "inclusion_morphism",
    "projection_morphism",
]


class NotASolutionError(ValueError):
    """Raised when an operation requires ``mu(X) = 0``."""


@dataclass(frozen=True)
class AdhmDatum:
    A: Matrix
    B: Matrix
    I: Matrix
    J: Matrix

    def __post_init__(self):
        c = self.A.rows
        r = self.I.cols
        for name, m, shape in (("A", self.A, (c, c)), ("B", self.B, (c, c)),
                               ("I", self.I, (c, r)), ("J", self.J, (r, c))):
            if m.shape != shape:
                raise ValueError(f"{name} has shape {m.shape}, expected {shape}")

    @property
    def c(self) -> int:
        return self.A.rows

    @property
    def r(self) -> int:
        return self.I.cols

    @classmethod
    def from_lists(cls, A, B, I, J, c: int | None = None, r: int | None = None) -> "AdhmDatum":
        """Build from nested lists; ``c`` and ``r`` disambiguate empty blocks."""
        if c is None:
            c = len(A)
        if r is None:
            r = len(J)
        return cls(Matrix(A, c, c), Matrix(B, c, c), Matrix(I, c, r), Matrix(J, r, c))

    @classmethod
    def zero(cls, r: int, c: int) -> "AdhmDatum":
        return cls(Matrix.zeros(c, c), Matrix.zeros(c, c), Matrix.zeros(c, r), Matrix.zeros(r, c))

    def __neg__(self) -> "AdhmDatum":
        return AdhmDatum(-self.A, -self.B, -self.I, -self.J)


@dataclass(frozen=True)
class CommutingPair:
    P: Matrix
    Q: Matrix

    def __post_init__(self):
        if not (self.P.is_square() and self.P.shape == self.Q.shape):
            raise ValueError("commuting pair needs two square matrices of equal size")
        if self.P @ self.Q != self.Q @ self.P:
            raise ValueError("matrices do not commute")

    @property
    def n(self) -> int:
        return self.P.rows

    def as_datum(self) -> AdhmDatum:
        """The representation ``(N, 0, (P, Q, 0, 0))`` with empty framing."""
        n = self.n
        return AdhmDatum(self.P, self.Q, Matrix.zeros(n, 0), Matrix.zeros(0, n))


@dataclass(frozen=True)
class TypeVector:
    r: int
    s: int
    l: int


@dataclass(frozen=True)
class BlockForm:
    """Datum rewritten in a basis whose first ``s`` vectors span the stabilizing subspace.

    ``g`` is the change of basis: ``group_action(g, X)`` is the block upper
    triangular datum assembled from the blocks below.
    """

    g: Matrix
    s: int
    A1: Matrix
    A2: Matrix
    A3: Matrix
    B1: Matrix
    B2: Matrix
    B3: Matrix
    I1: Matrix
    J1: Matrix
    J2: Matrix

    def assemble(self) -> AdhmDatum:
        s, n, r = self.s, self.A3.rows, self.I1.cols
        A = Matrix.block([[self.A1, self.A2], [Matrix.zeros(n, s), self.A3]])
        B = Matrix.block([[self.B1, self.B2], [Matrix.zeros(n, s), self.B3]])
        I = Matrix.vstack(self.I1, Matrix.zeros(n, r))
        J = Matrix.hstack(self.J1, self.J2)
        return AdhmDatum(A, B, I, J)

    def block_equations(self) -> tuple[Matrix, Matrix, Matrix]:
        """Left-hand sides of the three block equations; all vanish on solutions."""
        top = self.A1.commutator(self.B1) + self.I1 @ self.J1
        mid = (self.A1 @ self.B2 - self.B1 @ self.A2 + self.A2 @ self.B3
               - self.B2 @ self.A3 + self.I1 @ self.J2)
        bottom = self.A3.commutator(self.B3)
        return top, mid, bottom


def mu(X: AdhmDatum) -> Matrix:
    return X.A.commutator(X.B) + X.I @ X.J


def is_solution(X: AdhmDatum) -> bool:
    return mu(X).is_zero()


def require_solution(X: AdhmDatum):
    if not is_solution(X):
        raise NotASolutionError("datum does not satisfy [A,B] + IJ = 0")


def group_action(g: Matrix, X: AdhmDatum) -> AdhmDatum:
    """``(g A g^-1, g B g^-1, g I, J g^-1)``."""
    if g.shape != (X.c, X.c):
        raise ValueError(f"g must be {X.c}x{X.c}")
    gi = inverse(g)  # SingularMatrixError on singular g
    return AdhmDatum(g @ X.A @ gi, g @ X.B @ gi, g @ X.I, X.J @ gi)


def star(X: AdhmDatum) -> AdhmDatum:
    return AdhmDatum(X.B.T, -X.A.T, X.J.T, -X.I.T)


def r_map(X: AdhmDatum) -> Matrix:
    """Blocks ``A^k B^l I`` for ``0 <= k, l < c``, k-major order."""
    c = X.c
    if c == 0:
        return Matrix.zeros(0, 0)
    blocks = []
    Ak = Matrix.identity(c)
    for _ in range(c):
        M = Ak @ X.I
        for _ in range(c):
            blocks.append(M)
            M = X.B @ M
        Ak = Ak @ X.A
    return Matrix.hstack(*blocks)


def stabilizing_subspace(X: AdhmDatum) -> Subspace:
    """Smallest ``A``, ``B``-invariant subspace containing ``im I``.

    Closure iteration; every non-final step raises the dimension, so at most
    ``c`` rounds run.
    """
    S = column_space(X.I)
    while True:
        grown = column_space(Matrix.hstack(S.basis, X.A @ S.basis, X.B @ S.basis))
        if grown.dim == S.dim:
            return S
        S = grown


def costabilizing_subspace(X: AdhmDatum) -> Subspace:
    """Largest ``A``, ``B``-invariant subspace inside ``ker J``.

    Held as the kernel of a growing constraint matrix ``K``:
    ``T_{k+1} = T_k ∩ A^-1 T_k ∩ B^-1 T_k = ker [K; K A; K B]``.
    """
    K = X.J
    current = rank(K)
    while True:
        K = Matrix.vstack(K, K @ X.A, K @ X.B)
        # drop dependent rows so K stays small
        K = column_space(K.T).basis.T
        if K.rows == current:
            return kernel_basis(K)
        current = K.rows


def is_stable(X: AdhmDatum) -> bool:
    return stabilizing_subspace(X).dim == X.c


def is_costable(X: AdhmDatum) -> bool:
    return costabilizing_subspace(X).dim == 0


def is_regular(X: AdhmDatum) -> bool:
    return is_stable(X) and is_costable(X)


def adapted_basis(S: Subspace) -> Matrix:
    """Columns: the basis of ``S`` followed by greedily chosen standard vectors."""
    return S.completion()


def block_form(X: AdhmDatum) -> BlockForm:
    sigma = stabilizing_subspace(X)
    s = sigma.dim
    P = adapted_basis(sigma)
    g = inverse(P)
    Y = AdhmDatum(g @ X.A @ P, g @ X.B @ P, g @ X.I, X.J @ P)
    return BlockForm(
        g=g, s=s,
        A1=Y.A[:s, :s], A2=Y.A[:s, s:], A3=Y.A[s:, s:],
        B1=Y.B[:s, :s], B2=Y.B[:s, s:], B3=Y.B[s:, s:],
        I1=Y.I[:s, :], J1=Y.J[:, :s], J2=Y.J[:, s:],
    )


def stable_restriction(X: AdhmDatum) -> AdhmDatum:
    bf = block_form(X)
    return AdhmDatum(bf.A1, bf.B1, bf.I1, bf.J1)


def quotient_representation(X: AdhmDatum) -> CommutingPair:
    """The pair induced on ``V / Σ_X``; requires a solution."""
    require_solution(X)
    bf = block_form(X)
    return CommutingPair(bf.A3, bf.B3)


def quotient_datum(X: AdhmDatum) -> AdhmDatum:
    return quotient_representation(X).as_datum()


def type_vector(X: AdhmDatum) -> TypeVector:
    s = stabilizing_subspace(X).dim
    return TypeVector(X.r, s, X.c - s)


def is_morphism(f: Matrix, g: Matrix, X: AdhmDatum, Y: AdhmDatum) -> bool:
    """Whether ``(f, g)`` with ``f: V -> V'`` and ``g: W -> W'`` intertwines ``X`` and ``Y``."""
    if f.shape != (Y.c, X.c) or g.shape != (Y.r, X.r):
        raise ValueError(f"morphism shapes {f.shape}, {g.shape} incompatible with "
                         f"({X.c},{X.r}) -> ({Y.c},{Y.r})")
    return (f @ X.A == Y.A @ f and f @ X.B == Y.B @ f
            and f @ X.I == Y.I @ g and g @ X.J == Y.J @ f)


def inclusion_morphism(X: AdhmDatum) -> tuple[Matrix, Matrix]:
    """``(f, g)`` embedding ``stable_restriction(X)`` into ``X``."""
    bf = block_form(X)
    P = inverse(bf.g)
    return P[:, :bf.s], Matrix.identity(X.r)


def projection_morphism(X: AdhmDatum) -> tuple[Matrix, Matrix]:
    """``(f, g)`` projecting ``X`` onto ``quotient_datum(X)``."""
    bf = block_form(X)
    return bf.g[bf.s:, :], Matrix.zeros(0, X.r)

