"""The ADHM complex on the projective plane.

For a datum ``X`` the complex is

    V(-1) --alpha--> V + V + W --beta--> V(1)

with ``alpha = (zA + x, zB + y, zJ)`` and ``beta = (-zB - y, zA + x, zI)``.
Each map is stored as three coefficient matrices, one per coordinate.
Global sections of twists are computed with degree-lex monomials in
``x > y > z``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .core import (
    AdhmDatum,
    costabilizing_subspace,
    quotient_representation,
    require_solution,
    type_vector,
)
from .ratmat import Matrix, as_scalar, format_scalar, rank
from .spectrum import JointSpectrum, joint_spectrum

__all__ = [
    "PointP2",
    "MonadMatrices",
    "FiberReport",
    "SupportPoint",
    "Support",
    "PerverseInvariants",
    "monad_matrices",
    "compose_coefficients",
    "evaluate_fiber",
    "non_costable_locus",
    "singular_support",
    "support_from_spectrum",
    "monomials",
    "twisted_beta",
    "h0_twisted",
    "perverse_invariants",
    "euler_characteristic",
    "MAX_TWIST",
]

MAX_TWIST = 8
VARIABLES = ("x", "y", "z")


@dataclass(frozen=True, eq=False)
class PointP2:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in VARIABLES:
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not (self.x or self.y or self.z):
            raise ValueError("(0:0:0) is not a point of the projective plane")

    @classmethod
    def parse(cls, text: str) -> "PointP2":
        parts = text.replace("(", "").replace(")", "").replace(":", ",").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three homogeneous coordinates, got {text!r}")
        return cls(*parts)

    @classmethod
    def affine(cls, p, q) -> "PointP2":
        return cls(p, q, 1)

    def normalized(self) -> tuple[Fraction, Fraction, Fraction]:
        """Representative whose last nonzero coordinate is 1."""
        coords = (self.x, self.y, self.z)
        last = next(v for v in reversed(coords) if v)
        return tuple(v / last for v in coords)

    def __eq__(self, other):
        if not isinstance(other, PointP2):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    @property
    def on_infinity(self) -> bool:
        return self.z == 0

    def __str__(self):
        return "(" + ":".join(format_scalar(v) for v in (self.x, self.y, self.z)) + ")"


@dataclass(frozen=True)
class MonadMatrices:
    c: int
    r: int
    alpha: dict
    beta: dict

    def alpha_at(self, P: PointP2) -> Matrix:
        return self.alpha["x"] * P.x + self.alpha["y"] * P.y + self.alpha["z"] * P.z

    def beta_at(self, P: PointP2) -> Matrix:
        return self.beta["x"] * P.x + self.beta["y"] * P.y + self.beta["z"] * P.z


def monad_matrices(X: AdhmDatum) -> MonadMatrices:
    c, r = X.c, X.r
    Id, Z = Matrix.identity(c), Matrix.zeros(c, c)
    Zrc, Zcr = Matrix.zeros(r, c), Matrix.zeros(c, r)
    alpha = {
        "x": Matrix.vstack(Id, Z, Zrc),
        "y": Matrix.vstack(Z, Id, Zrc),
        "z": Matrix.vstack(X.A, X.B, X.J),
    }
    beta = {
        "x": Matrix.hstack(Z, Id, Zcr),
        "y": Matrix.hstack(-Id, Z, Zcr),
        "z": Matrix.hstack(-X.B, X.A, X.I),
    }
    return MonadMatrices(c, r, alpha, beta)


def compose_coefficients(M: MonadMatrices) -> dict[str, Matrix]:
    """Coefficients of ``beta . alpha`` on the quadratic monomials ``xx, xy, ..., zz``."""
    out = {}
    for u, v in combinations_with_replacement(VARIABLES, 2):
        term = M.beta[u] @ M.alpha[v]
        if u != v:
            term = term + M.beta[v] @ M.alpha[u]
        out[u + v] = term
    return out


@dataclass(frozen=True)
class FiberReport:
    point: PointP2
    rank_alpha: int
    rank_beta: int
    h0_fiber: int
    h1_fiber: int
    alpha_injective: bool


def evaluate_fiber(X: AdhmDatum, P: PointP2, monad: MonadMatrices | None = None) -> FiberReport:
    require_solution(X)
    M = monad or monad_matrices(X)
    ra = rank(M.alpha_at(P))
    rb = rank(M.beta_at(P))
    c, r = X.c, X.r
    return FiberReport(P, ra, rb, (2 * c + r - rb) - ra, c - rb, ra == c)


@dataclass(frozen=True)
class SupportPoint:
    """Affine point ``(p, q)``, i.e. ``(p:q:1)``, with a multiplicity."""

    p: Fraction
    q: Fraction
    multiplicity: int

    @property
    def point(self) -> PointP2:
        return PointP2.affine(self.p, self.q)

    def __str__(self):
        return f"({format_scalar(self.p)},{format_scalar(self.q)}) x {self.multiplicity}"


@dataclass(frozen=True)
class Support:
    """Located support points plus whatever did not split over the rationals."""

    points: tuple[SupportPoint, ...]
    size: int
    residue_degrees: tuple[int, ...] = field(default=())

    @property
    def total(self) -> int:
        return sum(pt.multiplicity for pt in self.points)

    @property
    def residue_mass(self) -> int:
        return self.size - self.total

    @property
    def complete(self) -> bool:
        return self.residue_mass == 0

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def support_from_spectrum(spectrum: JointSpectrum) -> Support:
    pts = tuple(sorted((SupportPoint(-p, -q, m) for p, q, m in spectrum.pairs),
                       key=lambda s: (s.p, s.q)))
    return Support(pts, spectrum.n, spectrum.residue_degrees)


def non_costable_locus(X: AdhmDatum) -> Support:
    """Points ``(-p, -q)`` for joint eigenpairs of ``(A, B)`` on the costabilizing subspace."""
    require_solution(X)
    U = costabilizing_subspace(X)
    if U.dim == 0:
        return Support((), 0)
    return support_from_spectrum(joint_spectrum(U.restrict(X.A), U.restrict(X.B)))


def singular_support(X: AdhmDatum) -> Support:
    """Joint spectrum of the quotient pair, sign-flipped; total multiplicity ``c - s``."""
    Z = quotient_representation(X)
    return support_from_spectrum(joint_spectrum(Z.P, Z.Q))


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent vectors of degree-``d`` forms in degree-lex order ``x > y > z``."""
    if d < 0:
        return ()
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


def twisted_beta(M: MonadMatrices, n: int) -> Matrix:
    """``beta`` on sections: ``(V + V + W) ⊗ S^n -> V ⊗ S^(n+1)``.

    Columns are indexed by (summand coordinate, monomial), rows by
    (V coordinate, monomial), both coordinate-major.
    """
    src, dst = monomials(n), monomials(n + 1)
    dst_index = {m: k for k, m in enumerate(dst)}
    width = 2 * M.c + M.r
    ns, nd = len(src), len(dst)
    rows = [[Fraction(0)] * (width * ns) for _ in range(M.c * nd)]
    shifts = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}
    for var, coeff in M.beta.items():
        dx, dy, dz = shifts[var]
        for k, (a, b, e) in enumerate(src):
            target = dst_index[(a + dx, b + dy, e + dz)]
            for i in range(M.c):
                crow = coeff.row(i)
                out = rows[i * nd + target]
                for j in range(width):
                    if crow[j]:
                        out[j * ns + k] += crow[j]
    return Matrix(rows, rows=M.c * nd, cols=width * ns)


def h0_twisted(X: AdhmDatum, n: int, max_twist: int = MAX_TWIST) -> int:
    """``dim H^0`` of the twist by ``O(n)`` of the degree-0 cohomology sheaf."""
    require_solution(X)
    if n < 0:
        raise ValueError("twist must be non-negative")
    if n > max_twist:
        raise ValueError(f"twist {n} exceeds the cap {max_twist}")
    Bn = twisted_beta(monad_matrices(X), n)
    kernel_dim = Bn.cols - rank(Bn)
    return kernel_dim - X.c * len(monomials(n - 1))


@dataclass(frozen=True)
class PerverseInvariants:
    rank: int
    charge: int
    length: int

    @property
    def chern_character(self) -> tuple[int, int]:
        """``(rank, charge + length)``, encoding ``ch = rank - (charge + length) h^2``."""
        return (self.rank, self.charge + self.length)


def perverse_invariants(X: AdhmDatum) -> PerverseInvariants:
    require_solution(X)
    tv = type_vector(X)
    support = singular_support(X)
    if support.complete and support.total != tv.l:
        raise AssertionError(f"support length {support.total} disagrees with type vector {tv}")
    return PerverseInvariants(tv.r, tv.s, tv.l)


def _chi_line(k: int) -> int:
    # Euler characteristic of O(k) on the projective plane
    return (k + 1) * (k + 2) // 2


def euler_characteristic(X: AdhmDatum, n: int) -> int:
    """Alternating sum of the Euler characteristics of the three twisted terms."""
    c, r = X.c, X.r
    return -c * _chi_line(n - 1) + (2 * c + r) * _chi_line(n) - c * _chi_line(n + 1)
