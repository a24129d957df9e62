"""Exact joint spectra of commuting rational matrices.

Only rational eigenvalues are located.  Whatever does not split over the
rationals is reported as a residue (irreducible factor degrees and the
dimension it accounts for) rather than approximated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import sympy

from .ratmat import Matrix, kernel_basis

__all__ = [
    "charpoly",
    "rational_roots",
    "irreducible_factor_degrees",
    "JointSpectrum",
    "joint_spectrum",
]


def charpoly(M: Matrix) -> tuple[Fraction, ...]:
    """Coefficients of ``det(t - M)``, highest degree first (Faddeev-LeVerrier)."""
    n = M.rows
    if n != M.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = [Fraction(1)]
    Mk = Matrix.zeros(n, n)
    Id = Matrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ (Mk + Id * coeffs[-1])
        coeffs.append(-Mk.trace() / k)
    return tuple(coeffs)


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in coeffs:
        acc = acc * x + a
    return acc


def _deflate(coeffs, root: Fraction) -> list[Fraction]:
    out = []
    acc = Fraction(0)
    for a in coeffs[:-1]:
        acc = acc * root + a
        out.append(acc)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs) -> tuple[dict[Fraction, int], list[Fraction]]:
    """Rational roots with multiplicity, plus the deflated cofactor.

    Rational-root theorem on the integer-scaled polynomial, with repeated
    deflation so multiplicities come out exactly.
    """
    poly = [Fraction(a) for a in coeffs]
    while poly and poly[0] == 0:
        poly.pop(0)
    roots: dict[Fraction, int] = {}
    while len(poly) > 1 and poly[-1] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        poly.pop()
    if len(poly) <= 1:
        return roots, poly
    den = 1
    for a in poly:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in poly]
    candidates = sorted({Fraction(sign * p, q)
                         for p in _divisors(ints[-1]) for q in _divisors(ints[0])
                         for sign in (1, -1)})
    for x in candidates:
        while len(poly) > 1 and _poly_eval(poly, x) == 0:
            roots[x] = roots.get(x, 0) + 1
            poly = _deflate(poly, x)
    return roots, poly


def irreducible_factor_degrees(coeffs) -> list[int]:
    """Degrees (with repetition) of the irreducible rational factors of a polynomial."""
    t = sympy.Symbol("t")
    if len(coeffs) <= 1:
        return []
    p = sympy.Poly([sympy.Rational(a.numerator, a.denominator) for a in coeffs], t, domain="QQ")
    _, factors = sympy.factor_list(p)
    degrees = []
    for f, mult in factors:
        degrees.extend([f.degree()] * mult)
    return sorted(degrees)


@dataclass(frozen=True)
class JointSpectrum:
    """Joint eigenvalue pairs ``(p, q)`` with generalized-eigenspace dimensions."""

    n: int
    pairs: tuple[tuple[Fraction, Fraction, int], ...]
    residue_degrees: tuple[int, ...] = field(default=())

    @property
    def located(self) -> int:
        return sum(m for _, _, m in self.pairs)

    @property
    def residue_mass(self) -> int:
        return self.n - self.located

    @property
    def complete(self) -> bool:
        return self.residue_mass == 0


def _generalized_kernel(M: Matrix, value: Fraction, power: int) -> Matrix:
    shifted = M - Matrix.identity(M.rows) * value
    return shifted ** power


def joint_spectrum(P: Matrix, Q: Matrix) -> JointSpectrum:
    """Joint spectrum of a commuting pair.

    The multiplicity of ``(p, q)`` is
    ``dim ker (P - p)^n ∩ ker (Q - q)^n`` with ``n`` the size.
    """
    n = P.rows
    if n == 0:
        return JointSpectrum(0, ())
    roots_p, rest_p = rational_roots(charpoly(P))
    roots_q, rest_q = rational_roots(charpoly(Q))
    residue = tuple(sorted(irreducible_factor_degrees(rest_p) + irreducible_factor_degrees(rest_q)))
    kp = {p: _generalized_kernel(P, p, n) for p in roots_p}
    kq = {q: _generalized_kernel(Q, q, n) for q in roots_q}
    pairs = []
    for p in sorted(roots_p):
        for q in sorted(roots_q):
            dim = kernel_basis(Matrix.vstack(kp[p], kq[q])).dim
            if dim:
                pairs.append((p, q, dim))
    return JointSpectrum(n, tuple(pairs), residue)
