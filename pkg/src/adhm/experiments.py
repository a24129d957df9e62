"""Named data and the two-parameter-family experiment on the inclusion chain.

The family lives in ``r = c = 2``::

    A = [[a1, a2], [0, a3]]   B = [[b1, b2], [0, b3]]
    I = [[i1, i2], [0, 0]]    J = [[0, j2], [0, j4]]

``span(e1)`` contains ``im I``, is invariant and lies in ``ker J``, so no
member is stable or costable.  Expanding ``[A, B] + IJ`` gives the single
condition ``(a1 - a3) b2 - (b1 - b3) a2 + i1 j2 + i2 j4 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import ClassificationReport, classify, jacobian_rank, stabilizer_elements, stabilizer_nontrivial_witness
from .core import AdhmDatum, is_solution, mu
from .ratmat import Matrix

__all__ = [
    "regular_r2c1",
    "stable_point",
    "zero_datum",
    "triangular_family",
    "triangular_condition",
    "FIRST_FAMILY",
    "SECOND_FAMILY",
    "FamilyFinding",
    "remark_experiment",
]


def regular_r2c1() -> AdhmDatum:
    """``A = B = 0``, ``I = (1, 0)``, ``J = (0, 1)^T``: the smallest regular solution."""
    return AdhmDatum.from_lists([[0]], [[0]], [[1, 0]], [[0], [1]])


def stable_point() -> AdhmDatum:
    """``(0, 0, 1, 0)`` with ``r = c = 1``: stable, not costable (ideal sheaf of a point)."""
    return AdhmDatum.from_lists([[0]], [[0]], [[1]], [[0]])


def zero_datum(r: int = 1, c: int = 1) -> AdhmDatum:
    return AdhmDatum.zero(r, c)


def triangular_family(a1, a2, a3, b1, b2, b3, i1, i2, j2, j4) -> AdhmDatum:
    return AdhmDatum.from_lists(
        [[a1, a2], [0, a3]],
        [[b1, b2], [0, b3]],
        [[i1, i2], [0, 0]],
        [[0, j2], [0, j4]],
    )


def triangular_condition(a1, a2, a3, b1, b2, b3, i1, i2, j2, j4) -> Fraction:
    """The scalar whose vanishing is equivalent to ``mu = 0`` on the family."""
    return Fraction(a1 - a3) * b2 - Fraction(b1 - b3) * a2 + Fraction(i1) * j2 + Fraction(i2) * j4


# a1 != a3, b1 != b3, i1 != 0, j4 != 0
FIRST_FAMILY = dict(a1=0, a2=1, a3=1, b1=0, b2=2, b3=2, i1=1, i2=1, j2=1, j4=-1)
# a1 = a3, b1 = b3 (both nonzero), i1, i2, j2, j4 nonzero
SECOND_FAMILY = dict(a1=1, a2=1, a3=1, b1=2, b2=1, b3=2, i1=1, i2=1, j2=1, j4=-1)


@dataclass(frozen=True)
class FamilyFinding:
    label: str
    params: dict
    datum: AdhmDatum
    mu_vanishes: bool
    jacobian_rank: int
    stabilizer_basis: tuple[Matrix, ...]
    witness: Matrix | None
    report: ClassificationReport


def _finding(label: str, params: dict) -> FamilyFinding:
    X = triangular_family(**params)
    return FamilyFinding(
        label=label,
        params=dict(params),
        datum=X,
        mu_vanishes=is_solution(X),
        jacobian_rank=jacobian_rank(X),
        stabilizer_basis=tuple(stabilizer_elements(X)),
        witness=stabilizer_nontrivial_witness(X),
        report=classify(X),
    )


def remark_experiment() -> list[FamilyFinding]:
    """Evaluate both parameter families; nothing is asserted here."""
    findings = [_finding("first family", FIRST_FAMILY), _finding("second family", SECOND_FAMILY)]
    for f in findings:
        if not mu(f.datum).is_zero():
            raise AssertionError(f"{f.label}: parameters violate the ADHM equation")
    return findings
