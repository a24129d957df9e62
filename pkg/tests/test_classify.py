from fractions import Fraction

from hypothesis import given

from adhm.classify import (
    classify,
    is_sj,
    jacobian,
    jacobian_rank,
    stabilizer_elements,
    stabilizer_lie,
    stabilizer_nontrivial_witness,
)
from adhm.core import AdhmDatum, group_action, mu
from adhm.experiments import FIRST_FAMILY, SECOND_FAMILY, regular_r2c1, triangular_family, stable_point
from adhm.ratmat import Matrix, det, random_matrix, rank, rank_rref
from adhm.strata import sample_stable, sample_stratum

from conftest import data


def _shift(X: AdhmDatum, D: AdhmDatum, t) -> AdhmDatum:
    return AdhmDatum(X.A + D.A * t, X.B + D.B * t, X.I + D.I * t, X.J + D.J * t)


def _split(v, c, r):
    cc, rc = c * c, r * c
    return AdhmDatum(Matrix.from_flat(v[:cc], c, c), Matrix.from_flat(v[cc:2 * cc], c, c),
                     Matrix.from_flat(v[2 * cc:2 * cc + rc], c, r), Matrix.from_flat(v[2 * cc + rc:], r, c))


@given(data(max_c=3))
def test_jacobian_matches_central_difference(X):
    # mu is quadratic, so (mu(X + D) - mu(X - D)) / 2 is exactly the derivative
    from adhm.ratmat import make_rng
    c, r = X.c, X.r
    Jac = jacobian(X)
    assert Jac.shape == (c * c, 2 * c * c + 2 * r * c)
    rng = make_rng(c * 10 + r)
    v = random_matrix(Jac.cols, 1, 3, rng)
    D = _split(v.col(0), c, r)
    expected = (mu(_shift(X, D, 1)) - mu(_shift(X, D, -1))) * Fraction(1, 2)
    assert Jac @ v == Matrix.column(expected.flat())


def test_jacobian_examples():
    X = stable_point()
    assert jacobian(X) == Matrix([[0, 0, 0, 1]])
    assert jacobian_rank(X) == 1
    assert jacobian_rank(AdhmDatum.zero(1, 1)) == 0
    assert is_sj(regular_r2c1())
    assert not is_sj(AdhmDatum.zero(1, 1))


@given(data(max_c=3))
def test_sj_iff_trivial_stabilizer_algebra(X):
    sj = jacobian_rank(X) == X.c ** 2
    assert sj == (stabilizer_lie(X).dim == 0)
    assert jacobian_rank(X) == rank_rref(jacobian(X))


@given(data(max_c=3))
def test_stabilizer_elements_commute_with_datum(X):
    for y in stabilizer_elements(X):
        assert (y @ X.A - X.A @ y).is_zero() and (y @ X.B - X.B @ y).is_zero()
        assert (y @ X.I).is_zero() and (X.J @ y).is_zero()


@given(data(max_c=3))
def test_witness_soundness(X):
    g = stabilizer_nontrivial_witness(X)
    if g is None:
        assert stabilizer_lie(X).dim == 0
        return
    assert g != Matrix.identity(X.c) and det(g) != 0
    assert group_action(g, X) == X


def test_stabilizer_examples():
    assert stabilizer_lie(stable_point()).dim == 0
    assert stabilizer_lie(AdhmDatum.zero(1, 2)).dim == 4
    g = stabilizer_nontrivial_witness(AdhmDatum.zero(1, 1))
    assert g is not None and group_action(g, AdhmDatum.zero(1, 1)) == AdhmDatum.zero(1, 1)
    assert stabilizer_nontrivial_witness(regular_r2c1()) is None


def test_classification_examples():
    rep = classify(regular_r2c1())
    assert (rep.is_solution, rep.stable, rep.costable, rep.regular, rep.sj, rep.ts) == (True,) * 6
    assert (rep.sigma_dim, rep.upsilon_dim, rep.tangent_dim) == (1, 0, 5)

    rep = classify(AdhmDatum.zero(1, 2))
    assert rep.is_solution
    assert not any([rep.stable, rep.costable, rep.regular, rep.sj, rep.ts])
    assert rep.sigma_dim == 0 and rep.stabilizer_dim == 4

    rep = classify(stable_point())
    assert rep.is_solution and rep.stable and not rep.costable and rep.sj and rep.ts
    assert rep.tangent_dim == 3


def test_report_field_order():
    assert list(classify(stable_point()).as_dict()) == [
        "is_solution", "stable", "costable", "regular", "sj", "stabilizer_dim", "ts",
        "sigma_dim", "upsilon_dim", "jacobian_rank", "tangent_dim",
    ]


def test_inclusion_chain_on_samples(rng):
    for r, c, s in [(1, 2, 1), (2, 3, 1), (2, 2, 0), (3, 3, 3), (1, 3, 0)]:
        for k in range(3):
            rep = classify(sample_stratum(r, c, s, rng, conjugate=True, generic=bool(k % 2)).X)
            if rep.stable or rep.costable:
                assert rep.sj
            if rep.sj:
                assert rep.ts


def test_sampled_stable_2_3_is_smooth(rng):
    rep = classify(sample_stable(2, 3, rng))
    assert rep.stable and rep.sj and rep.tangent_dim == 21


def test_first_family_separates_sj_from_stable_or_costable():
    X = triangular_family(**FIRST_FAMILY)
    rep = classify(X)
    assert rep.is_solution and rep.sj
    assert not rep.stable and not rep.costable


def test_second_family_report_is_generated():
    # recorded finding only: the algebra is computed and reported
    X = triangular_family(**SECOND_FAMILY)
    rep = classify(X)
    assert rep.is_solution
    assert rep.stabilizer_dim == stabilizer_lie(X).dim
    assert rank(jacobian(X)) == rep.jacobian_rank
