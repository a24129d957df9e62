import pytest

from adhm.classify import classify
from adhm.core import (
    AdhmDatum,
    CommutingPair,
    is_solution,
    is_stable,
    stabilizing_subspace,
    type_vector,
)
from adhm.experiments import stable_point
from adhm.ratmat import Matrix, kernel_basis, make_rng, rank
from adhm.strata import (
    audit_dimensions,
    fiber_map,
    sample_commuting,
    sample_stable,
    sample_stratum,
    stratum_dimension,
)


def test_sample_commuting(rng):
    assert sample_commuting(0, rng).n == 0
    assert sample_commuting(1, rng).n == 1
    for _ in range(5):
        Z = sample_commuting(3, rng)
        assert (Z.P @ Z.Q - Z.Q @ Z.P).is_zero()


def test_sample_stable(rng):
    X = sample_stable(1, 1, rng)
    assert X.I[0, 0] != 0 and X.J.is_zero() and is_stable(X)
    for generic in (False, True):
        for r, c in [(1, 3), (2, 3), (3, 2)]:
            if generic and r < 2:
                continue
            X = sample_stable(r, c, rng, generic=generic)
            assert is_solution(X) and is_stable(X)


def test_generic_sampler_reaches_nonzero_j(rng):
    X = sample_stable(2, 3, rng, generic=True)
    assert not X.J.is_zero()


def test_sampled_2_3_classification(rng):
    rep = classify(sample_stable(2, 3, rng))
    assert rep.stable and rep.sj and rep.tangent_dim == 21


def test_fiber_map_examples(rng):
    F = fiber_map(stable_point(), CommutingPair(Matrix([[0]]), Matrix([[0]])))
    assert F.shape == (1, 3)
    assert F == Matrix([[0, 0, 1]])
    assert rank(F) == 1 and kernel_basis(F).dim == 2

    X0 = AdhmDatum.zero(2, 0)
    F = fiber_map(X0, sample_commuting(3, rng))
    assert F.shape == (0, 6) and kernel_basis(F).dim == 6

    F = fiber_map(sample_stable(2, 2, rng, generic=True), sample_commuting(1, rng))
    assert rank(F) == 2


def test_fiber_map_needs_stable_base(rng):
    with pytest.raises(ValueError):
        fiber_map(AdhmDatum.zero(1, 1), sample_commuting(1, rng))


@pytest.mark.parametrize("r,c,s", [(1, 1, 1), (1, 2, 0), (2, 3, 1), (2, 4, 2), (3, 3, 0), (1, 4, 3)])
def test_sample_stratum_lands_in_stratum(r, c, s):
    rng = make_rng([r, c, s])
    for k in range(4):
        X = sample_stratum(r, c, s, rng, conjugate=bool(k % 2), generic=k >= 2).X
        assert is_solution(X)
        assert stabilizing_subspace(X).dim == s


def test_sample_stratum_special_cases(rng):
    X = sample_stratum(2, 3, 3, rng).X
    assert is_stable(X)
    Y = sample_stratum(2, 3, 0, rng).X
    assert Y.I.is_zero() and (Y.A @ Y.B - Y.B @ Y.A).is_zero()
    Z = sample_stratum(2, 3, 1, rng, conjugate=True).X
    tv = type_vector(Z)
    assert (tv.r, tv.s, tv.l) == (2, 1, 2)


def test_sample_stratum_is_deterministic():
    a = sample_stratum(2, 3, 1, make_rng(5), conjugate=True).X
    b = sample_stratum(2, 3, 1, make_rng(5), conjugate=True).X
    assert a == b


def test_sample_stratum_rejects_bad_arguments(rng):
    with pytest.raises(ValueError):
        sample_stratum(1, 2, 3, rng)


def test_stratum_dimension_examples():
    for r in range(1, 4):
        for c in range(5):
            assert stratum_dimension(r, c, c).formula == 2 * r * c + c * c
    for c in range(6):
        assert stratum_dimension(1, c, 0).formula == 2 * c + c * c
    row = stratum_dimension(2, 3, 1)
    assert row.formula == 19 and row.parametrization == 19


def test_audit_table_is_sorted_and_balanced():
    rows = audit_dimensions(3, 4)
    keys = [(a.r, a.c, a.s) for a in rows]
    assert keys == sorted(keys)
    assert all(a.equal for a in rows)
    assert len(rows) == 3 * sum(c + 1 for c in range(5))
