"""Acceptance sweeps.

Each ``criterion_*`` function runs one seeded property sweep and returns a
:class:`CriterionResult`.  The sample counts in :class:`SweepConfig` are
the full-size defaults; :meth:`SweepConfig.quick` scales them down for
smoke runs.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from .classify import classify
from .core import (
    AdhmDatum,
    costabilizing_subspace,
    group_action,
    is_costable,
    is_solution,
    is_stable,
    mu,
    quotient_representation,
    r_map,
    stabilizing_subspace,
    stable_restriction,
    star,
)
from .experiments import FIRST_FAMILY, remark_experiment, stable_point
from .monad import (
    PointP2,
    compose_coefficients,
    evaluate_fiber,
    h0_twisted,
    monad_matrices,
    monomials,
    non_costable_locus,
    singular_support,
    twisted_beta,
)
from .ratmat import Matrix, column_space, make_rng, random_invertible, random_matrix, rank
from .spectrum import charpoly, rational_roots
from .strata import audit_dimensions, fiber_map, sample_commuting, sample_stable, sample_stratum
from .uhlenbeck import sample_stable_with_cloud, uhlenbeck_image, uhlenbeck_invariants

__all__ = [
    "SweepConfig",
    "CriterionResult",
    "CRITERIA",
    "run_sweep",
    "hilbert_function_oracle",
    "local_length_oracle",
]

INFINITY_POINTS = (PointP2(1, 0, 0), PointP2(0, 1, 0), PointP2(1, 1, 0))


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 20260419
    stable_samples: int = 50         # per (r, c) for smoothness
    stratum_samples: int = 50        # per (r, c, s) for the closure and sampler checks
    fiber_samples: int = 10          # per (r, c, s) for fiber-map surjectivity
    monad_samples: int = 20          # per (r, c, s) for the cohomology comparisons
    random_data: int = 100
    random_points: int = 20
    conjugations: int = 10
    uhlenbeck_samples: int = 5       # per (r, c, k)

    @classmethod
    def quick(cls, seed: int | None = None) -> "SweepConfig":
        cfg = cls(stable_samples=5, stratum_samples=5, fiber_samples=2, monad_samples=2,
                  random_data=20, random_points=5, conjugations=3, uhlenbeck_samples=1)
        return cfg if seed is None else replace(cfg, seed=seed)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    checks: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] criterion {self.number:2d} {self.name}: {self.checks} checks{tail}"


class _Tally:
    def __init__(self):
        self.checks = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str):
        self.checks += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(what)
        elif not ok:
            self.failures.append("")

    def result(self, number: int, name: str) -> CriterionResult:
        bad = len(self.failures)
        detail = "" if not bad else f"{bad} failed; first: " + "; ".join(f for f in self.failures[:3] if f)
        return CriterionResult(number, name, bad == 0, self.checks, detail)


def _rng(cfg: SweepConfig, number: int):
    # one independent stream per criterion
    return make_rng([cfg.seed, number])


def _random_point(rng, bound: int = 10 ** 6) -> PointP2:
    while True:
        x, y, z = (int(v) for v in rng.integers(-bound, bound + 1, size=3))
        if x or y or z:
            return PointP2(x, y, z)


def _random_datum(r: int, c: int, rng, bound: int = 2) -> AdhmDatum:
    return AdhmDatum(random_matrix(c, c, bound, rng), random_matrix(c, c, bound, rng),
                     random_matrix(c, r, bound, rng), random_matrix(r, c, bound, rng))


def _stratum_family(rng, rs, cs, per, conjugate=True):
    for r in rs:
        for c in cs:
            for s in range(c + 1):
                for k in range(per):
                    yield r, c, s, sample_stratum(r, c, s, rng, conjugate=conjugate,
                                                  generic=bool(k % 2)).X


# ---------------------------------------------------------------------------
# oracles


def hilbert_function_oracle(point: PointP2, n: int) -> int:
    """Number of independent degree-``n`` forms vanishing at ``point``.

    Evaluates every monomial at the point; the answer is the kernel
    dimension of that single evaluation row.
    """
    mons = monomials(n)
    row = [point.x ** a * point.y ** b * point.z ** e for a, b, e in mons]
    return len(mons) - rank(Matrix([row], 1, len(mons)))


def local_length_oracle(P: Matrix, Q: Matrix, p: Fraction, q: Fraction) -> int:
    """Length at ``(p, q)`` of the module ``Q[x, y]``-module with ``x -> P``, ``y -> Q``.

    Computed as ``dim N - dim m^k N`` with ``m = (x - p, y - q)`` and
    ``k = dim N``, where ``m^k N`` is spanned by the images of the products
    ``(P - p)^a (Q - q)^b`` with ``a + b = k``.
    """
    n = P.rows
    if n == 0:
        return 0
    Id = Matrix.identity(n)
    Pp, Qq = P - Id * p, Q - Id * q
    blocks = [(Pp ** a) @ (Qq ** (n - a)) for a in range(n + 1)]
    return n - rank(Matrix.hstack(*blocks))


# ---------------------------------------------------------------------------
# criteria


def criterion_1(cfg: SweepConfig) -> CriterionResult:
    t = _Tally()
    for row in audit_dimensions(rmax=5, cmax=6):
        t.check(row.equal, f"(r,c,s)=({row.r},{row.c},{row.s}): {row.formula} vs {row.parametrization}")
    return t.result(1, "dimension formula = parametrization sum")


def criterion_2(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 2)
    t = _Tally()
    for r in range(1, 4):
        for c in range(1, 5):
            for k in range(cfg.stable_samples):
                X = sample_stable(r, c, rng, generic=bool(k % 2))
                X = group_action(random_invertible(c, 2, rng), X)
                rep = classify(X)
                t.check(rep.is_solution and rep.stable, f"({r},{c}) sample not a stable solution")
                t.check(rep.jacobian_rank == c * c, f"({r},{c}) jacobian rank {rep.jacobian_rank}")
                t.check(rep.tangent_dim == 2 * r * c + c * c, f"({r},{c}) tangent {rep.tangent_dim}")
    return t.result(2, "smoothness at stable points")


def criterion_3(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 3)
    t = _Tally()
    for r, c, s, X in _stratum_family(rng, range(1, 4), range(1, 5), cfg.stratum_samples):
        sigma = stabilizing_subspace(X)
        image = column_space(r_map(X))
        t.check(sigma.contains_subspace(image) and image.contains_subspace(sigma),
                f"({r},{c},{s}) closure != im R")
        t.check(is_stable(X) == (rank(r_map(X)) == c), f"({r},{c},{s}) stability vs rank R")
    return t.result(3, "stabilizing subspace = im R(X) on solutions")


def criterion_4(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 4)
    t = _Tally()
    for r in range(1, 4):
        for c in range(0, 6):
            for s in range(c + 1):
                for k in range(cfg.fiber_samples):
                    X1 = sample_stable(r, s, rng, generic=bool(k % 2))
                    Q = sample_commuting(c - s, rng)
                    F = fiber_map(X1, Q)
                    rk = rank(F)
                    t.check(rk == s * (c - s), f"({r},{c},{s}) rank {rk}")
                    t.check(F.cols - rk == (r + s) * (c - s), f"({r},{c},{s}) fiber dim {F.cols - rk}")
    return t.result(4, "fiber map surjectivity")


def criterion_5(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 5)
    t = _Tally()
    for r in range(1, 4):
        for c in range(0, 6):
            for s in range(c + 1):
                for k in range(cfg.fiber_samples):
                    X = sample_stratum(r, c, s, rng, conjugate=bool(k % 2), generic=k % 3 == 0).X
                    t.check(is_solution(X), f"({r},{c},{s}) mu != 0")
                    t.check(stabilizing_subspace(X).dim == s, f"({r},{c},{s}) wrong stratum")
    return t.result(5, "stratum sampler correctness")


def criterion_6(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 6)
    t = _Tally()
    for _ in range(cfg.random_data):
        r, c = int(rng.integers(0, 4)), int(rng.integers(0, 5))
        X = _random_datum(r, c, rng)
        coeffs = compose_coefficients(monad_matrices(X))
        t.check(coeffs["zz"] == mu(X), "z^2 coefficient != mu")
        t.check(all(M.is_zero() for key, M in coeffs.items() if key != "zz"), "stray monomial")
    for r, c, s, X in _stratum_family(rng, range(1, 3), range(1, 4), 2):
        t.check(all(M.is_zero() for M in compose_coefficients(monad_matrices(X)).values()),
                f"({r},{c},{s}) beta alpha != 0")
    return t.result(6, "beta . alpha = z^2 mu(X)")


def criterion_7(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 7)
    t = _Tally()
    for r, c, s, X in _stratum_family(rng, range(1, 3), range(1, 4), cfg.monad_samples):
        S = stable_restriction(X)
        for n in range(4):
            t.check(h0_twisted(X, n) == h0_twisted(S, n), f"({r},{c},{s}) n={n}")
    return t.result(7, "H0 of complex = H0 of stable restriction")


def _rank_drop_points(Z) -> set:
    """Rank-drop points of the quotient complex's beta, found from eigenvalue candidates."""
    n = Z.n
    cand_p = rational_roots(charpoly(Z.P))[0]
    cand_q = rational_roots(charpoly(Z.Q))[0]
    M = monad_matrices(Z.as_datum())
    drops = set()
    for p in cand_p:
        for q in cand_q:
            if rank(M.beta_at(PointP2(-p, -q, 1))) < n:
                drops.add((-p, -q))
    return drops


def criterion_8(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 8)
    t = _Tally()
    for r, c, s, X in _stratum_family(rng, range(1, 3), range(1, 4), cfg.monad_samples):
        tag = f"({r},{c},{s})"
        support = singular_support(X)
        Z = quotient_representation(X)
        t.check(support.complete and support.total == c - s, f"{tag} length {support.total}")
        t.check({(pt.p, pt.q) for pt in support} == _rank_drop_points(Z), f"{tag} rank-drop set")
        for pt in support:
            t.check(local_length_oracle(-Z.P, -Z.Q, pt.p, pt.q) == pt.multiplicity,
                    f"{tag} local length at ({pt.p},{pt.q})")
        zd = Z.as_datum()
        for P in INFINITY_POINTS:
            t.check(rank(monad_matrices(zd).beta_at(P)) == Z.n, f"{tag} rank drop at infinity")
        for n in range(4):
            t.check(h0_twisted(zd, n) == 0, f"{tag} quotient h0 n={n}")
            Bn = twisted_beta(monad_matrices(zd), n)
            t.check(Bn.rows - rank(Bn) == c - s, f"{tag} coker dim n={n}")
    return t.result(8, "H1 support and length from the quotient")


def _all_solution_samples(rng, cfg):
    for r, c, s, X in _stratum_family(rng, range(1, 3), range(1, 4), cfg.monad_samples):
        yield f"stratum({r},{c},{s})", X
    for r in (2, 3):
        for c in range(1, 4):
            for k in range(c + 1):
                yield f"cloud({r},{c},{k})", sample_stable_with_cloud(r, c, k, rng)


def criterion_9(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 9)
    t = _Tally()
    for tag, X in _all_solution_samples(rng, cfg):
        M = monad_matrices(X)
        locus = non_costable_locus(X)
        costable = is_costable(X)
        t.check((len(locus) == 0 and locus.complete) == costable, f"{tag} locus vs costability")
        for pt in locus:
            t.check(not evaluate_fiber(X, pt.point, M).alpha_injective, f"{tag} alpha injective at locus")
        for P in INFINITY_POINTS:
            t.check(rank(M.alpha_at(P)) == X.c, f"{tag} alpha at infinity")
        for _ in range(cfg.random_points):
            t.check(rank(M.alpha_at(_random_point(rng))) == X.c, f"{tag} alpha at random point")
    return t.result(9, "alpha injectivity and costability")


def criterion_10(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 10)
    t = _Tally()
    for k in range(cfg.random_data):
        r, c = int(rng.integers(0, 4)), int(rng.integers(0, 5))
        X = _random_datum(r, c, rng, bound=1)
        if k % 4 == 1 and c:
            # force a non-trivial stabilizing subspace
            X = sample_stratum(max(r, 1), c, int(rng.integers(0, c + 1)), rng, conjugate=True).X
        elif k % 4 == 2:
            X = AdhmDatum(X.A, X.B, Matrix.zeros(c, r), X.J)
        t.check(star(star(X)) == -X, "star(star X) != -X")
        t.check(is_stable(X) == is_costable(star(X)), "stable vs star costable")
        t.check(costabilizing_subspace(X).dim == c - stabilizing_subspace(star(X)).dim, "dimension duality")
    return t.result(10, "star duality")


def criterion_11(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 11)
    t = _Tally()
    samples = []
    for r in (2, 3):
        for c in range(1, 5):
            for k in range(c + 1):
                for _ in range(cfg.uhlenbeck_samples):
                    samples.append((f"cloud({r},{c},{k})", sample_stable_with_cloud(r, c, k, rng)))
    for c in range(1, 4):
        for _ in range(cfg.uhlenbeck_samples):
            samples.append((f"j0(1,{c})", sample_stable(1, c, rng)))
    for tag, X in samples:
        img = uhlenbeck_image(X)
        t.check(img.regular_part.c + img.cloud.n == X.c, f"{tag} charge conservation")
        rep = classify(img.regular_part)
        t.check(rep.is_solution and rep.regular, f"{tag} regular part not regular")
        again = uhlenbeck_image(img.regular_part)
        t.check(again.regular_part == img.regular_part and again.cloud.n == 0, f"{tag} idempotence")
        t.check(set(img.points) == set(non_costable_locus(X)), f"{tag} points vs non-costable locus")
        t.check(all(not pt.point.on_infinity for pt in img.points), f"{tag} point at infinity")
        fp = uhlenbeck_invariants(img)
        for _ in range(cfg.conjugations):
            Y = group_action(random_invertible(X.c, 2, rng), X)
            t.check(uhlenbeck_invariants(uhlenbeck_image(Y)) == fp, f"{tag} fingerprint not invariant")
    return t.result(11, "Uhlenbeck decomposition")


def criterion_12(cfg: SweepConfig) -> CriterionResult:
    t = _Tally()
    findings = remark_experiment()
    first = findings[0].report
    t.check(findings[0].mu_vanishes, "first family not a solution")
    t.check(not first.stable and not first.costable and first.sj, f"first family classified {first}")
    second = findings[1]
    # second family: generated and reported, not asserted
    t.check(second.mu_vanishes and second.report is not None, "second family report missing")
    detail = (f"first family {FIRST_FAMILY}: sj={first.sj}; second family: "
              f"stabilizer dim {len(second.stabilizer_basis)}, "
              f"witness {'found' if second.witness is not None else 'none'}, ts={second.report.ts}")
    res = t.result(12, "inclusion chain examples")
    return replace(res, detail=(res.detail + "; " if res.detail else "") + detail)


def criterion_13(cfg: SweepConfig) -> CriterionResult:
    t = _Tally()
    X = stable_point()
    loci = list(non_costable_locus(X))
    point = loci[0].point if loci else PointP2(0, 0, 1)
    expected = (0, 2, 5)
    for n in range(3):
        oracle = hilbert_function_oracle(point, n)
        got = h0_twisted(X, n)
        t.check(oracle == expected[n] and got == expected[n], f"n={n}: h0 {got}, oracle {oracle}")
    return t.result(13, "Hilbert function of one point")


def criterion_14(cfg: SweepConfig) -> CriterionResult:
    rng = _rng(cfg, 14)
    t = _Tally()
    for _ in range(cfg.random_data):
        r = int(rng.integers(1, 6))
        X = _random_datum(r, 1, rng, bound=9)
        quadric = sum((X.I[0, i] * X.J[i, 0] for i in range(r)), Fraction(0))
        t.check(mu(X) == Matrix([[quadric]]), "mu != sum x_i y_i")
    return t.result(14, "c = 1 quadric reduction")


CRITERIA: dict[int, Callable[[SweepConfig], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11, 12: criterion_12, 13: criterion_13, 14: criterion_14,
}


def run_sweep(cfg: SweepConfig | None = None, only=None) -> list[CriterionResult]:
    cfg = cfg or SweepConfig()
    numbers = sorted(only) if only else sorted(CRITERIA)
    return [CRITERIA[k](cfg) for k in numbers]

