"""Exact linear algebra for ADHM data and their monad complexes."""

from .classify import ClassificationReport, classify, is_sj, jacobian, stabilizer_lie
from .core import (
    AdhmDatum,
    CommutingPair,
    NotASolutionError,
    TypeVector,
    block_form,
    costabilizing_subspace,
    group_action,
    is_costable,
    is_regular,
    is_solution,
    is_stable,
    mu,
    quotient_representation,
    r_map,
    stabilizing_subspace,
    stable_restriction,
    star,
    type_vector,
)
from .io import parse_datum, serialize_datum
from .monad import (
    PointP2,
    h0_twisted,
    monad_matrices,
    non_costable_locus,
    perverse_invariants,
    singular_support,
)
from .ratmat import Matrix, Subspace, make_rng
from .strata import audit_dimensions, sample_stable, sample_stratum
from .uhlenbeck import uhlenbeck_image, uhlenbeck_invariants

__version__ = "0.1.0"

__all__ = [
    "AdhmDatum", "CommutingPair", "NotASolutionError", "TypeVector", "ClassificationReport",
    "Matrix", "Subspace", "PointP2",
    "mu", "is_solution", "group_action", "star", "r_map",
    "stabilizing_subspace", "costabilizing_subspace", "is_stable", "is_costable", "is_regular",
    "block_form", "stable_restriction", "quotient_representation", "type_vector",
    "jacobian", "is_sj", "stabilizer_lie", "classify",
    "sample_stable", "sample_stratum", "audit_dimensions",
    "monad_matrices", "h0_twisted", "non_costable_locus", "singular_support", "perverse_invariants",
    "uhlenbeck_image", "uhlenbeck_invariants",
    "parse_datum", "serialize_datum", "make_rng",
]
