"""Commuting-matrix models of finite subschemes of affine space."""

from ._hilbcm import (
    ClusteringAmbiguityError,
    Error,
    NotCommutingError,
    NotStableError,
    ParseError,
    are_equivalent,
    colength,
    datum_from_points,
    datum_to_ideal,
    hilbert_chow,
    ideal_to_datum,
    is_stable,
    krylov_rank,
    monad_check,
    monad_json,
    stabilize,
    variety_member,
)

__all__ = [
    "ClusteringAmbiguityError",
    "Error",
    "NotCommutingError",
    "NotStableError",
    "ParseError",
    "are_equivalent",
    "colength",
    "datum_from_points",
    "datum_to_ideal",
    "hilbert_chow",
    "ideal_to_datum",
    "is_stable",
    "krylov_rank",
    "monad_check",
    "monad_json",
    "stabilize",
    "variety_member",
]
