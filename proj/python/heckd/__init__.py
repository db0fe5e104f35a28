"""Exact engine for the extended affine Hecke algebra of type D."""

from ._heckd import (  # noqa: F401
    RHO,
    AffinePerm,
    HeckdError,
    HeckeElt,
    KLTable,
    Laurent,
    ReducedWord,
    bar,
    canonical_expand,
    enumerate_compositions,
    enumerate_up_to_length,
    kl_cache_load,
    kl_cache_merge,
    kl_cache_save,
    kl_canonical,
    kl_mu,
    kl_polynomial,
    kl_structure_positivity,
    mult,
    mult_gen,
    oracle,
    parse_element_expr,
    replay_word,
    specialize_one,
    verify_relations,
)

__all__ = [
    "RHO",
    "AffinePerm",
    "HeckdError",
    "HeckeElt",
    "KLTable",
    "Laurent",
    "ReducedWord",
    "bar",
    "canonical_expand",
    "enumerate_compositions",
    "enumerate_up_to_length",
    "kl_cache_load",
    "kl_cache_merge",
    "kl_cache_save",
    "kl_canonical",
    "kl_mu",
    "kl_polynomial",
    "kl_structure_positivity",
    "mult",
    "mult_gen",
    "oracle",
    "parse_element_expr",
    "replay_word",
    "specialize_one",
    "verify_relations",
]
