"""Flattenings, secant dimensions and determinantal equations for Segre-Veronese varieties."""

from .coords import FactorProfile, ambient_dim, coord_index, coord_monomials, enumerate_monomials, parse_profile
from .flatten import Flattening, build_flattening, emit_minors, enumerate_splits, factor_catalecticant, minor_poly
from .numeric import DEFAULT_PRIME, FieldConfig, Parametrization, rank_mod_p
from .poly import SparsePoly
from .secant import terracini_dim

__all__ = [
    "DEFAULT_PRIME",
    "FactorProfile",
    "FieldConfig",
    "Flattening",
    "Parametrization",
    "SparsePoly",
    "ambient_dim",
    "build_flattening",
    "coord_index",
    "coord_monomials",
    "emit_minors",
    "enumerate_monomials",
    "enumerate_splits",
    "factor_catalecticant",
    "minor_poly",
    "parse_profile",
    "rank_mod_p",
    "terracini_dim",
]
