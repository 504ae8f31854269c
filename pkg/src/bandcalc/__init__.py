"""Exact banding calculus for closed 3-braids, two-bridge links and lens space surgeries."""

from .banding import BandingResult, band_connected_sum, band_formula, band_oracle, band_slope
from .braid3 import BraidWord, parse_braid, phi, rho, words_equal
from .exactmath import ContFrac, ExtRational, Psl2Mat, Slope, bezout_complement, cf_eval, cf_expand, cf_matrix
from .family import KnotSpec, catalog_entry, enumerate_catalog, knot_target_lens
from .spaces import LensSpace, TwoBridgeLink

__version__ = "0.1.0"

__all__ = [
    "BandingResult",
    "BraidWord",
    "ContFrac",
    "ExtRational",
    "KnotSpec",
    "LensSpace",
    "Psl2Mat",
    "Slope",
    "TwoBridgeLink",
    "band_connected_sum",
    "band_formula",
    "band_oracle",
    "band_slope",
    "bezout_complement",
    "catalog_entry",
    "cf_eval",
    "cf_expand",
    "cf_matrix",
    "enumerate_catalog",
    "knot_target_lens",
    "parse_braid",
    "phi",
    "rho",
    "words_equal",
]
