"""Restricted permutations, quantum matrix algebras and H-prime catalogs."""

from .perms import Permutation, PairW, bruhat_leq, in_S, sigma_zero
from .counting import hspec_count, poly_bernoulli_neg, rank_count, stirling2, vesztergombi_count
from .poset import enumerate_S, hasse
from .catalog import build_catalog, xi_descriptor

__all__ = [
    "Permutation", "PairW", "bruhat_leq", "in_S", "sigma_zero",
    "hspec_count", "poly_bernoulli_neg", "rank_count", "stirling2", "vesztergombi_count",
    "enumerate_S", "hasse", "build_catalog", "xi_descriptor",
]

__version__ = "0.1.0"
