"""Exact-arithmetic toolkit for Kostka polynomials and friends.

Fermionic (rigged-configuration) formulas for Kostka-Foulkes and parabolic
Kostka polynomials, rectangular q-Catalan/q-Narayana tables, stretched
Kostka generating functions with log-concavity counterexamples, and
principal specializations of Kronecker products of Schur functions --
everything cross-checked against independent brute-force oracles.
"""

__version__ = "0.1.0"

from .errors import RCKostkaError
from .qalgebra import QPolynomial, gauss_binomial
from .rigged_configurations import enumerate_admissible, kostka_sum
from .kostka_polynomials import kostka_foulkes, parabolic_kostka

__all__ = [
    "RCKostkaError",
    "QPolynomial",
    "gauss_binomial",
    "enumerate_admissible",
    "kostka_sum",
    "kostka_foulkes",
    "parabolic_kostka",
    "__version__",
]
