"""Congruence spaces of pointed monoids and monoid schemes."""
from .monoid import (F1, FiniteMonoid, FreeMonomialMonoid, MonoidError, MonoidHom, ZERO,
                     from_products, truncated_polynomial)
from .congruence import FiniteCongruence, SymbolicPrimeCongruence, generate
from .spectra import FiniteSpace, cong_space, mspec

__version__ = "0.1.0"
