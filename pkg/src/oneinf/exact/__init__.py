"""Exact arithmetic kernel."""
from .rational import (Rational, as_fraction, is_square, rational_nth_root,
                       rational_sqrt, squarefree_part)
from .tower import QQ, TowerElement, TowerField, adjoin_sqrt, real_sign, sqrt_field
from .poly import Poly, RationalFunction, compose, resultant
from .puiseux import PuiseuxSeries

__all__ = [
    "Rational", "as_fraction", "is_square", "rational_nth_root", "rational_sqrt",
    "squarefree_part", "QQ", "TowerElement", "TowerField", "adjoin_sqrt", "real_sign",
    "sqrt_field", "Poly", "RationalFunction", "compose", "resultant", "PuiseuxSeries",
]
