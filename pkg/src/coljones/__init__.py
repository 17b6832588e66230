"""Exact computation of coloured Jones polynomials of braid closures.

Four independent evaluations are provided: the quantum trace of the braid
action (:func:`jones_rt`), the same through the normalised highest weight
vector (:func:`jones_hw`), and the intersection pairing of homology classes
with specialised (:func:`jones_homological`) or two-variable
(:func:`jones_global`) coefficients.
"""

from .braid import BraidWord, parse
from .homological import jones_global, jones_homological
from .quantum import jones_hw, jones_rt
from .ring import LaurentPoly, RationalFunc

__all__ = [
    "BraidWord",
    "parse",
    "LaurentPoly",
    "RationalFunc",
    "jones_rt",
    "jones_hw",
    "jones_homological",
    "jones_global",
]

__version__ = "0.1.0"
