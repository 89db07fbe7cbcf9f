"""Exact integer and polynomial division by whole shifted inverses."""

from .bigdigits import KARATSUBA, SCHOOLBOOK, MultBackend, Natural
from .generic_core import IterationStats, RefineVariant, generic_refine, quo_left, quo_right
from .int_shinv import divmod, divmod_delta, shinv
from .poly import DensePoly, PrimeField, parse_poly, pdivmod, pshinv

__all__ = [
    "DensePoly", "IterationStats", "KARATSUBA", "MultBackend", "Natural",
    "PrimeField", "RefineVariant", "SCHOOLBOOK", "divmod", "divmod_delta",
    "generic_refine", "parse_poly", "pdivmod", "pshinv", "quo_left",
    "quo_right", "shinv",
]

__version__ = "0.1.0"
