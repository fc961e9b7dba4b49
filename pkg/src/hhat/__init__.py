"""Exact arithmetic in the axial algebra Ĥ of Monster type (2, 1/2) over GF(5)."""

from .core import (
    ZERO,
    Axis,
    Element,
    ParseError,
    Scalar,
    Sigma,
    a,
    canon_symbol,
    parse_element,
    print_element,
    s,
)
from .product import mul, mul_basis
from .symmetry import F, IDENTITY, TAU0, THETA, DihedralMap, apply, compose, miyamoto, parse_map, sigma
from .eigen import decompose, check_fusion, check_primitivity, named
from .quotient import Window, WindowSpan, ideal_closure, preset_6a2, preset_highwater, quotient_product, row_reduce
from .verify import check_all

__all__ = [
    "ZERO", "Axis", "Element", "ParseError", "Scalar", "Sigma", "a", "canon_symbol",
    "parse_element", "print_element", "s", "mul", "mul_basis", "F", "IDENTITY", "TAU0",
    "THETA", "DihedralMap", "apply", "compose", "miyamoto", "parse_map", "sigma",
    "decompose", "check_fusion", "check_primitivity", "named", "Window", "WindowSpan",
    "ideal_closure", "preset_6a2", "preset_highwater", "quotient_product", "row_reduce",
    "check_all",
]
