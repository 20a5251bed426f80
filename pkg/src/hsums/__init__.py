"""Nested harmonic sums, S-sums, harmonic polylogarithms, Mellin
transforms, argument calculus, and symbolic summation over exact
rationals, with a numeric verification layer."""

from .kernel import (
    ConstExpr,
    DivergenceError,
    Monomial,
    Poly,
    RatFunc,
    S,
    SumExpr,
    SumFactor,
    UnsupportedConstantError,
    Z,
    contract_notation,
    count_sums,
    evaluate_expr,
    evaluate_sum,
    expand_notation,
    normalize,
)

__all__ = [
    "ConstExpr", "DivergenceError", "Monomial", "Poly", "RatFunc",
    "S", "SumExpr", "SumFactor", "UnsupportedConstantError", "Z",
    "contract_notation", "count_sums", "evaluate_expr", "evaluate_sum",
    "expand_notation", "normalize",
]
