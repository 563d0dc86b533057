from .grid import GridFunction
from .rules import QuadratureRule, gauss_jacobi_rule, integrate_product

__all__ = [
    "GridFunction",
    "QuadratureRule",
    "gauss_jacobi_rule",
    "integrate_product",
]
