from .jacobi import (
    JacobiSpec,
    RelationResiduals,
    derivative_identity,
    generalized_binomial,
    jacobi_derivative,
    jacobi_endpoint_value,
    jacobi_eval,
    jacobi_eval_sum,
    jacobi_zero_order,
    negative_param_relation_check,
    reduce_negative_alpha,
    reduce_negative_beta,
    weighted_derivative_alpha,
    weighted_derivative_beta,
    weighted_derivative_both,
)

__all__ = [
    "JacobiSpec",
    "RelationResiduals",
    "derivative_identity",
    "generalized_binomial",
    "jacobi_derivative",
    "jacobi_endpoint_value",
    "jacobi_eval",
    "jacobi_eval_sum",
    "jacobi_zero_order",
    "negative_param_relation_check",
    "reduce_negative_alpha",
    "reduce_negative_beta",
    "weighted_derivative_alpha",
    "weighted_derivative_beta",
    "weighted_derivative_both",
]
