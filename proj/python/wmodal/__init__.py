"""Decision procedures for constructive and classical non-normal modal logics."""

from ._core import (
    BudgetExceeded,
    Formula,
    Model,
    NotATheorem,
    ParseError,
    Proof,
    countermodel,
    decide,
    interpolate,
    logics,
    model_from_json_lines,
    parse,
    proof_from_json_lines,
    prove,
    random_model,
    selftest,
)

__all__ = [
    "BudgetExceeded",
    "Formula",
    "Model",
    "NotATheorem",
    "ParseError",
    "Proof",
    "countermodel",
    "decide",
    "interpolate",
    "logics",
    "model_from_json_lines",
    "parse",
    "proof_from_json_lines",
    "prove",
    "random_model",
    "selftest",
]
