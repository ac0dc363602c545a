"""The value-with-provenance record returned by every evaluator."""

import enum
from dataclasses import dataclass


class Method(str, enum.Enum):
    DIRECT_SERIES = "direct_series"
    ACCELERATED_SERIES = "accelerated_series"
    FUNCTIONAL_EQUATION = "functional_equation"
    CLOSED_RELATION = "closed_relation"
    TANH_SINH = "tanh_sinh"
    EXP_SINH = "exp_sinh"


@dataclass(frozen=True)
class EvalResult:
    """A computed value plus how it was obtained.

    ``err_estimate`` is an estimate of the absolute error, not a bound.
    ``work`` counts series terms or quadrature nodes actually consumed.
    """

    value: complex
    err_estimate: float
    method: Method
    work: int

    def __complex__(self):
        return complex(self.value)
