"""Dirichlet series, their functional equations, and Malmstén's integrals."""

__version__ = "0.1.0"

from .dirichlet import SeriesSettings, beta, eta, lambda_, lambda_from_eta, zeta
from .errors import (
    ConvergenceError,
    DomainError,
    MalmstenError,
    NearPoleError,
    NonFiniteError,
    PoleError,
)
from .gamma_kernel import cos_half_pi, gamma, log_gamma, sin_half_pi
from .identities import IdentityCheck, IdentityId, ParamGrid, run_grid
from .quadrature import QuadratureSettings, integrate_0inf, integrate_01
from .result import EvalResult, Method

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EvalResult",
    "IdentityCheck",
    "IdentityId",
    "MalmstenError",
    "Method",
    "NearPoleError",
    "NonFiniteError",
    "ParamGrid",
    "PoleError",
    "QuadratureSettings",
    "SeriesSettings",
    "beta",
    "cos_half_pi",
    "eta",
    "gamma",
    "integrate_01",
    "integrate_0inf",
    "lambda_",
    "lambda_from_eta",
    "log_gamma",
    "run_grid",
    "sin_half_pi",
    "zeta",
]
