"""Double-exponential quadrature on (0, 1) and (0, inf).

Both rules are the trapezoid rule in a transformed variable ``t`` with step
``2**-level``; each level reuses the previous sum and only evaluates the new
odd-indexed nodes.  Node tables are built lazily and cached per level.

tanh-sinh on (0, 1)::

    x = 1 / (1 + exp(-pi*sinh(t)))        dx/dt = pi*cosh(t) * x * (1 - x)

exp-sinh on (0, inf)::

    u = exp(pi/2 * sinh(t))               du/dt = pi/2 * cosh(t) * u

For (0, 1) the distance to the right endpoint, ``1 - x``, is produced by the
transform itself, so integrands that need ``log(1/x)`` close to ``x = 1`` can
ask for it (``complement=True``) instead of forming ``1 - x`` by subtraction.
"""

import cmath
import enum
import functools
import math
import sys
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, NonFiniteError
from .result import EvalResult, Method

__all__ = [
    "Transform",
    "QuadratureSettings",
    "integrate",
    "integrate_01",
    "integrate_0inf",
    "refine",
]

# Largest |pi*sinh(t)| (resp. |pi/2*sinh(t)|) kept: abscissae and their
# complements stay >= ~1e-300, clear of the subnormal range.
_EXP_LIMIT = 690.0
_MIN_LEVEL = 3
_ROUNDING = 4.0 * sys.float_info.epsilon


class Transform(str, enum.Enum):
    TANH_SINH_01 = "tanh_sinh_01"
    EXP_SINH_0INF = "exp_sinh_0inf"


@dataclass(frozen=True)
class QuadratureSettings:
    target_eps: float = 1e-12
    max_level: int = 10
    transform: Transform = Transform.TANH_SINH_01

    def __post_init__(self):
        if not self.target_eps > 0:
            raise DomainError(f"target_eps must be positive, got {self.target_eps}")
        if not 1 <= self.max_level <= 12:
            raise DomainError(f"max_level must lie in [1, 12], got {self.max_level}")
        object.__setattr__(self, "transform", Transform(self.transform))


def _tanh_sinh_node(t):
    """(x, 1 - x, weight) at parameter t."""
    e = math.pi * math.sinh(abs(t))
    q = math.exp(-e)
    small = q / (1.0 + q)
    large = 1.0 / (1.0 + q)
    w = math.pi * math.cosh(t) * small * large
    if t >= 0.0:
        return large, small, w
    return small, large, w


def _exp_sinh_node(t):
    """(u, None, weight) at parameter t."""
    u = math.exp(0.5 * math.pi * math.sinh(t))
    return u, None, 0.5 * math.pi * math.cosh(t) * u


_T_MAX = {
    Transform.TANH_SINH_01: math.asinh(_EXP_LIMIT / math.pi),
    Transform.EXP_SINH_0INF: math.asinh(2.0 * _EXP_LIMIT / math.pi),
}
_NODE = {
    Transform.TANH_SINH_01: _tanh_sinh_node,
    Transform.EXP_SINH_0INF: _exp_sinh_node,
}


@functools.cache
def _node_table(transform, level):
    """Nodes new at ``level``: every integer multiple of h at level 0, odd ones after."""
    h = 2.0 ** -level
    kmax = int(_T_MAX[transform] / h)
    if level == 0:
        ks = range(-kmax, kmax + 1)
    else:
        start = -kmax if kmax % 2 else -kmax + 1
        ks = range(start, kmax + 1, 2)
    node = _NODE[transform]
    return tuple(node(k * h) for k in ks)


def _level_sum(f, table, complement):
    total = 0j
    magnitude = 0.0
    for x, xbar, w in table:
        if complement:
            v = f(x, xbar)
        elif xbar is not None and x == 1.0:
            # abscissa rounded onto the endpoint; only the complement form can use it
            continue
        else:
            v = f(x)
        if v == 0:
            continue
        v = complex(v)
        if not cmath.isfinite(v):
            raise NonFiniteError(f"integrand returned {v} at x = {x!r}")
        total += w * v
        magnitude += w * abs(v)
    return total, magnitude


def refine(f, transform, max_level=12, complement=False):
    """Yield ``(level, estimate, rounding, nodes_used)`` per step halving.

    ``rounding`` is a floor for the floating-point error of ``estimate``,
    proportional to the integral of ``|f|``.
    """
    transform = Transform(transform)
    running = 0j
    magnitude = 0.0
    nodes = 0
    for level in range(max_level + 1):
        table = _node_table(transform, level)
        part, mag = _level_sum(f, table, complement)
        running += part
        magnitude += mag
        nodes += len(table)
        h = 2.0 ** -level
        yield level, running * h, _ROUNDING * magnitude * h, nodes


def integrate(f, cfg=None, *, complement=False):
    """Integrate ``f`` with the rule named by ``cfg.transform``.

    Stops at the first level >= 3 whose change from the previous level is
    at most ``cfg.target_eps``.  ``err_estimate`` is that change, floored at
    the rounding level of the sum.
    """
    cfg = cfg or QuadratureSettings()
    if complement and cfg.transform is not Transform.TANH_SINH_01:
        raise DomainError("complement abscissae exist only for the (0, 1) rule")
    method = Method.TANH_SINH if cfg.transform is Transform.TANH_SINH_01 else Method.EXP_SINH
    prev = None
    diff = math.inf
    for level, estimate, rounding, nodes in refine(
        f, cfg.transform, cfg.max_level, complement
    ):
        if prev is not None:
            diff = abs(estimate - prev)
            if level >= min(_MIN_LEVEL, cfg.max_level) and diff <= cfg.target_eps:
                return EvalResult(estimate, max(diff, rounding), method, nodes)
        prev = estimate
    raise ConvergenceError(
        f"quadrature did not reach {cfg.target_eps:g} by level {cfg.max_level} "
        f"(last difference {diff:.3g})",
        partial=EvalResult(prev, diff, method, nodes),
    )


def integrate_01(f, cfg=None, *, complement=False):
    """Integrate over (0, 1) with tanh-sinh.

    With ``complement=True`` the integrand is called as ``f(x, 1 - x)`` where
    the second argument is exact even when x rounds to 1.
    """
    cfg = cfg or QuadratureSettings()
    if cfg.transform is not Transform.TANH_SINH_01:
        cfg = QuadratureSettings(cfg.target_eps, cfg.max_level, Transform.TANH_SINH_01)
    return integrate(f, cfg, complement=complement)


def integrate_0inf(f, cfg=None):
    """Integrate over (0, inf) with exp-sinh."""
    cfg = cfg or QuadratureSettings()
    if cfg.transform is not Transform.EXP_SINH_0INF:
        cfg = QuadratureSettings(cfg.target_eps, cfg.max_level, Transform.EXP_SINH_0INF)
    return integrate(f, cfg)
