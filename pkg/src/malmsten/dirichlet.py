"""Dirichlet eta, lambda, beta and zeta on the whole complex plane.

On ``Re s >= 0.5`` eta and beta are summed directly, by default with the
Cohen-Rodriguez Villegas-Zagier acceleration for alternating series.  To the
left of that line they are continued with their functional equations,

    eta(1 - s) = (2**s - 1) / (1 - 2**(s - 1)) * pi**-s * cos(pi*s/2) * Gamma(s) * eta(s)
    beta(1 - s) = (2/pi)**s * sin(pi*s/2) * Gamma(s) * beta(s)

evaluated only at ``Re s > 0.5`` so Gamma never meets a pole.  lambda uses
its odd-denominator series (with an Euler-Maclaurin tail) for ``Re s > 1``
and the lambda/eta relation elsewhere; zeta is always ``eta / (1 - 2**(1-s))``.
"""

import cmath
import enum
import math
import sys
from dataclasses import dataclass

from .errors import (
    ConvergenceError,
    DomainError,
    NearPoleError,
    PoleError,
    PoleInfo,
    PoleKind,
)
from .gamma_kernel import log_gamma, sin_half_pi
from .result import EvalResult, Method

__all__ = [
    "Acceleration",
    "SeriesSettings",
    "FunctionId",
    "eta",
    "lambda_",
    "lambda_from_eta",
    "beta",
    "zeta",
    "eta_fe_prefactor",
    "beta_fe_prefactor",
    "evaluate",
    "SAFE_DIVISOR",
]

_EPS = sys.float_info.epsilon
_LN2 = math.log(2.0)
_LN_PI = math.log(math.pi)
_LN_2_OVER_PI = math.log(2.0 / math.pi)
_CRVZ_RATE = 3.0 + math.sqrt(8.0)
# (3 + sqrt 8)**n overflows a double just past n = 400.
_CRVZ_MAX_TERMS = 400
_SWITCHOVER = 0.5

#: Divisors smaller than this in modulus raise NearPoleError.
SAFE_DIVISOR = 1e-8

# B_2, B_4, ..., B_30
_BERNOULLI = (
    1 / 6,
    -1 / 30,
    1 / 42,
    -1 / 30,
    5 / 66,
    -691 / 2730,
    7 / 6,
    -3617 / 510,
    43867 / 798,
    -174611 / 330,
    854513 / 138,
    -236364091 / 2730,
    8553103 / 6,
    -23749461029 / 870,
    8615841276005 / 14322,
)


class Acceleration(str, enum.Enum):
    NONE = "none"
    ALTERNATING = "alternating_acceleration"


class FunctionId(str, enum.Enum):
    ETA = "eta"
    LAMBDA = "lambda"
    BETA = "beta"
    ZETA = "zeta"


@dataclass(frozen=True)
class SeriesSettings:
    target_eps: float = 1e-13
    max_terms: int = 10_000
    acceleration: Acceleration = Acceleration.ALTERNATING

    def __post_init__(self):
        if not self.target_eps > 0:
            raise DomainError(f"target_eps must be positive, got {self.target_eps}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        object.__setattr__(self, "acceleration", Acceleration(self.acceleration))


_DEFAULT = SeriesSettings()


def _cexpm1(w):
    """exp(w) - 1 without cancellation for small |w|."""
    a, b = w.real, w.imag
    if b == 0.0:
        return complex(math.expm1(a), 0.0)
    half = math.sin(0.5 * b)
    return complex(math.expm1(a) * math.cos(b) - 2.0 * half * half, math.exp(a) * math.sin(b))


def _pow_neg(base, s):
    """base**(-s) for a positive real base."""
    if s.imag == 0.0:
        return complex(base ** -s.real, 0.0)
    return cmath.exp(-s * math.log(base))


def _crvz(term, n):
    """Sum_{k<n} (-1)**k term(k) with Chebyshev weights; returns (sum, |weighted| sum)."""
    d = _CRVZ_RATE ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    products = []
    for k in range(n):
        c = b - c
        products.append(c * term(k))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    # compensated sums: the weighted terms alternate and nearly cancel
    total = complex(math.fsum(p.real for p in products), math.fsum(p.imag for p in products))
    magnitude = math.fsum(abs(p) for p in products)
    return total / d, magnitude / d


def _crvz_terms_needed(s, eps):
    # For moment sequences a_k = int_0^1 x^k dmu the error is at most
    # |mu|([0,1]) / d_n, and here |mu| = Gamma(Re s) / |Gamma(s)|.
    log_mass = log_gamma(complex(s.real, 0.0)).real - log_gamma(s).real
    n = math.ceil((log_mass + math.log(2.0) - math.log(eps)) / math.log(_CRVZ_RATE))
    return max(n, 1), math.exp(log_mass)


def _alternating(term, s, cfg, label):
    """Sum_{k>=0} (-1)**k term(k) for Re s >= 1/2 under the settings ``cfg``."""
    if cfg.acceleration is Acceleration.ALTERNATING:
        n, mass = _crvz_terms_needed(s, cfg.target_eps)
        limit = min(cfg.max_terms, _CRVZ_MAX_TERMS)
        if n > limit:
            raise ConvergenceError(
                f"{label}({s}) needs {n} accelerated terms, budget is {limit}"
            )
        # a few extra terms push the truncation below rounding when affordable
        n = min(max(n, _crvz_terms_needed(s, 0.25 * _EPS)[0]), limit)
        value, magnitude = _crvz(term, n)
        d = _CRVZ_RATE ** n
        bound = 2.0 * mass / (d + 1.0 / d)
        err = bound + 4.0 * _EPS * magnitude
        return EvalResult(value, err, Method.ACCELERATED_SERIES, n)
    total = 0j
    sign = 1.0
    for k in range(cfg.max_terms):
        total += sign * term(k)
        sign = -sign
        nxt = abs(term(k + 1))
        if nxt <= cfg.target_eps:
            return EvalResult(total, nxt, Method.DIRECT_SERIES, k + 1)
    raise ConvergenceError(
        f"{label}({s}) direct series not within {cfg.target_eps:g} after {cfg.max_terms} terms",
        partial=EvalResult(total, nxt, Method.DIRECT_SERIES, cfg.max_terms),
    )


def _eta_series(s, cfg):
    return _alternating(lambda k: _pow_neg(k + 1.0, s), s, cfg, "eta")


def _beta_series(s, cfg):
    return _alternating(lambda k: _pow_neg(2.0 * k + 1.0, s), s, cfg, "beta")


def _eta_cos_ratio(s):
    """cos(pi*s/2) / (1 - 2**(s-1)) with the removable point s = 1 filled in."""
    h = s - 1.0
    if abs(h) < 1e-6:
        # sin(pi h/2) / expm1(h ln 2) expanded to O(h**3)
        t = h * _LN2
        return (0.5 * math.pi / _LN2) * (1.0 - (math.pi * h) ** 2 / 24.0) / (1.0 + t / 2.0 + t * t / 6.0)
    num = sin_half_pi(h)
    if num == 0:
        return 0j
    den = _cexpm1(h * _LN2)
    if abs(den) < SAFE_DIVISOR:
        raise NearPoleError(
            f"1 - 2**(s-1) is {abs(den):.3g} at s = {s}; prefactor is numerically singular"
        )
    return num / den


def _log_eta_magnitude(s):
    """log of (2**s - 1) * pi**-s * Gamma(s), for Re s >= 1/2."""
    return cmath.log(_cexpm1(s * _LN2)) - s * _LN_PI + log_gamma(s)


def eta_fe_prefactor(s):
    """(2**s - 1)/(1 - 2**(s-1)) * pi**-s * cos(pi*s/2) * Gamma(s) for Re s >= 1/2.

    Equals 1 at s = 1/2 and is exactly 0 at odd integers s >= 3.
    """
    s = complex(s)
    if s.real < _SWITCHOVER:
        raise DomainError("eta_fe_prefactor is evaluated only for Re s >= 1/2")
    ratio = _eta_cos_ratio(s)
    if ratio == 0:
        return 0j
    return cmath.exp(_log_eta_magnitude(s)) * ratio


def beta_fe_prefactor(s):
    """(2/pi)**s * sin(pi*s/2) * Gamma(s) for Re s >= 1/2; exactly 0 at even s."""
    s = complex(s)
    if s.real < _SWITCHOVER:
        raise DomainError("beta_fe_prefactor is evaluated only for Re s >= 1/2")
    trig = sin_half_pi(s)
    if trig == 0:
        return 0j
    return cmath.exp(s * _LN_2_OVER_PI + log_gamma(s)) * trig


def _continued(prefactor, series, s, cfg):
    reflected = 1.0 - s
    factor = prefactor(reflected)
    if factor == 0:
        return EvalResult(0j, 0.0, Method.FUNCTIONAL_EQUATION, 0)
    inner = series(reflected, cfg)
    value = factor * inner.value
    err = abs(factor) * inner.err_estimate + 16.0 * _EPS * (1.0 + abs(s)) * abs(value)
    return EvalResult(value, err, Method.FUNCTIONAL_EQUATION, inner.work)


def eta(s, cfg=None):
    """Dirichlet eta: sum_{n>=1} (-1)**(n+1) n**-s, continued to all of C."""
    s = complex(s)
    cfg = cfg or _DEFAULT
    if s.real >= _SWITCHOVER:
        return _eta_series(s, cfg)
    return _continued(eta_fe_prefactor, _eta_series, s, cfg)


def beta(s, cfg=None):
    """Dirichlet beta: sum_{n>=0} (-1)**n (2n+1)**-s, continued to all of C."""
    s = complex(s)
    cfg = cfg or _DEFAULT
    if s.real >= _SWITCHOVER:
        return _beta_series(s, cfg)
    return _continued(beta_fe_prefactor, _beta_series, s, cfg)


def _pole_at_one(s, name):
    if s == 1:
        raise PoleError(f"{name} has a pole at s = 1", PoleInfo(1 + 0j, PoleKind.ZETA_POLE))


def lambda_from_eta(s, cfg=None):
    """(2**s - 1)/(2**s - 2) * eta(s)."""
    s = complex(s)
    _pole_at_one(s, "lambda")
    num = _cexpm1(s * _LN2)
    den = 2.0 * _cexpm1((s - 1.0) * _LN2)
    if abs(den) < SAFE_DIVISOR:
        raise NearPoleError(f"2**s - 2 is {abs(den):.3g} at s = {s}")
    if num == 0:
        return EvalResult(0j, 0.0, Method.CLOSED_RELATION, 0)
    inner = eta(s, cfg)
    factor = num / den
    value = factor * inner.value
    err = abs(factor) * inner.err_estimate + 4.0 * _EPS * abs(value)
    return EvalResult(value, err, Method.CLOSED_RELATION, inner.work)


def _lambda_euler_maclaurin(s, cfg):
    """sum_{n>=0} (2n+1)**-s for Re s > 1: N terms plus an Euler-Maclaurin tail."""
    n_head = max(16, math.ceil(abs(s)))
    if n_head > cfg.max_terms:
        raise ConvergenceError(f"lambda({s}) needs {n_head} terms, budget is {cfg.max_terms}")
    head = math.fsum(_pow_neg(2.0 * n + 1.0, s).real for n in range(n_head))
    head_im = math.fsum(_pow_neg(2.0 * n + 1.0, s).imag for n in range(n_head))
    x = 2.0 * n_head + 1.0
    f_n = _pow_neg(x, s)
    tail = x * f_n / (2.0 * (s - 1.0)) + 0.5 * f_n
    # derivative of order m at N: (-2)**m * s(s+1)...(s+m-1) * x**(-s-m)
    deriv = -2.0 * s * f_n / x
    last = math.inf
    for j, b2j in enumerate(_BERNOULLI, start=1):
        m = 2 * j - 1
        if j > 1:
            deriv *= 4.0 * (s + m - 2.0) * (s + m - 1.0) / (x * x)
        corr = b2j / math.factorial(2 * j) * deriv
        size = abs(corr)
        if size > last:
            raise ConvergenceError(f"Euler-Maclaurin tail for lambda({s}) diverged")
        tail -= corr
        last = size
        if size <= 0.1 * cfg.target_eps * max(1.0, abs(head)):
            break
    else:
        raise ConvergenceError(f"Euler-Maclaurin tail for lambda({s}) did not settle")
    value = complex(head, head_im) + tail
    err = 2.0 * last * max(1.0, abs(s + m) / (s.real + m)) + 4.0 * _EPS * abs(value)
    return EvalResult(value, err, Method.DIRECT_SERIES, n_head + len(_BERNOULLI[:j]))


def lambda_(s, cfg=None):
    """Dirichlet lambda: sum_{n>=0} (2n+1)**-s, continued to C minus {1}."""
    s = complex(s)
    cfg = cfg or _DEFAULT
    _pole_at_one(s, "lambda")
    if s.real > 1.0:
        return _lambda_euler_maclaurin(s, cfg)
    return lambda_from_eta(s, cfg)


def zeta(s, cfg=None):
    """Riemann zeta as eta(s) / (1 - 2**(1-s))."""
    s = complex(s)
    _pole_at_one(s, "zeta")
    den = -_cexpm1((1.0 - s) * _LN2)
    if abs(den) < SAFE_DIVISOR:
        raise NearPoleError(
            f"1 - 2**(1-s) is {abs(den):.3g} at s = {s}; zeta is not evaluated this close "
            "to the zeros of 1 - 2**(1-s)",
            PoleInfo(s, PoleKind.ZETA_POLE),
        )
    inner = eta(s, cfg)
    value = inner.value / den
    err = inner.err_estimate / abs(den) + 4.0 * _EPS * abs(value)
    return EvalResult(value, err, Method.CLOSED_RELATION, inner.work)


_FUNCTIONS = {
    FunctionId.ETA: eta,
    FunctionId.LAMBDA: lambda_,
    FunctionId.BETA: beta,
    FunctionId.ZETA: zeta,
}


def evaluate(function, s, cfg=None):
    """Dispatch on a FunctionId (or its string name)."""
    return _FUNCTIONS[FunctionId(function)](s, cfg)
