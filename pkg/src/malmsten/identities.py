"""Both sides of each Malmstén identity, computed independently and compared.

Integral sides go through :mod:`malmsten.quadrature`; closed forms use
:mod:`malmsten.gamma_kernel`; series sides use :mod:`malmsten.dirichlet`.
Every ``*_check`` returns an :class:`IdentityCheck` row.
"""

import cmath
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import dirichlet
from .errors import DomainError, MalmstenError
from .gamma_kernel import cos_half_pi, gamma, log_gamma, sin_half_pi
from .quadrature import integrate_0inf, integrate_01

__all__ = [
    "IdentityId",
    "IdentityCheck",
    "ParamGrid",
    "DEFAULT_TOLERANCE",
    "formula30_check",
    "limit_identity_check",
    "gamma_integral_power_check",
    "gamma_integral_log_check",
    "eta_fe_check",
    "beta_fe_check",
    "lambda_eta_check",
    "vardi_check",
    "kummer_check",
    "vardi_closed_form",
    "kummer_closed_form",
    "integrand",
    "INTEGRANDS",
    "run_grid",
]

_LN_2PI = math.log(2.0 * math.pi)
_LN2 = math.log(2.0)
_TINY = 1e-300


class IdentityId(str, enum.Enum):
    FORMULA30 = "formula30"
    LIMIT_IDENTITY = "limit_identity"
    GAMMA_INTEGRAL_POWER = "gamma_integral_power"
    GAMMA_INTEGRAL_LOG = "gamma_integral_log"
    ETA_FE = "eta_fe"
    BETA_FE = "beta_fe"
    LAMBDA_ETA = "lambda_eta"
    VARDI = "vardi"
    KUMMER = "kummer"


_ORDER = {ident: i for i, ident in enumerate(IdentityId)}

_SERIES, _SINGLE_QUAD, _DOUBLE_QUAD = 1e-12, 1e-10, 1e-8
DEFAULT_TOLERANCE = {
    IdentityId.FORMULA30: _DOUBLE_QUAD,
    IdentityId.LIMIT_IDENTITY: _DOUBLE_QUAD,
    IdentityId.GAMMA_INTEGRAL_POWER: _SINGLE_QUAD,
    IdentityId.GAMMA_INTEGRAL_LOG: _SINGLE_QUAD,
    IdentityId.ETA_FE: _SERIES,
    IdentityId.BETA_FE: _SERIES,
    IdentityId.LAMBDA_ETA: _SERIES,
    IdentityId.VARDI: _SINGLE_QUAD,
    IdentityId.KUMMER: _SINGLE_QUAD,
}


@dataclass(frozen=True)
class IdentityCheck:
    """One evaluated identity: both sides, residuals, verdict.

    ``params`` is an ordered tuple of ``(name, value)``; values are floats,
    ints, complex numbers or (for method tags) strings.  Rows whose
    evaluation raised carry the message in ``error``; ``excluded`` marks a
    point outside the identity's domain, which does not count as a failure.
    """

    identity_id: IdentityId
    params: tuple
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    passed: bool
    tolerance: float
    error: str = None
    excluded: bool = False

    @classmethod
    def compare(cls, identity_id, params, lhs, rhs, tolerance=None):
        identity_id = IdentityId(identity_id)
        if tolerance is None:
            tolerance = DEFAULT_TOLERANCE[identity_id]
        lhs, rhs = complex(lhs), complex(rhs)
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / max(abs(lhs), abs(rhs), _TINY)
        passed = abs_err <= tolerance or rel_err <= tolerance
        return cls(identity_id, tuple(params), lhs, rhs, abs_err, rel_err, passed, tolerance)

    @classmethod
    def failed(cls, identity_id, params, exc, tolerance=None):
        identity_id = IdentityId(identity_id)
        if tolerance is None:
            tolerance = DEFAULT_TOLERANCE[identity_id]
        nan = float("nan")
        return cls(
            identity_id,
            tuple(params),
            complex(nan, nan),
            complex(nan, nan),
            nan,
            nan,
            False,
            tolerance,
            error=f"{type(exc).__name__}: {exc}",
            excluded=isinstance(exc, DomainError),
        )

    @property
    def ok(self):
        return self.passed or self.excluded

    def param(self, name):
        return dict(self.params)[name]


_STRIP_S = (0.1, 0.25, 0.5, 0.75, 0.9)
_FE_S = tuple(
    complex(x / 2.0) for x in range(-7, 10) if x / 2.0 not in (-3.0, -2.0, -1.0, 0.0, 1.0)
) + (0.5 + 0.7j, 0.5 - 0.7j, 2 + 1j, 2 - 1j)


@dataclass(frozen=True)
class ParamGrid:
    """Parameter values swept by :func:`run_grid`.

    ``s_values`` feed the strip identities (0 < Re s < 1), ``fe_s_values``
    the series identities.
    """

    a_values: tuple = (0.3, math.pi / 3, math.pi / 2, 2.0, 2.8)
    s_values: tuple = tuple(complex(s) for s in _STRIP_S)
    n_values: tuple = (1, 2, 3, 5, 10)
    fe_s_values: tuple = _FE_S

    def __post_init__(self):
        for name in ("a_values", "s_values", "n_values", "fe_s_values"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "s_values", tuple(complex(s) for s in self.s_values))
        object.__setattr__(self, "fe_s_values", tuple(complex(s) for s in self.fe_s_values))
        for a in self.a_values:
            if not 0.0 < a < math.pi:
                raise DomainError(f"a = {a} is outside (0, pi)")
        for n in self.n_values:
            if int(n) != n or n < 1:
                raise DomainError(f"n = {n} is not a positive integer")
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))

    def describe(self):
        return {
            "a_values": list(self.a_values),
            "s_values": list(self.s_values),
            "n_values": list(self.n_values),
            "fe_s_values": list(self.fe_s_values),
        }


# -- integrands --------------------------------------------------------------


def _log_inv(y, ybar):
    """log(1/y), using the exact complement near y = 1."""
    if y > 0.5:
        return -math.log1p(-ybar)
    return -math.log(y)


def _cpow(x, p):
    """x**p for x > 0 and complex p."""
    if p.imag == 0.0:
        return x ** p.real
    return cmath.exp(p * math.log(x))


def _sinh_ratio(a, b, u):
    """sinh(a u) / sinh(b u) for 0 <= a < b, u > 0, stable at both ends."""
    return math.exp(-(b - a) * u) * math.expm1(-2.0 * a * u) / math.expm1(-2.0 * b * u)


def _cos_a_denominator(a, y, ybar):
    """1 + 2 y cos(a) + y**2, written as (1 - y)**2 + 4 y cos(a/2)**2."""
    c = math.cos(0.5 * a)
    return ybar * ybar + 4.0 * y * c * c


def formula30_lhs_integrand(a, s):
    s = complex(s)

    def f(u):
        ratio = _sinh_ratio(a, math.pi, u)
        if ratio == 0.0:
            return 0.0
        return ratio * _cpow(u, -s)

    return f


def formula30_rhs_integrand(a, s):
    p = complex(s) - 1.0

    def f(y, ybar):
        return _cpow(_log_inv(y, ybar), p) / _cos_a_denominator(a, y, ybar)

    return f


def limit_lhs_integrand(s):
    p = 1.0 - complex(s)

    def f(u):
        # u**(1-s) / (e^{pi u} - e^{-pi u})
        decay = math.exp(-math.pi * u)
        if decay == 0.0:
            return 0.0
        return _cpow(u, p) * decay / -math.expm1(-2.0 * math.pi * u)

    return f


def limit_rhs_integrand(s):
    p = complex(s) - 1.0

    def f(y, ybar):
        return _cpow(_log_inv(y, ybar), p) / ((1.0 + y) * (1.0 + y))

    return f


def gamma_power_integrand(s):
    p = 1.0 - complex(s)

    def f(y):
        decay = math.exp(-y)
        if decay == 0.0:
            return 0.0
        return decay * _cpow(y, p)

    return f


def gamma_log_integrand(n, s):
    p = complex(s) - 1.0

    def f(y, ybar):
        return _cpow(_log_inv(y, ybar), p) * y ** (n - 1)

    return f


def loglog_integrand(a=None):
    """ln ln(1/y) / (1 + 2 y cos a + y**2); ``a=None`` gives the 1/(1+y**2) kernel."""

    def f(y, ybar):
        if a is None:
            den = 1.0 + y * y
        else:
            den = _cos_a_denominator(a, y, ybar)
        return math.log(_log_inv(y, ybar)) / den

    return f


# name -> (builder, interval, parameter names)
INTEGRANDS = {
    "formula30-lhs": (formula30_lhs_integrand, "0inf", ("a", "s")),
    "formula30-rhs": (formula30_rhs_integrand, "01", ("a", "s")),
    "limit-lhs": (limit_lhs_integrand, "0inf", ("s",)),
    "limit-rhs": (limit_rhs_integrand, "01", ("s",)),
    "gamma-power": (gamma_power_integrand, "0inf", ("s",)),
    "gamma-log": (gamma_log_integrand, "01", ("n", "s")),
    "vardi": (lambda: loglog_integrand(None), "01", ()),
    "kummer": (loglog_integrand, "01", ("a",)),
}


def integrand(name, qcfg=None, **params):
    """Integrate one of the named integrand families with the given parameters."""
    builder, interval, names = INTEGRANDS[name]
    missing = [n for n in names if n not in params]
    if missing:
        raise DomainError(f"integrand {name!r} needs parameters {', '.join(missing)}")
    _check_integrand_domain(name, params)
    f = builder(*(params[n] for n in names))
    if interval == "01":
        return integrate_01(f, qcfg, complement=True)
    return integrate_0inf(f, qcfg)


def _check_integrand_domain(name, params):
    if "a" in params:
        _check_a(params["a"])
    if "n" in params:
        _check_n(params["n"])
    if "s" in params:
        s = complex(params["s"])
        if name.startswith(("formula30", "limit")):
            _check_strip(s)
        elif name == "gamma-power" and not s.real < 2.0:
            raise DomainError(f"gamma-power needs Re s < 2, got s = {s}")
        elif name == "gamma-log" and not s.real > 0.0:
            raise DomainError(f"gamma-log needs Re s > 0, got s = {s}")


# -- domain guards -------------------------------------------------------------


def _check_a(a):
    if not 0.0 < a < math.pi:
        raise DomainError(f"a = {a} is outside (0, pi)")


def _check_n(n):
    if int(n) != n or n < 1:
        raise DomainError(f"n = {n} is not a positive integer")


def _check_strip(s):
    if not 0.0 < s.real < 1.0:
        raise DomainError(f"s = {s} is outside the strip 0 < Re s < 1")


def _is_gamma_pole(s):
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def _near_two_pow_one(s):
    """True when 2**(s-1) is within the safe-division threshold of 1."""
    h = (s - 1.0) * _LN2
    return abs(cmath.exp(h) - 1.0) < dirichlet.SAFE_DIVISOR


# -- checks --------------------------------------------------------------------


def formula30_check(a, s, qcfg=None, scfg=None):
    s = complex(s)
    _check_a(a)
    _check_strip(s)
    cos_term = cos_half_pi(s)
    if cos_term == 0:
        raise DomainError(f"cos(pi s / 2) vanishes at s = {s}")
    lhs = integrate_0inf(formula30_lhs_integrand(a, s), qcfg)
    inner = integrate_01(formula30_rhs_integrand(a, s), qcfg, complement=True)
    rhs = math.sin(a) / (gamma(s) * cos_term) * inner.value
    return IdentityCheck.compare(IdentityId.FORMULA30, (("a", a), ("s", s)), lhs.value, rhs)


def limit_identity_check(s, qcfg=None, scfg=None):
    s = complex(s)
    _check_strip(s)
    lhs_int = integrate_0inf(limit_lhs_integrand(s), qcfg)
    rhs_int = integrate_01(limit_rhs_integrand(s), qcfg, complement=True)
    lhs = 2.0 * cos_half_pi(s) * lhs_int.value
    rhs = rhs_int.value / gamma(s)
    return IdentityCheck.compare(IdentityId.LIMIT_IDENTITY, (("s", s),), lhs, rhs)


def gamma_integral_power_check(s, qcfg=None):
    s = complex(s)
    if not s.real < 2.0:
        raise DomainError(f"the power integral needs Re s < 2, got s = {s}")
    lhs = integrate_0inf(gamma_power_integrand(s), qcfg)
    return IdentityCheck.compare(
        IdentityId.GAMMA_INTEGRAL_POWER, (("s", s),), lhs.value, gamma(2.0 - s)
    )


def gamma_integral_log_check(n, s, qcfg=None):
    s = complex(s)
    _check_n(n)
    n = int(n)
    if not s.real > 0.0:
        raise DomainError(f"the log integral needs Re s > 0, got s = {s}")
    lhs = integrate_01(gamma_log_integrand(n, s), qcfg, complement=True)
    rhs = gamma(s) * _cpow(float(n), -s)
    return IdentityCheck.compare(IdentityId.GAMMA_INTEGRAL_LOG, (("n", n), ("s", s)), lhs.value, rhs)


def eta_fe_check(s, scfg=None):
    """eta(1-s) against the prefactor times eta(s).

    The prefactor is assembled here from gamma() and cos_half_pi(), not from
    the log-domain product that eta() uses internally for continuation.
    """
    s = complex(s)
    if _is_gamma_pole(s):
        raise DomainError(f"Gamma(s) has a pole at s = {s}")
    if _near_two_pow_one(s):
        raise DomainError(f"1 - 2**(s-1) vanishes at s = {s}")
    left = dirichlet.eta(1.0 - s, scfg)
    trig = cos_half_pi(s)
    if trig == 0:
        right_value = 0j
        right_method = "exact_zero"
    else:
        right = dirichlet.eta(s, scfg)
        two_s = cmath.exp(s * _LN2)
        factor = (two_s - 1.0) / (1.0 - 0.5 * two_s) * cmath.exp(-s * math.log(math.pi))
        right_value = factor * trig * gamma(s) * right.value
        right_method = right.method.value
    params = (("s", s), ("lhs_method", left.method.value), ("rhs_method", right_method))
    return IdentityCheck.compare(IdentityId.ETA_FE, params, left.value, right_value)


def beta_fe_check(s, scfg=None):
    s = complex(s)
    if _is_gamma_pole(s):
        raise DomainError(f"Gamma(s) has a pole at s = {s}")
    left = dirichlet.beta(1.0 - s, scfg)
    trig = sin_half_pi(s)
    if trig == 0:
        right_value = 0j
        right_method = "exact_zero"
    else:
        right = dirichlet.beta(s, scfg)
        factor = cmath.exp(s * math.log(2.0 / math.pi))
        right_value = factor * trig * gamma(s) * right.value
        right_method = right.method.value
    params = (("s", s), ("lhs_method", left.method.value), ("rhs_method", right_method))
    return IdentityCheck.compare(IdentityId.BETA_FE, params, left.value, right_value)


def lambda_eta_check(s, scfg=None):
    """Odd-denominator series against (2**s - 1)/(2**s - 2) * eta(s), for Re s > 1."""
    s = complex(s)
    if not s.real > 1.0:
        raise DomainError(f"the lambda series converges only for Re s > 1, got s = {s}")
    left = dirichlet.lambda_(s, scfg)
    right = dirichlet.lambda_from_eta(s, scfg)
    return IdentityCheck.compare(IdentityId.LAMBDA_ETA, (("s", s),), left.value, right.value)


def vardi_closed_form():
    """(pi/2) * log(sqrt(2 pi) * Gamma(3/4) / Gamma(1/4))."""
    return 0.5 * math.pi * (0.5 * _LN_2PI + log_gamma(0.75).real - log_gamma(0.25).real)


def kummer_closed_form(a):
    """pi/(2 sin a) * log((2 pi)**(a/pi) * Gamma(1/2 + a/(2 pi)) / Gamma(1/2 - a/(2 pi)))."""
    _check_a(a)
    shift = a / (2.0 * math.pi)
    logs = (a / math.pi) * _LN_2PI + log_gamma(0.5 + shift).real - log_gamma(0.5 - shift).real
    return math.pi / (2.0 * math.sin(a)) * logs


def vardi_check(qcfg=None):
    lhs = integrate_01(loglog_integrand(None), qcfg, complement=True)
    return IdentityCheck.compare(IdentityId.VARDI, (), lhs.value, vardi_closed_form())


def kummer_check(a, qcfg=None):
    _check_a(a)
    lhs = integrate_01(loglog_integrand(a), qcfg, complement=True)
    return IdentityCheck.compare(IdentityId.KUMMER, (("a", a),), lhs.value, kummer_closed_form(a))


# -- sweeps --------------------------------------------------------------------


def _sort_key(value):
    if isinstance(value, complex):
        return (value.real, value.imag)
    return (value, 0.0)


def _tasks(grid, ident, qcfg, scfg):
    """(params, thunk) pairs for one identity, in lexicographic parameter order."""
    a_vals = sorted(grid.a_values)
    s_vals = sorted(grid.s_values, key=_sort_key)
    fe_vals = sorted(grid.fe_s_values, key=_sort_key)
    n_vals = sorted(grid.n_values)
    if ident is IdentityId.FORMULA30:
        return [
            ((("a", a), ("s", s)), lambda a=a, s=s: formula30_check(a, s, qcfg, scfg))
            for a in a_vals
            for s in s_vals
        ]
    if ident is IdentityId.LIMIT_IDENTITY:
        return [((("s", s),), lambda s=s: limit_identity_check(s, qcfg, scfg)) for s in s_vals]
    if ident is IdentityId.GAMMA_INTEGRAL_POWER:
        return [((("s", s),), lambda s=s: gamma_integral_power_check(s, qcfg)) for s in s_vals]
    if ident is IdentityId.GAMMA_INTEGRAL_LOG:
        return [
            ((("n", n), ("s", s)), lambda n=n, s=s: gamma_integral_log_check(n, s, qcfg))
            for n in n_vals
            for s in s_vals
        ]
    if ident is IdentityId.ETA_FE:
        return [((("s", s),), lambda s=s: eta_fe_check(s, scfg)) for s in fe_vals]
    if ident is IdentityId.BETA_FE:
        return [((("s", s),), lambda s=s: beta_fe_check(s, scfg)) for s in fe_vals]
    if ident is IdentityId.LAMBDA_ETA:
        return [((("s", s),), lambda s=s: lambda_eta_check(s, scfg)) for s in fe_vals]
    if ident is IdentityId.VARDI:
        return [((), lambda: vardi_check(qcfg))]
    return [((("a", a),), lambda a=a: kummer_check(a, qcfg)) for a in a_vals]


def _run_task(ident, params, thunk):
    try:
        return thunk()
    except (MalmstenError, OverflowError, ZeroDivisionError) as exc:
        return IdentityCheck.failed(ident, params, exc)


def run_grid(grid=None, ids=None, qcfg=None, scfg=None, workers=1):
    """Evaluate every identity in ``ids`` over ``grid``; one row per parameter tuple.

    Rows come back ordered by identity (declaration order) and then by
    parameters, independent of ``workers``.  Failures are recorded in the
    row instead of propagating.
    """
    from .report import VerificationReport

    grid = grid or ParamGrid()
    ids = list(IdentityId) if ids is None else [IdentityId(i) for i in ids]
    ids = sorted(set(ids), key=_ORDER.__getitem__)
    jobs = [(ident, params, thunk) for ident in ids for params, thunk in _tasks(grid, ident, qcfg, scfg)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda job: _run_task(*job), jobs))
    else:
        rows = [_run_task(*job) for job in jobs]
    return VerificationReport.from_rows(rows, grid)
