"""Complex Gamma, log-Gamma and exact half-period trigonometric factors.

``log_gamma`` uses a 14-term Lanczos sum (g = 671/128) on ``Re z >= 0.5``
and the reflection relation elsewhere.  The reflection branch adds the
``2*pi*i*k`` correction that keeps the result on the principal branch, i.e.
the continuation of the real log-Gamma from the positive axis with the cut
along the negative real axis (points on the cut take the value from below,
matching mpmath and scipy).
"""

import cmath
import math
import sys

from .errors import PoleError, PoleInfo, PoleKind

__all__ = [
    "log_gamma",
    "gamma",
    "cos_half_pi",
    "sin_half_pi",
    "sin_pi",
]

_LANCZOS_G = 671.0 / 128.0
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005
_LOG_PI = math.log(math.pi)
_TWO_PI = 2.0 * math.pi
_MAX_LOG = math.log(sys.float_info.max)


def _check_pole(z):
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(
            f"Gamma has a pole at {z.real:g}",
            PoleInfo(complex(z.real, 0.0), PoleKind.GAMMA_POLE),
        )


def _lanczos(z):
    # Valid (and accurate to ~1e-14 absolute) for Re z >= 0.5.
    t = z + _LANCZOS_G
    head = (z + 0.5) * cmath.log(t) - t
    ser = _LANCZOS_C0
    y = z
    for c in _LANCZOS_COF:
        y += 1.0
        ser += c / y
    return head + cmath.log(_SQRT_2PI * ser / z)


def _quadrant_cos_sin(x):
    """Return (cos(pi*x/2), sin(pi*x/2)) for real x with exact integer reduction."""
    n = round(x)
    r = x - n  # exact: |r| <= 1/2
    if r == 0.0:
        c, s = 1.0, 0.0
    else:
        c = math.cos(0.5 * math.pi * r)
        s = math.sin(0.5 * math.pi * r)
    q = int(n) % 4
    if q == 0:
        return c, s
    if q == 1:
        return -s, c
    if q == 2:
        return -c, -s
    return s, -c


def cos_half_pi(s):
    """cos(pi*s/2), exactly zero at odd real integers."""
    s = complex(s)
    c, sn = _quadrant_cos_sin(s.real)
    if s.imag == 0.0:
        return complex(c, 0.0)
    y = 0.5 * math.pi * s.imag
    return complex(c * math.cosh(y), -sn * math.sinh(y))


def sin_half_pi(s):
    """sin(pi*s/2), exactly zero at even real integers."""
    s = complex(s)
    c, sn = _quadrant_cos_sin(s.real)
    if s.imag == 0.0:
        return complex(sn, 0.0)
    y = 0.5 * math.pi * s.imag
    return complex(sn * math.cosh(y), c * math.sinh(y))


def sin_pi(z):
    """sin(pi*z) with exact zeros at real integers."""
    z = complex(z)
    return sin_half_pi(2.0 * z)


def _log_sin_pi(z):
    """Principal log(sin(pi*z)) without overflow for large |Im z|."""
    if abs(z.imag) <= 20.0:
        return cmath.log(sin_pi(z))
    if z.imag < 0.0:
        return _log_sin_pi(z.conjugate()).conjugate()
    # sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| < e^{-125}
    xr = z.real - 2.0 * round(0.5 * z.real)
    w = cmath.exp(2j * math.pi * complex(xr, z.imag))
    rest = cmath.log(1.0 - w)
    modulus = math.pi * z.imag - math.log(2.0) + rest.real
    phase = math.remainder(0.5 * math.pi - math.pi * xr + rest.imag, _TWO_PI)
    return complex(modulus, phase)


def log_gamma(z):
    """Principal branch of log Gamma(z).

    Raises PoleError at non-positive integers.
    """
    z = complex(z)
    _check_pole(z)
    if z.real >= 0.5:
        return _lanczos(z)
    if z.imag == 0.0:
        # On the cut: log|Gamma| - i*pi*ceil(-x), the limit from below.
        x = z.real
        mod = _LOG_PI - math.log(abs(sin_pi(x).real)) - _lanczos(complex(1.0 - x)).real
        return complex(mod, -math.pi * math.ceil(-x) if x < 0.0 else 0.0)
    k = math.floor(0.5 * z.real + 0.25)
    sign = -1.0 if z.imag < 0.0 else 1.0
    return complex(_LOG_PI, sign * _TWO_PI * k) - _log_sin_pi(z) - _lanczos(1.0 - z)


def gamma(z):
    """Gamma(z) as exp(log_gamma(z)); real input gives an exactly real result."""
    z = complex(z)
    lg = log_gamma(z)
    if lg.real > _MAX_LOG:
        raise OverflowError(f"Gamma({z}) overflows (log modulus {lg.real:.6g})")
    if z.imag == 0.0:
        mag = math.exp(lg.real)
        if z.real < 0.0 and math.floor(z.real) % 2 != 0:
            mag = -mag
        return complex(mag, 0.0)
    return cmath.exp(lg)
