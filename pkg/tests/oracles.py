"""Slow, independent reference computations used to derive expected values.

None of these touch the package under test.  They use plain partial sums,
repeated averaging, Abel means with Richardson extrapolation, and composite
midpoint rules after a smoothing substitution, all in numpy.
"""

import math

import numpy as np


def richardson(values, ratio=2.0, order=1):
    """Extrapolate f(h0), f(h0/ratio), ... to h -> 0 for an error series in h**order, h**(order+1), ..."""
    table = [list(map(float, values))]
    p = order
    while len(table[-1]) > 1:
        prev = table[-1]
        fac = ratio ** p
        table.append([(fac * prev[i + 1] - prev[i]) / (fac - 1.0) for i in range(len(prev) - 1)])
        p += 1
    return table[-1][0]


def power_sum_with_tail(s, n_terms=10**6, odd=False):
    """sum_{n>=1} n**-s (or sum over odd n) for real s > 1 by direct summation.

    The tail is the midpoint-rule integral, whose own error is O(N**(-s-2)).
    """
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    if odd:
        terms = (2.0 * n - 1.0) ** -s
        edge = 2.0 * n_terms + 1.0 - 1.0  # next odd denominator minus 1
        tail = edge ** (1.0 - s) / (2.0 * (s - 1.0))
    else:
        terms = n ** -s
        tail = (n_terms + 0.5) ** (1.0 - s) / (s - 1.0)
    return math.fsum(terms[::-1]) + tail


def alternating_partial_sums(terms):
    signs = np.where(np.arange(terms.size) % 2 == 0, 1.0, -1.0)
    return np.cumsum(signs * terms)


def alternating_with_tail(terms):
    """Plain partial sum of sum (-1)**k a_k with the half-next-term tail estimate.

    Returns (estimate, bound) where bound = a_N (alternating-series bound).
    """
    head = terms[:-1]
    signs = np.where(np.arange(head.size) % 2 == 0, 1.0, -1.0)
    partial = math.fsum((signs * head)[::-1])
    return partial + 0.5 * (-1.0) ** (terms.size - 1) * terms[-1], terms[-1]


def repeated_averaging(terms, rounds=None):
    """Euler-type acceleration: average adjacent partial sums ``rounds`` times."""
    sums = alternating_partial_sums(np.asarray(terms, dtype=np.float64))
    rounds = sums.size - 1 if rounds is None else rounds
    for _ in range(rounds):
        sums = 0.5 * (sums[1:] + sums[:-1])
    return float(sums[-1])


def abel_mean(coefficient, deltas=(0.02, 0.01, 0.005, 0.0025, 0.00125)):
    """lim_{x->1-} sum_{n>=0} c_n x**n by Richardson extrapolation in 1 - x."""
    values = []
    for delta in deltas:
        x = 1.0 - delta
        n_max = int(60.0 / delta)
        n = np.arange(n_max, dtype=np.float64)
        c = coefficient(n)
        values.append(math.fsum(c * np.exp(n * math.log(x))))
    return richardson(values, ratio=deltas[0] / deltas[1])


def midpoint_double_log(g, lo=-40.0, hi=4.0, points=10**6):
    """int_0^1 g(y) dy via y = exp(-exp(t)) and a composite midpoint rule in t.

    ``g`` receives (y, log(1/y)) so it never forms 1 - y; the transformed
    integrand decays like exp(t) as t -> -inf and doubly exponentially as
    t -> +inf, so the cutoffs [lo, hi] bound the truncation.
    """
    h = (hi - lo) / points
    t = lo + h * (np.arange(points) + 0.5)
    log_inv = np.exp(t)
    y = np.exp(-log_inv)
    return float(np.sum(g(y, log_inv) * y * log_inv) * h)


def midpoint_log(g, lo=-60.0, hi=6.0, points=10**6):
    """int_0^inf g(u) du via u = exp(t) and a composite midpoint rule in t."""
    h = (hi - lo) / points
    t = lo + h * (np.arange(points) + 0.5)
    u = np.exp(t)
    return complex(np.sum(g(u) * u) * h)
