"""Acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line; the lines are repeated in the
"acceptance criteria" section at the end of the pytest run.
"""

import cmath
import io
import json
import math
import random

import expected
import numpy as np
from oracles import alternating_with_tail

from malmsten import beta, eta, gamma, lambda_, lambda_from_eta
from malmsten.cli import main
from malmsten.dirichlet import eta_fe_prefactor
from malmsten.gamma_kernel import cos_half_pi
from malmsten.identities import (
    IdentityId,
    ParamGrid,
    beta_fe_check,
    eta_fe_check,
    kummer_check,
    run_grid,
    vardi_check,
)
from malmsten.report import VerificationReport

GRID = ParamGrid()


def worst(rows):
    return max(r.abs_err for r in rows)


def test_criterion_01_vardi(criterion):
    row = vardi_check()
    ok = row.abs_err <= 1e-10 and abs(row.lhs - expected.VARDI) <= 1e-10
    criterion(1, "Vardi integral", ok, f"value {row.lhs.real:.15f}, |LHS-RHS| = {row.abs_err:.2e} <= 1e-10")


def test_criterion_02_eta_functional_equation(criterion):
    rows = [eta_fe_check(s) for s in GRID.fe_s_values]
    residual = worst(rows)
    minus_one = eta(-1).value
    minus_two = eta(-2).value
    ok = (
        len(rows) == 16
        and residual <= 1e-10
        and abs(minus_one - expected.ETA_MINUS_1) <= 1e-11
        and minus_two == 0
    )
    criterion(
        2,
        "eta functional equation",
        ok,
        f"{len(rows)} points, max residual {residual:.2e} <= 1e-10; "
        f"eta(-1) - 1/4 = {abs(minus_one - 0.25):.1e}; eta(-2) = {minus_two.real!r}",
    )


def test_criterion_03_beta_functional_equation(criterion):
    rows = [beta_fe_check(s) for s in GRID.fe_s_values]
    residual = worst(rows)
    b0 = abs(beta(0).value - expected.BETA_0)
    b2 = abs(beta(2).value - expected.CATALAN)
    ok = residual <= 1e-10 and b0 <= 1e-11 and b2 <= 1e-11
    criterion(
        3,
        "beta functional equation",
        ok,
        f"{len(rows)} points, max residual {residual:.2e} <= 1e-10; "
        f"|beta(0) - 1/2| = {b0:.1e}; |beta(2) - G| = {b2:.1e}",
    )


def test_criterion_04_formula30(criterion):
    rows = run_grid(GRID, [IdentityId.FORMULA30]).rows
    residual = worst(rows)
    ok = len(rows) == 25 and residual <= 1e-8
    criterion(4, "formula30 identity", ok, f"{len(rows)} (a, s) pairs, max |LHS-RHS| {residual:.2e} <= 1e-8")


def test_criterion_05_limit_identity(criterion):
    rows = run_grid(GRID, [IdentityId.LIMIT_IDENTITY]).rows
    residual = worst(rows)
    s_values = sorted(r.param("s").real for r in rows)
    ok = s_values == [0.1, 0.25, 0.5, 0.75, 0.9] and residual <= 1e-8
    criterion(5, "limit identity", ok, f"s in {s_values}, max |LHS-RHS| {residual:.2e} <= 1e-8")


def test_criterion_06_gamma_integrals(criterion):
    report = run_grid(GRID, [IdentityId.GAMMA_INTEGRAL_POWER, IdentityId.GAMMA_INTEGRAL_LOG])
    residual = worst(report.rows)
    ok = len(report.rows) == 30 and residual <= 1e-10
    criterion(
        6,
        "Gamma integrals",
        ok,
        f"{len(report.rows)} (n, s) points, max |quadrature - Gamma| {residual:.2e} <= 1e-10",
    )


def test_criterion_07_lambda_eta(criterion):
    rng = random.Random(2026)
    residual = 0.0
    for _ in range(50):
        s = complex(rng.uniform(1.2, 6.0), rng.uniform(-10.0, 10.0))
        residual = max(residual, abs(lambda_(s).value - lambda_from_eta(s).value))
    criterion(7, "lambda-eta relation", residual <= 1e-12, f"50 random s, max residual {residual:.2e} <= 1e-12")


def test_criterion_08_kummer(criterion):
    rows = [kummer_check(a) for a in GRID.a_values]
    residual = worst(rows)
    half_pi = kummer_check(math.pi / 2).lhs
    coincidence = abs(half_pi - vardi_check().lhs)
    ok = residual <= 1e-9 and coincidence <= 1e-10
    criterion(
        8,
        "Kummer integral",
        ok,
        f"{len(rows)} values of a, max |LHS-RHS| {residual:.2e} <= 1e-9; "
        f"a = pi/2 vs Vardi {coincidence:.1e} <= 1e-10",
    )


def test_criterion_09_fixed_point(criterion):
    s = 0.5
    two = 2.0**s
    literal = (two - 1.0) / (1.0 - two / 2.0) * math.pi**-s * cos_half_pi(s) * gamma(s)
    deviation = max(abs(literal - 1.0), abs(eta_fe_prefactor(s) - 1.0))
    criterion(9, "prefactor fixed point", deviation <= 1e-13, f"|prefactor(1/2) - 1| = {deviation:.1e} <= 1e-13")


def test_criterion_10_oracle_equivalence(criterion):
    rng = np.random.default_rng(2026)
    n = np.arange(1, 10**6 + 2, dtype=np.float64)
    eps = np.finfo(float).eps
    worst_ratio = 0.0
    ok = True
    for s in rng.uniform(1.5, 8.0, size=20):
        oracle, bound = alternating_with_tail(n**-s)
        # the tail bound falls below one ulp for large s; a few ulps of
        # rounding in the oracle sum are allowed on top of it
        allowed = bound + 8.0 * eps * abs(oracle)
        gap = abs(eta(s).value - oracle)
        ok &= gap <= allowed
        worst_ratio = max(worst_ratio, gap / allowed)
    criterion(
        10,
        "oracle equivalence",
        ok,
        f"20 random s > 1.5, worst |accelerated - 1e6-term sum| / allowance = {worst_ratio:.2f} <= 1",
    )


def _same_bits(a, b):
    if isinstance(a, complex):
        return _same_bits(a.real, b.real) and _same_bits(a.imag, b.imag)
    if isinstance(a, float):
        return (math.isnan(a) and math.isnan(b)) or a.hex() == b.hex()
    return a == b


def test_criterion_11_cli(criterion):
    out, err = io.StringIO(), io.StringIO()
    verify_code = main(["verify", "all"], out, err)
    text = out.getvalue()
    parsed = VerificationReport.from_json(text)
    direct = run_grid(ParamGrid())
    fields = ("lhs", "rhs", "abs_err", "rel_err", "tolerance", "passed", "excluded", "error")
    bit_exact = len(parsed.rows) == len(direct.rows) and all(
        _same_bits(getattr(p, f), getattr(d, f))
        for p, d in zip(parsed.rows, direct.rows)
        for f in fields
    ) and all(
        _same_bits(pv, dv)
        for p, d in zip(parsed.rows, direct.rows)
        for (_, pv), (_, dv) in zip(p.params, d.params)
    )
    re_emitted = parsed.to_json() + "\n" == text
    pole_code = main(["eval", "zeta", "1"], io.StringIO(), io.StringIO())
    ok = verify_code == 0 and json.loads(text)["overall_pass"] and bit_exact and re_emitted and pole_code == 2
    criterion(
        11,
        "CLI",
        ok,
        f"verify all exit {verify_code} over {len(parsed.rows)} rows, "
        f"JSON round trip bit-exact {bit_exact and re_emitted}; eval zeta 1 exit {pole_code}",
    )


def test_all_complex_grid_points_covered():
    # the FE grids include the off-axis points 0.5 +- 0.7i and 2 +- 1i
    wanted = {0.5 + 0.7j, 0.5 - 0.7j, 2 + 1j, 2 - 1j}
    assert wanted <= set(GRID.fe_s_values)
    assert all(cmath.isfinite(eta_fe_check(s).lhs) for s in wanted)
