"""Invariant suites behind the ``verify`` subcommand.

Each suite re-derives the module's invariants from scratch at desk scale and
reports one pass/fail line per invariant.  Everything is deterministic:
sample grids are fixed, no randomness, no timestamps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import cotderiv, limits
from .polygamma import (
    METHOD_ASYMPTOTIC,
    METHOD_REFLECTION,
    bernoulli,
    polygamma,
    polygamma_series_oracle,
    reflection_residual,
)

SUITE_NAMES = ("coeffs", "reflection", "limits", "all")

DEFAULT_ORACLE_TERMS = 1_000_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _grid(lo: float, hi: float, count: int) -> list[float]:
    """count points strictly inside (lo, hi), evenly spaced, half-offset."""
    width = hi - lo
    return [lo + width * (idx + 0.5) / count for idx in range(count)]


def _result(name: str, failures: list[str], ok_detail: str) -> CheckResult:
    if not failures:
        return CheckResult(name, True, ok_detail)
    detail = failures[0]
    if len(failures) > 1:
        detail += f" (+{len(failures) - 1} more)"
    return CheckResult(name, False, detail)


# ---------------------------------------------------------------------------
# coeffs suite


def _check_coefficient_sum() -> CheckResult:
    failures = []
    for p in range(1, 51):
        expected = -math.factorial(p) if p % 2 else math.factorial(p)
        got = cotderiv.expansion(p).coefficient_sum()
        if got != expected:
            failures.append(f"order {p}: sum {got} != {expected}")
    return _result("coefficient-sum-identity", failures, "orders 1..50 exact")


def _check_oracle_equivalence() -> CheckResult:
    failures = []
    xs = _grid(0.1, math.pi - 0.1, 50)
    for p in range(1, 26):
        poly = cotderiv.oracle_expansion(p)
        for x in xs:
            closed = cotderiv.eval_cot_deriv(p, x)
            via_poly = poly.evaluate(math.cos(x) / math.sin(x))
            if abs(closed - via_poly) > 1e-8 * (1.0 + abs(via_poly)):
                failures.append(f"order {p}, x={x}: {closed} vs {via_poly}")
    return _result("oracle-equivalence", failures, "orders 1..25 at 50 points")


def _check_unified_agreement() -> CheckResult:
    failures = []
    pairs = 0
    for p in range(1, 31):
        for q in range(2 if p % 2 else 1, p, 2):
            pairs += 1
            if cotderiv.coeff_unified(p, q) != cotderiv.coeff(p, q):
                failures.append(f"({p},{q}): unified != piecewise")
    return _result("unified-piecewise-agreement", failures, f"{pairs} pairs exact")


def _check_finite_difference() -> CheckResult:
    failures = []
    step = 1e-5
    for p in range(1, 9):
        for x in _grid(0.2, math.pi - 0.2, 8):
            diff = (
                cotderiv.eval_cot_deriv(p - 1, x + step)
                - cotderiv.eval_cot_deriv(p - 1, x - step)
            ) / (2.0 * step)
            exact = cotderiv.eval_cot_deriv(p, x)
            if abs(diff - exact) > 1e-4 * abs(exact):
                failures.append(f"order {p}, x={x}: fd {diff} vs {exact}")
    return _result("finite-difference-consistency", failures, "orders 1..8")


def _check_parity() -> CheckResult:
    failures = []
    for p in range(1, 31):
        exp = cotderiv.expansion(p)
        want = 0 if p % 2 else 1
        if any(j % 2 != want for j, _ in exp.harmonics):
            failures.append(f"order {p}: multiplier parity broken")
        if len(exp.harmonics) != (p + 1) // 2:
            failures.append(f"order {p}: harmonic count {len(exp.harmonics)}")
    return _result("parity", failures, "orders 1..30")


def _check_exact_extraction() -> CheckResult:
    failures = []
    for p in range(1, 13):
        recovered = cotderiv.harmonics_from_polynomial(p, cotderiv.oracle_expansion(p))
        if recovered != cotderiv.expansion(p).harmonics:
            failures.append(f"order {p}: extraction mismatch")
    return _result("exact-harmonic-extraction", failures, "orders 1..12 exact")


def coeffs_suite() -> list[CheckResult]:
    return [
        _check_coefficient_sum(),
        _check_oracle_equivalence(),
        _check_unified_agreement(),
        _check_finite_difference(),
        _check_parity(),
        _check_exact_extraction(),
    ]


# ---------------------------------------------------------------------------
# reflection suite


def _check_bernoulli() -> CheckResult:
    failures = []
    if bernoulli(0) != 1:
        failures.append("B0 != 1")
    if bernoulli(1) != Fraction(-1, 2):
        failures.append("B1 != -1/2")
    for m in range(3, 60, 2):
        if bernoulli(m) != 0:
            failures.append(f"B{m} != 0")
    for m in range(1, 60):
        acc = sum(
            comb(m + 1, j) * bernoulli(j) for j in range(m + 1)
        )
        if acc != 0:
            failures.append(f"recurrence defect at m={m}")
    return _result("bernoulli-recurrence", failures, "B0..B59 exact")


def _check_recurrence_identity() -> CheckResult:
    failures = []
    for n in range(0, 9):
        fact = math.factorial(n)
        for x in _grid(0.5, 20.0, 100):
            step = (
                polygamma(n, x + 1.0).value
                - polygamma(n, x).value
            )
            # psi^(n)(x+1) - psi^(n)(x) = (-1)^n n! / x^(n+1)
            expected = fact / x ** (n + 1)
            if n % 2:
                expected = -expected
            if abs(step - expected) > 1e-11 * abs(expected):
                failures.append(f"n={n}, x={x}: {step} vs {expected}")
    return _result("recurrence-identity", failures, "orders 0..8 at 100 points")


def _check_series_oracle(oracle_terms: int) -> CheckResult:
    failures = []
    for n in range(1, 9):
        for x in (0.5, 1.0, 1.5, 2.0, 5.0, 10.0):
            fast = polygamma(n, x).value
            slow = polygamma_series_oracle(n, x, oracle_terms)
            if abs(fast - slow) > 1e-9 * abs(slow):
                failures.append(f"n={n}, x={x}: {fast} vs {slow}")
    return _result(
        "series-oracle-agreement", failures, f"orders 1..8, {oracle_terms} terms"
    )


def _check_reflection_identity() -> CheckResult:
    failures = []
    for n in range(0, 9):
        for z in _grid(0.05, 0.95, 50):
            residual = reflection_residual(n, z)
            scale = max(
                abs(polygamma(n, 1.0 - z).value),
                abs(polygamma(n, z).value),
                math.pi ** (n + 1) * abs(cotderiv.eval_cot_deriv_pi(n, z)),
            )
            if residual > 1e-8 * (1.0 + scale):
                failures.append(f"n={n}, z={z}: residual {residual}")
    return _result("reflection-identity", failures, "orders 0..8 at 50 points")


def _check_sign_pattern() -> CheckResult:
    failures = []
    for n in range(1, 9):
        want = 1 if n % 2 else -1
        for x in _grid(0.05, 20.0, 40):
            value = polygamma(n, x).value
            if math.copysign(1.0, value) != want:
                failures.append(f"n={n}, x={x}: sign of {value}")
    return _result("sign-pattern", failures, "orders 1..8 on x > 0")


def _check_path_bookkeeping() -> CheckResult:
    failures = []
    for n in (0, 1, 4):
        for x in _grid(-6.3, 25.0, 120):
            if abs(x - round(x)) < 1e-6:
                continue
            res = polygamma(n, x)
            reflected = res.method == METHOD_REFLECTION
            if reflected != (x < 0.5):
                failures.append(f"n={n}, x={x}: method {res.method}")
            if res.method == METHOD_ASYMPTOTIC and res.shift_count != 0:
                failures.append(f"n={n}, x={x}: shifts {res.shift_count}")
            if res.shift_count < 0:
                failures.append(f"n={n}, x={x}: negative shifts")
    return _result("path-bookkeeping", failures, "methods match regions")


def reflection_suite(oracle_terms: int = DEFAULT_ORACLE_TERMS) -> list[CheckResult]:
    return [
        _check_bernoulli(),
        _check_recurrence_identity(),
        _check_series_oracle(oracle_terms),
        _check_reflection_identity(),
        _check_sign_pattern(),
        _check_path_bookkeeping(),
    ]


# ---------------------------------------------------------------------------
# limits suite


def _check_exact_reciprocity() -> CheckResult:
    failures = []
    for n in range(1, 7):
        for q in range(1, 7):
            for k in range(0, 7):
                prod = limits.gamma_ratio_limit(n, q, k) * limits.gamma_ratio_limit(
                    q, n, k
                )
                if prod != 1:
                    failures.append(f"gamma ({n},{q},{k}): product {prod}")
    return _result("exact-reciprocity", failures, "n,q,k <= 6")


def _check_polygamma_symmetry() -> CheckResult:
    failures = []
    for i in range(0, 6):
        for n in range(1, 7):
            for q in range(1, 7):
                prod = limits.polygamma_ratio_limit(
                    i, n, q
                ) * limits.polygamma_ratio_limit(i, q, n)
                if prod != 1:
                    failures.append(f"polygamma ({i},{n},{q}): product {prod}")
    return _result("polygamma-symmetry", failures, "i <= 5, n,q <= 6")


def _check_laurent_residues() -> CheckResult:
    failures = []
    for k in range(0, 21):
        value = limits.gamma_laurent_leading(k) * math.factorial(k)
        if value != (-1) ** k:
            failures.append(f"k={k}: residue*k! = {value}")
    return _result("laurent-residue-unit", failures, "poles 0..20")


def _theorem_probe_reports() -> list[limits.ProbeReport]:
    reports = []
    for i in range(0, 6):
        for n, q in ((2, 1), (3, 2), (1, 4)):
            for k in range(0, 4):
                spec = limits.LimitSpec(
                    family=limits.FAMILY_POLYGAMMA,
                    numerator_scale=n,
                    denominator_scale=q,
                    pole_index=k,
                    derivative_order=i,
                )
                reports.append(limits.probe_limit(spec))
    return reports


def _gamma_probe_reports() -> list[limits.ProbeReport]:
    reports = []
    for n, q in ((2, 1), (3, 1), (3, 2)):
        for k in range(0, 5):
            spec = limits.LimitSpec(
                family=limits.FAMILY_GAMMA,
                numerator_scale=n,
                denominator_scale=q,
                pole_index=k,
            )
            reports.append(limits.probe_limit(spec))
    return reports


def _check_probe_grid(name: str, reports: list[limits.ProbeReport]) -> CheckResult:
    failures = [
        f"{r.spec.to_json_dict()}: error {r.abs_error}"
        for r in reports
        if not r.converged
    ]
    return _result(name, failures, f"{len(reports)} probes converged")


def _check_pole_independence() -> CheckResult:
    values = []
    for k in range(0, 4):
        spec = limits.LimitSpec(
            family=limits.FAMILY_POLYGAMMA,
            numerator_scale=3,
            denominator_scale=2,
            pole_index=k,
            derivative_order=2,
        )
        values.append(limits.probe_limit(spec).extrapolated)
    spread = max(values) - min(values)
    failures = [] if spread <= 1e-5 else [f"extrapolations spread {spread}"]
    return _result("pole-independence", failures, "k=0..3 agree")


def _check_monotone_improvement(reports: list[limits.ProbeReport]) -> CheckResult:
    failures = []
    for r in reports:
        if not r.converged:
            continue
        raw = abs(r.samples[-1] - float(r.target))
        # Some ratios are flat to first order in eps, leaving the raw sample
        # already at the rounding floor; extrapolation cannot beat noise, so
        # grant it the double-precision amplification allowance.
        noise = 1e-11 * (1.0 + abs(float(r.target)))
        if r.abs_error > raw + noise:
            failures.append(f"{r.spec.to_json_dict()}: {r.abs_error} > raw {raw}")
    return _result("monotone-improvement", failures, "extrapolation beats last sample")


def limits_suite() -> list[CheckResult]:
    theorem_reports = _theorem_probe_reports()
    gamma_reports = _gamma_probe_reports()
    return [
        _check_exact_reciprocity(),
        _check_polygamma_symmetry(),
        _check_laurent_residues(),
        _check_probe_grid("theorem-probe-grid", theorem_reports),
        _check_probe_grid("gamma-probe-grid", gamma_reports),
        _check_pole_independence(),
        _check_monotone_improvement(theorem_reports + gamma_reports),
    ]


def run_suite(name: str, oracle_terms: int = DEFAULT_ORACLE_TERMS) -> list[CheckResult]:
    if name == "coeffs":
        return coeffs_suite()
    if name == "reflection":
        return reflection_suite(oracle_terms)
    if name == "limits":
        return limits_suite()
    if name == "all":
        return coeffs_suite() + reflection_suite(oracle_terms) + limits_suite()
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
