"""Exact pole-ratio limits and numerical probes that verify them.

The gamma ratio Gamma(n*z)/Gamma(q*z) and the polygamma ratios
psi^(i)(n*z)/psi^(i)(q*z) approach exact rational values as z approaches a
non-positive integer -k.  This module computes those rationals in exact
arithmetic and, independently, samples each ratio on a geometric grid
z = -k + eps0 * 2**-j and extrapolates the samples to eps = 0 with Neville's
algorithm.  The extrapolation is justified because numerator and denominator
carry poles of equal order, making the ratio analytic in eps at 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError, ProbeFailureError, as_index
from .polygamma import polygamma

FAMILY_GAMMA = "gamma-ratio"
FAMILY_POLYGAMMA = "polygamma-ratio"

# Samples closer to the pole than this are dominated by double-precision
# cancellation; the probe refuses to go below it.
MIN_EPSILON = 1e-5

MAX_LEVELS = 12
MAX_EPS0 = 0.1

DEFAULT_EPS0 = 0.05
DEFAULT_LEVELS = 8
DEFAULT_TOLERANCE = 1e-5

SAMPLE_CSV_HEADER = "family,i,n,q,k,eps,sample"
SUMMARY_CSV_HEADER = "family,i,n,q,k,extrapolated,target_num,target_den,abs_error,converged"


def format_rational(value: Fraction) -> str:
    """Render a rational as 'p/q', or just 'p' for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def gamma_ratio_limit(
    numerator_scale: int, denominator_scale: int, pole_index: int
) -> Fraction:
    """Exact limit of Gamma(n*z)/Gamma(q*z) as z -> -pole_index.

    Equals (-1)**((n-q)*k) * (q/n) * (q*k)! / (n*k)! with the sign folded
    into the numerator.
    """
    n = as_index(numerator_scale, "numerator_scale")
    q = as_index(denominator_scale, "denominator_scale")
    k = as_index(pole_index, "pole_index")
    if n < 1 or q < 1:
        raise DomainError(f"scales must be >= 1, got n={n}, q={q}")
    if k < 0:
        raise DomainError(f"pole index must be >= 0, got {k}")
    sign = -1 if ((n - q) * k) % 2 else 1
    return Fraction(sign * q * math.factorial(q * k), n * math.factorial(n * k))


def polygamma_ratio_limit(
    derivative_order: int, numerator_scale: int, denominator_scale: int
) -> Fraction:
    """Exact limit of psi^(i)(n*z)/psi^(i)(q*z) at every pole: (q/n)**(i+1).

    The value is independent of which pole the limit is taken at; the probe
    machinery verifies that independence numerically.
    """
    i = as_index(derivative_order, "derivative_order")
    n = as_index(numerator_scale, "numerator_scale")
    q = as_index(denominator_scale, "denominator_scale")
    if i < 0:
        raise DomainError(f"derivative order must be >= 0, got {i}")
    if n < 1 or q < 1:
        raise DomainError(f"scales must be >= 1, got n={n}, q={q}")
    return Fraction(q, n) ** (i + 1)


def gamma_laurent_leading(pole_index: int) -> Fraction:
    """Residue of Gamma at -pole_index: (-1)**k / k!."""
    k = as_index(pole_index, "pole_index")
    if k < 0:
        raise DomainError(f"pole index must be >= 0, got {k}")
    return Fraction((-1) ** k, math.factorial(k))


@dataclass(frozen=True)
class LimitSpec:
    """Which pole-ratio limit to take: family, scales, pole, derivative order.

    ``derivative_order`` is ignored by the gamma family.  ``pole_index`` does
    not change the polygamma family's exact value but selects where the probe
    samples.
    """

    family: str
    numerator_scale: int
    denominator_scale: int
    pole_index: int = 0
    derivative_order: int = 0

    def __post_init__(self):
        if self.family not in (FAMILY_GAMMA, FAMILY_POLYGAMMA):
            raise DomainError(f"unknown limit family: {self.family!r}")
        if self.numerator_scale < 1 or self.denominator_scale < 1:
            raise DomainError("scales must be >= 1")
        if self.pole_index < 0:
            raise DomainError("pole index must be >= 0")
        if self.derivative_order < 0:
            raise DomainError("derivative order must be >= 0")

    def target(self) -> Fraction:
        if self.family == FAMILY_GAMMA:
            return gamma_ratio_limit(
                self.numerator_scale, self.denominator_scale, self.pole_index
            )
        return polygamma_ratio_limit(
            self.derivative_order, self.numerator_scale, self.denominator_scale
        )

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "i": self.derivative_order,
            "n": self.numerator_scale,
            "q": self.denominator_scale,
            "k": self.pole_index,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "LimitSpec":
        return cls(
            family=str(obj["family"]),
            numerator_scale=int(obj["n"]),
            denominator_scale=int(obj["q"]),
            pole_index=int(obj["k"]),
            derivative_order=int(obj["i"]),
        )

    def _csv_prefix(self) -> str:
        return (
            f"{self.family},{self.derivative_order},{self.numerator_scale},"
            f"{self.denominator_scale},{self.pole_index}"
        )


@dataclass(frozen=True)
class ProbeReport:
    """Samples of a pole ratio on an epsilon grid plus the extrapolation."""

    spec: LimitSpec
    epsilons: tuple[float, ...]
    samples: tuple[float, ...]
    extrapolated: float
    target: Fraction
    abs_error: float
    converged: bool

    def to_csv_lines(self, header: bool = True) -> list[str]:
        lines = []
        if header:
            lines.append(SAMPLE_CSV_HEADER)
        prefix = self.spec._csv_prefix()
        for eps, sample in zip(self.epsilons, self.samples):
            lines.append(f"{prefix},{eps!r},{sample!r}")
        if header:
            lines.append(SUMMARY_CSV_HEADER)
        lines.append(
            f"{prefix},{self.extrapolated!r},{self.target.numerator},"
            f"{self.target.denominator},{self.abs_error!r},"
            f"{'true' if self.converged else 'false'}"
        )
        return lines

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "epsilons": list(self.epsilons),
            "samples": list(self.samples),
            "extrapolated": self.extrapolated,
            "target": {
                "numerator": str(self.target.numerator),
                "denominator": str(self.target.denominator),
            },
            "abs_error": self.abs_error,
            "converged": self.converged,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ProbeReport":
        return cls(
            spec=LimitSpec.from_json_dict(obj["spec"]),
            epsilons=tuple(float(e) for e in obj["epsilons"]),
            samples=tuple(float(s) for s in obj["samples"]),
            extrapolated=float(obj["extrapolated"]),
            target=Fraction(
                int(obj["target"]["numerator"]), int(obj["target"]["denominator"])
            ),
            abs_error=float(obj["abs_error"]),
            converged=bool(obj["converged"]),
        )


def neville_extrapolate(xs: tuple[float, ...], ys: tuple[float, ...]) -> float:
    """Value at 0 of the polynomial through (xs[j], ys[j])."""
    if len(xs) != len(ys) or not xs:
        raise DomainError("need equally many abscissae and values, at least one")
    tab = list(ys)
    for m in range(1, len(xs)):
        for j in range(len(xs) - 1, m - 1, -1):
            tab[j] = (xs[j - m] * tab[j] - xs[j] * tab[j - 1]) / (xs[j - m] - xs[j])
    return tab[-1]


def _log_abs_gamma_at(scale: int, pole_index: int, eps: float) -> tuple[float, int]:
    """log|Gamma(scale * (-pole_index + eps))| and the sign of Gamma there.

    The argument is composed as an exact integer part -scale*pole_index plus
    the offset scale*eps, so the distance to the pole never suffers
    cancellation.  Negative arguments go through the reflection
    |Gamma(t)| = pi / (|sin(pi t)| * Gamma(1 - t)); the sign of Gamma on
    (-M, -M+1) is (-1)**M.
    """
    whole_pole = scale * pole_index
    delta = scale * eps
    carried = math.floor(delta)
    whole_pole -= int(carried)
    delta -= carried
    if whole_pole <= 0:
        arg = delta - whole_pole
        if arg <= 0.0:
            raise PoleError(f"gamma argument {arg} on a pole", location=0)
        return math.lgamma(arg), 1
    s = math.sin(math.pi * delta)
    if abs(s) < 1e-12:
        raise PoleError(
            f"gamma argument within pole guard near {-whole_pole}",
            location=-whole_pole,
        )
    logabs = math.log(math.pi) - math.log(s) - math.lgamma(1.0 + whole_pole - delta)
    return logabs, (-1 if whole_pole % 2 else 1)


def _gamma_ratio_sample(spec: LimitSpec, eps: float) -> float:
    ln_num, s_num = _log_abs_gamma_at(spec.numerator_scale, spec.pole_index, eps)
    ln_den, s_den = _log_abs_gamma_at(spec.denominator_scale, spec.pole_index, eps)
    return s_num * s_den * math.exp(ln_num - ln_den)


def _polygamma_ratio_sample(spec: LimitSpec, eps: float) -> float:
    i = spec.derivative_order
    num_arg = spec.numerator_scale * eps - spec.numerator_scale * spec.pole_index
    den_arg = spec.denominator_scale * eps - spec.denominator_scale * spec.pole_index
    return polygamma(i, num_arg).value / polygamma(i, den_arg).value


def probe_limit(
    spec: LimitSpec,
    eps0: float = DEFAULT_EPS0,
    levels: int = DEFAULT_LEVELS,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ProbeReport:
    """Sample the ratio at z = -k + eps0 * 2**-j and extrapolate to the pole."""
    levels = as_index(levels, "levels")
    if not (0.0 < eps0 <= MAX_EPS0):
        raise DomainError(f"eps0 must lie in (0, {MAX_EPS0}], got {eps0}")
    if not (1 <= levels <= MAX_LEVELS):
        raise DomainError(f"levels must lie in 1..{MAX_LEVELS}, got {levels}")
    if eps0 * 2.0 ** (-(levels - 1)) < MIN_EPSILON:
        raise DomainError(
            f"finest epsilon {eps0 * 2.0 ** (-(levels - 1))} below the "
            f"double-precision floor {MIN_EPSILON}"
        )
    if not tolerance > 0.0:
        raise DomainError(f"tolerance must be positive, got {tolerance}")

    sampler = (
        _gamma_ratio_sample if spec.family == FAMILY_GAMMA else _polygamma_ratio_sample
    )
    epsilons = tuple(eps0 * 2.0**-j for j in range(levels))
    samples = []
    for eps in epsilons:
        try:
            samples.append(sampler(spec, eps))
        except PoleError as exc:
            z = -spec.pole_index + eps
            raise ProbeFailureError(
                f"probe sample at z={z} tripped a pole guard: {exc}", z=z
            ) from exc
    extrapolated = neville_extrapolate(epsilons, tuple(samples))
    target = spec.target()
    abs_error = abs(extrapolated - float(target))
    return ProbeReport(
        spec=spec,
        epsilons=epsilons,
        samples=tuple(samples),
        extrapolated=extrapolated,
        target=target,
        abs_error=abs_error,
        converged=abs_error <= tolerance,
    )
