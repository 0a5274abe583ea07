"""Exact closed forms for derivatives of the cotangent function.

The p-th derivative of cot x is a finite cosine sum divided by a power of
sin x::

    cot^(p) x = (sum_j b[p,j] * cos(j*x)) / sin(x)**(p+1)

where j runs over 0, 2, ..., p-1 for odd p and 1, 3, ..., p-1 for even p,
and the b[p,j] are integers.  This module generates those integers exactly,
evaluates the closed form, and carries an independent oracle: the same
derivative written as an integer polynomial in t = cot x, obtained by
repeatedly applying  P(t) -> P'(t) * (-1 - t**2).

Two independent routes from the oracle back to the harmonic coefficients are
provided for cross-checking: numeric evaluation and an exact product-to-sum
rewrite of the polynomial form into the cosine basis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .errors import (
    DomainError,
    HarmonicRangeError,
    InvalidHarmonicError,
    PoleError,
    as_index,
)

# |sin x| below this is treated as sitting on a pole of cot and its
# derivatives; callers that need closer approaches use the probe machinery.
POLE_GUARD = 1e-12

# Above this order the integer coefficients exceed double range; exact
# generation still works, float evaluation does not.
MAX_EVAL_ORDER = 170


@dataclass(frozen=True)
class CotDerivExpansion:
    """Closed form of cot^(order): cosine harmonics over sin**sin_exponent."""

    order: int
    sin_exponent: int
    harmonics: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sin_exponent != self.order + 1:
            raise DomainError("sin exponent must be order + 1")
        expected = tuple(range(0 if self.order % 2 else 1, self.order, 2))
        if tuple(j for j, _ in self.harmonics) != expected:
            raise DomainError(
                "harmonics must cover multipliers of opposite parity to the "
                "order, ascending, below the order"
            )

    def coefficient_sum(self) -> int:
        return sum(b for _, b in self.harmonics)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "sin_exponent": self.sin_exponent,
            "harmonics": [[j, str(b)] for j, b in self.harmonics],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CotDerivExpansion":
        return cls(
            order=int(obj["order"]),
            sin_exponent=int(obj["sin_exponent"]),
            harmonics=tuple((int(j), int(b)) for j, b in obj["harmonics"]),
        )


@dataclass(frozen=True)
class CotPolynomial:
    """cot^(order) written as an integer polynomial in t = cot x.

    ``coefficients[i]`` multiplies t**i; the polynomial for the p-th
    derivative has degree p + 1.
    """

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, t: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc


def coeff(order: int, multiplier: int) -> int:
    """Exact integer coefficient of cos(multiplier * x) in cot^(order).

    Raises InvalidHarmonicError when order + multiplier is even (no such
    harmonic exists) and HarmonicRangeError when multiplier >= order.
    """
    p = as_index(order, "order")
    q = as_index(multiplier, "multiplier")
    if p < 1:
        raise DomainError(f"derivative order must be >= 1, got {p}")
    if q < 0:
        raise DomainError(f"multiplier must be >= 0, got {q}")
    if (p + q) % 2 == 0:
        raise InvalidHarmonicError(
            f"no cos({q}x) harmonic in the order-{p} derivative: "
            "order and multiplier must have opposite parity"
        )
    if q >= p:
        raise HarmonicRangeError(
            f"multiplier {q} out of range for order {p} (need multiplier < order)"
        )
    if p == 1:
        return -1
    if p % 2:
        n = (p + 1) // 2
        if q == 0:
            return 2 * n * sum(
                (-1) ** (ell + 1) * comb(2 * n - 1, ell) * (n - ell - 1) ** (2 * n - 2)
                for ell in range(n - 1)
            )
        i = q // 2
        return 2 * sum(
            (-1) ** (ell + 1) * comb(2 * n, ell) * (n - i - ell) ** (2 * n - 1)
            for ell in range(n - i)
        )
    n = p // 2
    i = (q - 1) // 2
    return 2 * sum(
        (-1) ** ell * comb(2 * n + 1, ell) * (n - i - ell) ** (2 * n)
        for ell in range(n - i)
    )


def coeff_unified(order: int, multiplier: int) -> int:
    """Single-formula variant of coeff, valid for 0 < multiplier < order.

    The multiplier = 0 coefficients are deliberately excluded: the unified
    formula does not reproduce them (it gives -8 instead of -4 at order 3),
    so that column stays with the piecewise formulas.
    """
    p = as_index(order, "order")
    q = as_index(multiplier, "multiplier")
    if p < 1:
        raise DomainError(f"derivative order must be >= 1, got {p}")
    if q == 0:
        raise DomainError(
            "unified formula is defined only for 0 < multiplier < order"
        )
    if q < 0:
        raise DomainError(f"multiplier must be >= 0, got {q}")
    if (p + q) % 2 == 0:
        raise InvalidHarmonicError(
            f"no cos({q}x) harmonic in the order-{p} derivative: "
            "order and multiplier must have opposite parity"
        )
    if q >= p:
        raise HarmonicRangeError(
            f"multiplier {q} out of range for order {p} (need multiplier < order)"
        )
    m = (p - q - 1) // 2
    sign = -1 if p % 2 else 1
    return sign * 2 * sum(
        (-1) ** ell * comb(p + 1, ell) * (m - ell + 1) ** p for ell in range(m + 1)
    )


@lru_cache(maxsize=None)
def expansion(order: int) -> CotDerivExpansion:
    """Full closed form of cot^(order) with all harmonics populated."""
    order = as_index(order, "order")
    if order < 1:
        raise DomainError(f"derivative order must be >= 1, got {order}")
    start = 0 if order % 2 else 1
    harmonics = tuple((j, coeff(order, j)) for j in range(start, order, 2))
    return CotDerivExpansion(order=order, sin_exponent=order + 1, harmonics=harmonics)


def eval_cot_deriv(order: int, x: float) -> float:
    """Evaluate cot^(order) at x (radians) in double precision."""
    order = as_index(order, "order")
    if order < 0:
        raise DomainError(f"derivative order must be >= 0, got {order}")
    if order > MAX_EVAL_ORDER:
        raise DomainError(
            f"order {order} exceeds double precision range (max {MAX_EVAL_ORDER})"
        )
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x}")
    s = math.sin(x)
    if abs(s) < POLE_GUARD:
        raise PoleError(
            f"x={x} is within the pole guard of a multiple of pi",
            location=math.pi * round(x / math.pi),
        )
    if order == 0:
        return math.cos(x) / s
    num = sum(b * math.cos(j * x) for j, b in expansion(order).harmonics)
    return num / s ** (order + 1)


def eval_cot_deriv_pi(order: int, z: float) -> float:
    """Evaluate cot^(order) at pi*z, reducing by the nearest integer first.

    Writing z = m + d with integer m and |d| <= 1/2 keeps sin(pi*z) fully
    accurate arbitrarily close to the poles (the subtraction z - m is exact),
    which direct evaluation at the rounded product pi*z cannot do.  Used by
    the polygamma reflection path and the pole probes.
    """
    order = as_index(order, "order")
    if order < 0:
        raise DomainError(f"derivative order must be >= 0, got {order}")
    if order > MAX_EVAL_ORDER:
        raise DomainError(
            f"order {order} exceeds double precision range (max {MAX_EVAL_ORDER})"
        )
    if not math.isfinite(z) or abs(z) >= 2.0**52:
        raise DomainError(f"argument out of reducible range: {z}")
    m = round(z)
    d = z - m
    s = math.sin(math.pi * d)
    if abs(s) < POLE_GUARD:
        raise PoleError(f"pi*{z} is within the pole guard of a pole", location=m)
    if order == 0:
        # cot has period pi, so the integer part drops out entirely.
        return math.cos(math.pi * d) / s
    num = 0.0
    for j, b in expansion(order).harmonics:
        c = math.cos(math.pi * (j * d))
        if (j * m) % 2:
            c = -c
        num += b * c
    denom = s ** (order + 1)
    if (m * (order + 1)) % 2:
        denom = -denom
    return num / denom


@lru_cache(maxsize=None)
def oracle_expansion(order: int) -> CotPolynomial:
    """cot^(order) as a polynomial in t = cot x, by exact differentiation.

    Base case is the identity polynomial t; each step applies
    P(t) -> P'(t) * (-1 - t**2), which is d/dx applied through t = cot x.
    """
    order = as_index(order, "order")
    if order < 0:
        raise DomainError(f"derivative order must be >= 0, got {order}")
    cur = [0, 1]
    for _ in range(order):
        deriv = [(i + 1) * c for i, c in enumerate(cur[1:])]
        nxt = [0] * (len(deriv) + 2)
        for i, c in enumerate(deriv):
            nxt[i] -= c
            nxt[i + 2] -= c
        cur = nxt
    return CotPolynomial(coefficients=tuple(cur))


def _fold_cos(d: dict[int, Fraction], j: int, val: Fraction) -> None:
    d[abs(j)] = d.get(abs(j), Fraction(0)) + val


def _fold_sin(d: dict[int, Fraction], j: int, val: Fraction) -> None:
    if j == 0:
        return
    if j < 0:
        j, val = -j, -val
    d[j] = d.get(j, Fraction(0)) + val


def _multiply_by_cos(cosd, sind):
    half = Fraction(1, 2)
    nc: dict[int, Fraction] = {}
    ns: dict[int, Fraction] = {}
    for j, v in cosd.items():
        _fold_cos(nc, j + 1, half * v)
        _fold_cos(nc, j - 1, half * v)
    for j, v in sind.items():
        _fold_sin(ns, j + 1, half * v)
        _fold_sin(ns, j - 1, half * v)
    return nc, ns


def _multiply_by_sin(cosd, sind):
    half = Fraction(1, 2)
    nc: dict[int, Fraction] = {}
    ns: dict[int, Fraction] = {}
    for j, v in cosd.items():
        _fold_sin(ns, j + 1, half * v)
        _fold_sin(ns, j - 1, -half * v)
    for j, v in sind.items():
        _fold_cos(nc, j - 1, half * v)
        _fold_cos(nc, j + 1, -half * v)
    return nc, ns


def _monomial_harmonics(cos_power: int, sin_power: int):
    """Expand cos(x)**cos_power * sin(x)**sin_power into harmonics, exactly."""
    cosd: dict[int, Fraction] = {0: Fraction(1)}
    sind: dict[int, Fraction] = {}
    for _ in range(cos_power):
        cosd, sind = _multiply_by_cos(cosd, sind)
    for _ in range(sin_power):
        cosd, sind = _multiply_by_sin(cosd, sind)
    return cosd, sind


def harmonics_from_polynomial(
    order: int, poly: CotPolynomial
) -> tuple[tuple[int, int], ...]:
    """Recover the cosine-harmonic coefficients from the polynomial oracle.

    Multiplies the polynomial-in-cot form through by sin**(order+1) and
    rewrites every cos**m * sin**s monomial in the cosine basis with exact
    rational arithmetic.  This route never touches the harmonic-coefficient
    formulas, so agreement with them is a genuine cross-check.
    """
    if order < 1:
        raise DomainError(f"derivative order must be >= 1, got {order}")
    if poly.degree != order + 1:
        raise DomainError(
            f"polynomial degree {poly.degree} does not match order {order}"
        )
    total_cos: dict[int, Fraction] = {}
    total_sin: dict[int, Fraction] = {}
    for m, c in enumerate(poly.coefficients):
        if c == 0:
            continue
        cosd, sind = _monomial_harmonics(m, order + 1 - m)
        for j, v in cosd.items():
            total_cos[j] = total_cos.get(j, Fraction(0)) + c * v
        for j, v in sind.items():
            total_sin[j] = total_sin.get(j, Fraction(0)) + c * v
    if any(v != 0 for v in total_sin.values()):
        raise DomainError("polynomial form produced residual sine harmonics")
    expected = tuple(range(0 if order % 2 else 1, order, 2))
    for j, v in total_cos.items():
        if v != 0 and j not in expected:
            raise DomainError(f"unexpected cos({j}x) harmonic survived")
        if v.denominator != 1:
            raise DomainError(f"non-integer coefficient {v} at multiplier {j}")
    return tuple((j, int(total_cos.get(j, Fraction(0)))) for j in expected)


def expansions_up_to(max_order: int) -> Iterator[CotDerivExpansion]:
    """Yield expansion(1) .. expansion(max_order), for table output."""
    if max_order < 1:
        raise DomainError(f"max order must be >= 1, got {max_order}")
    for p in range(1, max_order + 1):
        yield expansion(p)
