"""Growth of the maximum coefficient and the Sudler constant.

The largest absolute coefficient of prod_{a<=n} (1-q^a)^s grows like
exp(s*K*n) up to a log-size correction, where

    K = log 2 + max_{1/2 < w < 1} (1/w) * integral_0^w log sin(pi t) dt
      ~ 0.19861.

This module computes exact maximum coefficients, the sup of |T(q)| on the
unit circle (via the product of 2|sin(a*theta/2)| factors, never the
coefficient vector), the constant K by quadrature plus golden-section search,
and least-squares slope fits of log max-coefficient against n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from .poly import ProductSpec, expansion, iter_expansions

K_REFERENCE = 0.19861

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
# Integrable log singularity at t = 0: the head of the integral is handled in
# closed form below this split point.
_HEAD_SPLIT = 1e-3


@dataclass(frozen=True)
class SudlerConstant:
    """Computed growth constant with its maximizer and quadrature error bound."""

    value: float
    argmax_w: float
    quadrature_error: float


@dataclass(frozen=True)
class AsymptoticFit:
    """Least-squares fit of log max-coefficient against n."""

    s: int
    n_values: tuple[int, ...]
    log_max: tuple[float, ...]
    slope: float
    intercept: float
    residual_bound: float


def max_abs_coefficient(spec: ProductSpec) -> int:
    """Largest |t_j| over the exact expansion."""
    coeffs = expansion(spec).coeffs
    return max(max(coeffs), -min(coeffs))


def max_abs_profile(s: int, n_values: Sequence[int]) -> dict[int, int]:
    """Exact max |t_j| for each n in n_values, from one incremental pass."""
    return {
        n: max(max(p.coeffs), -min(p.coeffs)) for n, p in iter_expansions(s, n_values)
    }


def golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> tuple[float, float]:
    """Deterministic golden-section maximization of a unimodal f on [lo, hi]."""
    if not hi > lo:
        raise ValueError("need hi > lo")
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


def _log_abs_on_circle(spec: ProductSpec, theta: float) -> float:
    """log |T(e^(i*theta))| = s * sum_a log(2 |sin(a*theta/2)|); -inf at zeros."""
    total = 0.0
    for a in range(1, spec.n + 1):
        mag = 2.0 * abs(math.sin(a * theta / 2.0))
        if mag == 0.0:
            return -math.inf
        total += math.log(mag)
    return spec.s * total


def unit_circle_max(spec: ProductSpec, samples: int | None = None) -> float:
    """Max of |T(e^(i*theta))| over a theta grid with golden-section refinement.

    Works through the factored form in log space (never the coefficients), so
    it cannot overflow for large n.  The returned value is a lower bound on
    the true maximum that the refinement makes sharp.  The grid must have at
    least 4 * degree samples.
    """
    min_samples = 4 * spec.degree
    if samples is None:
        samples = min_samples
    if samples < min_samples:
        raise ValueError(f"need at least {min_samples} samples, got {samples}")
    thetas = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    a = np.arange(1, spec.n + 1)
    log_total = np.zeros(samples)
    with np.errstate(divide="ignore"):
        # Chunk the (n x samples) grid to bound memory.
        step = max(1, 4_000_000 // spec.n)
        for start in range(0, samples, step):
            block = thetas[start : start + step]
            mags = 2.0 * np.abs(np.sin(np.outer(a, block) / 2.0))
            log_total[start : start + step] = np.log(mags).sum(axis=0)
    log_total *= spec.s
    best = int(np.argmax(log_total))
    spacing = 2.0 * np.pi / samples
    lo = thetas[best] - spacing
    hi = thetas[best] + spacing
    _, log_peak = golden_section_max(
        lambda t: _log_abs_on_circle(spec, t), lo, hi, tol=1e-13
    )
    return math.exp(max(log_peak, float(log_total[best])))


def log_sin_integral(w: float, *, epsabs: float = 1e-12) -> tuple[float, float]:
    """integral_0^w log sin(pi t) dt with its absolute error estimate.

    The head [0, split] uses the closed form of integral log(pi t) dt plus the
    series correction for log(sin x / x); the tail uses adaptive
    Gauss-Kronrod quadrature.
    """
    if not 0.0 < w <= 1.0:
        raise ValueError("w must lie in (0, 1]")
    eps = min(_HEAD_SPLIT, w / 2.0)
    head = eps * (math.log(math.pi * eps) - 1.0)
    head -= (math.pi**2) * eps**3 / 18.0 + (math.pi**4) * eps**5 / 900.0
    head_err = (math.pi**6) * eps**7 / 2835.0
    tail, tail_err = quad(
        lambda t: math.log(math.sin(math.pi * t)), eps, w, epsabs=epsabs, limit=200
    )
    return head + tail, head_err + tail_err


def sudler_constant(
    rel_tol: float = 1e-6, bracket: tuple[float, float] = (0.5 + 1e-6, 1.0 - 1e-6)
) -> SudlerConstant:
    """The growth constant K = log 2 + max_w (1/w) integral_0^w log sin(pi t) dt.

    Bracketed golden-section maximization over w in (1/2, 1); the integrand's
    log singularity at 0 is handled by log_sin_integral.  Raises if the
    requested relative tolerance cannot be certified.
    """
    if not 0.0 < rel_tol <= 1e-3:
        raise ValueError("rel_tol must lie in (0, 1e-3]")
    lo, hi = bracket
    if not 0.5 <= lo < hi <= 1.0:
        raise ValueError("bracket must lie inside [0.5, 1.0]")
    epsabs = rel_tol * 1e-4

    def g(w: float) -> float:
        return math.log(2.0) + log_sin_integral(w, epsabs=epsabs)[0] / w

    w_best, g_best = golden_section_max(g, lo, hi, tol=1e-10)
    _, quad_err = log_sin_integral(w_best, epsabs=epsabs)
    total_err = quad_err / w_best + 1e-12
    if total_err > rel_tol * abs(g_best):
        raise ArithmeticError(
            f"quadrature error {total_err:.3g} cannot certify rel_tol {rel_tol:.3g}"
        )
    return SudlerConstant(value=g_best, argmax_w=w_best, quadrature_error=total_err)


def asymptotic_fit(s: int, n_min: int, n_max: int, step: int = 1) -> AsymptoticFit:
    """Least-squares slope of log max-coefficient over an n grid.

    The slope divided by s estimates the growth constant K; residuals against
    the fitted line are reported, not hidden.  Needs at least three grid
    points.
    """
    if step < 1:
        raise ValueError("step must be >= 1")
    n_values = list(range(n_min, n_max + 1, step))
    if len(n_values) < 3:
        raise ValueError("fit needs at least 3 grid points")
    profile = max_abs_profile(s, n_values)
    logs = [math.log(profile[n]) for n in n_values]
    slope, intercept = np.polyfit(np.array(n_values, dtype=float), np.array(logs), 1)
    residuals = [abs(y - (slope * n + intercept)) for n, y in zip(n_values, logs)]
    return AsymptoticFit(
        s=s,
        n_values=tuple(n_values),
        log_max=tuple(logs),
        slope=float(slope),
        intercept=float(intercept),
        residual_bound=max(residuals),
    )


def sandwich_inequality_check(
    spec: ProductSpec, samples: int | None = None, rel_slack: float = 1e-6
) -> bool:
    """max|t_j| <= sup-circle <= sum|t_j| <= (degree+1) * max|t_j|.

    The middle quantity is the grid-plus-refinement estimate, a lower bound on
    the true circle maximum, so the first comparison allows the relative
    slack; the outer comparisons are exact integer against float and integer
    against integer.
    """
    m = max_abs_coefficient(spec)
    circle = unit_circle_max(spec, samples)
    abs_sum = sum(abs(c) for c in expansion(spec).coeffs)
    return (
        m <= circle * (1.0 + rel_slack)
        and circle <= abs_sum * (1.0 + 1e-12)
        and abs_sum <= (spec.degree + 1) * m
    )
