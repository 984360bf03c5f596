"""Exact integer polynomial arithmetic for truncated q-products.

The central object is the dense coefficient vector of

    prod_{a=1..n} (1 - q^a)^s

over arbitrary-precision integers.  Progression sums of those coefficients
(sums over an arithmetic progression of exponents) are obtained by reducing
the polynomial mod q^N - 1.  These exact vectors are the ground truth that
every formula elsewhere in the package is checked against.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ResourceLimitError

DEFAULT_COEFFICIENT_CAP = 10**7
CAP_ENV_VAR = "QPRODUCT_COEFF_CAP"


def coefficient_cap() -> int:
    """Cap on dense coefficient-vector length; override with QPRODUCT_COEFF_CAP."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_COEFFICIENT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{CAP_ENV_VAR} must be a positive integer, got {raw!r}")
    return cap


@dataclass(frozen=True)
class ProductSpec:
    """The pair (s, n) describing prod_{a=1..n} (1 - q^a)^s."""

    s: int
    n: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"multiplicity s must be >= 1, got {self.s}")
        if self.n < 1:
            raise ValueError(f"largest part n must be >= 1, got {self.n}")

    @property
    def degree(self) -> int:
        """Exact degree s*n*(n+1)/2 of the expanded product."""
        return self.s * self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class ProgressionQuery:
    """Residue class {N*m + j} of exponents: modulus N, residue j."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue must lie in [0, {self.modulus - 1}], got {self.residue}"
            )


class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of q^i.

    Trailing zeros are permitted; ``degree`` reports the last nonzero index
    (-1 for the zero polynomial).  All coefficients are Python ints, never
    floats.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            self.coeffs = [0]

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return self.degree == -1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        d = max(len(self.coeffs), len(other.coeffs))
        return all(self[i] == other[i] for i in range(d))

    def __hash__(self):
        return hash(tuple(self.coeffs[: self.degree + 1]))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"IntPolynomial([{head}{tail}], degree={self.degree})"

    # -- serialization ------------------------------------------------------
    # Coefficients overflow 64 bits for moderate n*s, so JSON carries decimal
    # strings, little-endian by exponent.

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(c) for c in json.loads(text))

    def to_csv(self) -> str:
        lines = ["exponent,coefficient"]
        lines.extend(f"{i},{c}" for i, c in enumerate(self.coeffs))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "IntPolynomial":
        rows = [ln for ln in text.strip().splitlines() if ln]
        if rows and rows[0].lower().startswith("exponent"):
            rows = rows[1:]
        pairs = [(int(e), int(c)) for e, c in (row.split(",") for row in rows)]
        size = max((e for e, _ in pairs), default=0) + 1
        coeffs = [0] * size
        for e, c in pairs:
            coeffs[e] = c
        return cls(coeffs)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product of two coefficient lists (the baseline contract)."""
    if not a or not b:
        return [0]
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


@lru_cache(maxsize=256)
def binomial_power(s: int) -> tuple[int, ...]:
    """Coefficients of (1 - x)^s.

    Built by repeated squaring of [1, -1] for small s; for large s the row
    comes straight from math.comb (identical values, linear cost).
    """
    if s < 0:
        raise ValueError("exponent must be non-negative")
    if s <= 64:
        result = [1]
        base = [1, -1]
        e = s
        while e:
            if e & 1:
                result = poly_mul(result, base)
            e >>= 1
            if e:
                base = poly_mul(base, base)
        return tuple(result)
    return tuple((-1) ** k * math.comb(s, k) for k in range(s + 1))


def _apply_binomial_factor(arr: np.ndarray, a: int, s: int) -> np.ndarray:
    """Multiply an object-dtype coefficient array by (1 - q^a)^s."""
    row = binomial_power(s)
    old_len = len(arr)
    out = np.zeros(old_len + a * s, dtype=object)
    for k, c in enumerate(row):
        off = a * k
        if c == 1:
            out[off : off + old_len] += arr
        elif c == -1:
            out[off : off + old_len] -= arr
        else:
            out[off : off + old_len] += c * arr
    return out


def multiply_by_binomial_power(p: IntPolynomial, a: int, s: int) -> IntPolynomial:
    """Exact product p(q) * (1 - q^a)^s."""
    if a < 1 or s < 0:
        raise ValueError("require a >= 1 and s >= 0")
    arr = np.array(p.coeffs, dtype=object)
    return IntPolynomial(_apply_binomial_factor(arr, a, s).tolist())


def expand_restricted_product(
    spec: ProductSpec, *, cap: int | None = None
) -> IntPolynomial:
    """Exact coefficients of prod_{a=1..n} (1 - q^a)^s.

    The factors are merged in increasing a, each raised to s before merging,
    so intermediate degrees grow monotonically.  Fails fast with
    ResourceLimitError when the final vector would exceed the coefficient cap.
    """
    limit = cap if cap is not None else coefficient_cap()
    size = spec.degree + 1
    if size > limit:
        raise ResourceLimitError(
            f"expansion needs {size} coefficients, cap is {limit}"
        )
    arr = np.zeros(1, dtype=object)
    arr[0] = 1
    for a in range(1, spec.n + 1):
        arr = _apply_binomial_factor(arr, a, spec.s)
    return IntPolynomial(arr.tolist())


def iter_expansions(s: int, n_values: Sequence[int]) -> Iterator[tuple[int, IntPolynomial]]:
    """Yield (n, expansion of prod_{a<=n} (1-q^a)^s) for each requested n.

    One incremental pass; snapshots are taken at the requested n values in
    increasing order.  The largest snapshot is cap-checked up front.
    """
    targets = sorted(set(n_values))
    if not targets or targets[0] < 1:
        raise ValueError("n values must be positive")
    top = ProductSpec(s, targets[-1])
    if top.degree + 1 > coefficient_cap():
        raise ResourceLimitError(
            f"expansion needs {top.degree + 1} coefficients, cap is {coefficient_cap()}"
        )
    wanted = set(targets)
    arr = np.zeros(1, dtype=object)
    arr[0] = 1
    for a in range(1, targets[-1] + 1):
        arr = _apply_binomial_factor(arr, a, s)
        if a in wanted:
            yield a, IntPolynomial(arr.tolist())


@lru_cache(maxsize=64)
def _expansion_cached(s: int, n: int, cap: int) -> IntPolynomial:
    # Shared read-only expansions; callers must not mutate .coeffs.
    return expand_restricted_product(ProductSpec(s, n), cap=cap)


def expansion(spec: ProductSpec) -> IntPolynomial:
    """Cached expansion of a product spec (treat the result as read-only)."""
    return _expansion_cached(spec.s, spec.n, coefficient_cap())


def cyclic_reduce(p: IntPolynomial, modulus: int) -> IntPolynomial:
    """Reduce p mod q^N - 1: entry j is the sum of coeffs over exponents = j mod N."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    out = [0] * modulus
    for i, c in enumerate(p.coeffs):
        if c:
            out[i % modulus] += c
    return IntPolynomial(out)


def progression_sum_oracle(spec: ProductSpec, query: ProgressionQuery) -> int:
    """Exact progression sum: sum of t_i over exponents i = j (mod N).

    This is the brute-force evaluator (full expansion, then cyclic reduction)
    against which every closed-form route is checked.
    """
    return cyclic_reduce(expansion(spec), query.modulus)[query.residue]


def reverse_negate_check(p: IntPolynomial, spec: ProductSpec) -> bool:
    """True iff coeffs[N - i] == (-1)^(s*n) * coeffs[i] for all i, N = degree.

    The expanded product always satisfies this reversal law: palindromic when
    s*n is even, anti-palindromic when s*n is odd.
    """
    big_n = spec.degree
    sign = -1 if (spec.s * spec.n) % 2 else 1
    if p.degree > big_n:
        raise ValueError("polynomial degree exceeds the product degree")
    return all(p[big_n - i] == sign * p[i] for i in range(big_n + 1))
