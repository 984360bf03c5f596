"""Expanding truncated q-products and slicing their coefficients.

The product (1-q)(1-q^2)...(1-q^n), optionally raised to the s-th power
factor by factor, expands to a polynomial with surprisingly structured
integer coefficients.  This walkthrough expands a few small cases, reads off
progression sums (sums of coefficients whose exponents share a residue), and
shows the reversal symmetry that forces half of the later identities.
"""

from qproduct import (
    IntPolynomial,
    ProductSpec,
    ProgressionQuery,
    cyclic_reduce,
    expand_restricted_product,
    progression_sum_oracle,
    reverse_negate_check,
)

spec = ProductSpec(s=1, n=6)
poly = expand_restricted_product(spec)
print(f"(1-q)(1-q^2)...(1-q^{spec.n}) expands to degree {poly.degree}:")
print(" ", poly.coeffs)

print("\nReducing mod q^N - 1 folds the vector into residue classes.")
for modulus in (7, 5, 3):
    row = cyclic_reduce(poly, modulus)
    print(f"  N = {modulus}: progression sums {row.coeffs}")

print("\nNote N = 7 = n + 1 gives the totient pattern (phi(7), -1, ..., -1),")
print("and any N <= n - 1 gives all zeros.")

print("\nSingle queries go through progression_sum_oracle:")
q = ProgressionQuery(modulus=5, residue=0)
print(f"  s=1, n=4, N=5, j=0 ->", progression_sum_oracle(ProductSpec(1, 4), q))

print("\nReversal symmetry: coefficients read the same backwards up to (-1)^(s*n).")
for s, n in [(1, 6), (1, 7), (2, 3)]:
    p = expand_restricted_product(ProductSpec(s, n))
    sign = "+" if (s * n) % 2 == 0 else "-"
    print(f"  s={s}, n={n}: reversed = {sign}(original)?",
          reverse_negate_check(p, ProductSpec(s, n)))

print("\nCoefficient vectors serialize to JSON decimal strings (they outgrow")
print("64-bit integers quickly) and to exponent,coefficient CSV:")
small = expand_restricted_product(ProductSpec(2, 2))
print(" ", small.to_json())
print(" ", small.to_csv().splitlines()[:3], "...")
print("  round trip ok:", IntPolynomial.from_json(small.to_json()) == small)
