"""Classical series expansions meet their truncated products.

Three infinite products have celebrated series expansions: the plain product
(pentagonal-number exponents), its cube (arithmetic-progression coefficients
2k+1), and its square (a two-variable double series).  A truncation at n
agrees with the corresponding series through exponent n, so each identity can
be stress-tested with exact arithmetic.  Partition parity counts and Gaussian
binomials supply two more independent routes to the same coefficients.
"""

from qproduct import (
    ProductSpec,
    cauchy_identity_check,
    expand_restricted_product,
    hecke_rogers_series,
    jacobi_series,
    parity_counts,
    pentagonal_series,
    q_binomial,
    series_to_coeffs,
    stable_prefix_check,
    truncated_tau,
)

max_e = 12
print("Pentagonal series of the plain product:")
print("  terms:", [(t.exponent, t.coefficient) for t in pentagonal_series(max_e)])
print("  prefix matches the n=12 truncation:",
      stable_prefix_check(1, 12, pentagonal_series(12)))

print("\nCube of the product, two exponent conventions:")
std = jacobi_series(10, "standard")
printed = jacobi_series(10, "as-printed")
print("  standard k(k+1)/2 terms:", [(t.exponent, t.coefficient) for t in std][:5])
print("  matches the cube truncation:", stable_prefix_check(3, 10, std))
print("  as-printed k(k-1)/2 collides at q^0 (1 - 3 = -2):",
      series_to_coeffs(printed, 0))
print("  and so fails the match:", stable_prefix_check(3, 10, printed))

print("\nSquare of the product via the double series:")
print("  coefficients to q^8:", series_to_coeffs(hecke_rogers_series(8), 8))
print("  product says:       ", expand_restricted_product(ProductSpec(2, 8)).coeffs[:9])

print("\nPartition parity recounts each coefficient: even minus odd part-counts.")
spec = ProductSpec(1, 6)
poly = expand_restricted_product(spec)
for j in (5, 6, 7):
    pc = parity_counts(1, 6, j)
    print(f"  j={j}: even={pc.even}, odd={pc.odd}, difference={pc.difference},"
          f" coefficient={poly[j]}")

print("\nGaussian binomials and the finite product identity:")
print("  [4 2]_q =", q_binomial(4, 2).coeffs)
print("  product = alternating q-binomial sum for n up to 20:",
      all(cauchy_identity_check(n) for n in range(1, 21)))

print("\nThe 24th power truncated at n >= j reproduces the tau values:")
print("  tau_n(j) for j <= 4:", truncated_tau(4).coeffs[:5])
