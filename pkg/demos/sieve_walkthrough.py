"""Counting distinct-coordinate tuples with characters: the cycle-type sieve.

Summing psi(x_1)...psi(x_k) over k-tuples from {1..n} with all coordinates
distinct looks like it needs n!/(n-k)! terms.  The sieve rewrites it as a
signed sum over the cycle types of S_k, then packs the types into the
generating polynomial Z_k whose EGF is exp(t_1 u + t_2 u^2/2 + ...), and
finally lands on a single coefficient extraction from prod_a (1 - u psi(a)).
Each stage below is compared with direct enumeration.
"""

import math

from qproduct import (
    CharacterIndex,
    egf_consistency_check,
    enumerate_cycle_types,
    f_psi_distinct_bruteforce,
    f_psi_sieve,
    z_polynomial,
)
from qproduct.sieve import character_power_sums, f_psi_via_cycle_index

k = 4
print(f"Cycle types of S_{k} (counts c_i of length-i cycles):")
for ct in enumerate_cycle_types(k):
    print(f"  counts {ct.counts}: {ct.permutation_count} permutations, sign {ct.sign:+d}")
total = sum(ct.permutation_count for ct in enumerate_cycle_types(k))
print(f"  class sizes sum to k! = {total} = {math.factorial(k)}")

print("\nZ_k packages the types: Z_1(t1) = t1, Z_2 = t1^2 + t2, ...")
print("  Z_2(2, 5) =", z_polynomial(2, [2, 5]))
print("  Z_3(1, 1, 1) =", z_polynomial(3, [1, 1, 1]), "= 3!")
print("  EGF check exp(sum t_i u^i / i), alternating t:",
      egf_consistency_check(6, [(-1) ** i for i in range(1, 7)]))

n, modulus = 5, 6
print(f"\nDistinct-tuple sums over {{1..{n}}} for the characters of Z_{modulus}:")
print("  r  k  enumeration              sieve                     cycle-index")
for r in (0, 1, 2):
    psi = CharacterIndex(r, modulus)
    for kk in (2, 3):
        brute = f_psi_distinct_bruteforce(n, kk, psi)
        sieve = f_psi_sieve(n, kk, psi)
        via_z = f_psi_via_cycle_index(n, kk, psi)
        print(f"  {r}  {kk}  {brute:+.6f}  {sieve:+.6f}  {via_z:+.6f}")

print("\nFor the trivial character the sieve recovers the falling factorial:")
for kk in range(1, n + 1):
    value = f_psi_sieve(n, kk, CharacterIndex(0, modulus))
    print(f"  k={kk}: {value.real:8.1f}  vs  n!/(n-k)! = {math.factorial(n)//math.factorial(n-kk)}")

print("\nThe inputs to the sieve are plain character power sums s_i = sum psi(a)^i:")
psi = CharacterIndex(1, 7)
print(" ", [f"{v:+.3f}" for v in character_power_sums(n, 4, psi)])
