"""How fast do the coefficients grow?  Measuring the exp(s*K*n) law.

The maximum absolute coefficient of the truncated product grows exponentially
in n.  The rate constant K = log 2 + max_w (1/w) integral_0^w log sin(pi t) dt
is computed here by quadrature plus golden-section search, then compared with
least-squares slopes of log max-coefficient measured from exact expansions.
A Cauchy-integral bound sandwiches the max coefficient between the circle
supremum and (degree+1) times itself, which is also checked.
"""

from qproduct import (
    K_REFERENCE,
    ProductSpec,
    asymptotic_fit,
    max_abs_coefficient,
    max_abs_profile,
    sandwich_inequality_check,
    sudler_constant,
    unit_circle_max,
)

result = sudler_constant()
print(f"K by quadrature: {result.value:.8f} (reference {K_REFERENCE})")
print(f"  maximizer w* = {result.argmax_w:.8f}, quadrature error {result.quadrature_error:.2e}")

print("\nExact maximum coefficients (one incremental expansion pass):")
profile = max_abs_profile(1, [10, 20, 40, 80])
for n, value in sorted(profile.items()):
    print(f"  n={n:3d}: max |t_j| = {value}")

print("\nSlope of log max-coefficient against n:")
fit = asymptotic_fit(1, 100, 300, 25)
print(f"  s=1, n=100..300: slope {fit.slope:.5f}, residual bound {fit.residual_bound:.3f}")
fit2 = asymptotic_fit(2, 50, 150, 25)
print(f"  s=2, n=50..150:  slope/2 {fit2.slope / 2:.5f}")
print(f"  both sit near K = {K_REFERENCE} (the gap shrinks like log n / n)")

print("\nThe circle supremum sandwiches the max coefficient:")
for s, n in [(1, 10), (2, 6)]:
    spec = ProductSpec(s, n)
    m = max_abs_coefficient(spec)
    circle = unit_circle_max(spec)
    print(f"  s={s}, n={n}: max|t| = {m} <= sup|T| = {circle:.3f}"
          f" <= (deg+1)*max|t| = {(spec.degree + 1) * m}")
    print(f"    all four inequalities hold: {sandwich_inequality_check(spec)}")
