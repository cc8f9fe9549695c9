"""
Generating functions in the substitution variable
=================================================

Every counting series here becomes a rational function after substituting
z = v/(1+v+v^2).  This demo builds catalog formulas, expands them back into
z-series, and checks a few against direct counting.
"""

from deutschpaths import (
    PathFamilyQuery,
    coeff_of_z,
    count_dp,
    expand_in_z,
    formula,
    trinomial,
    v_of_z,
)

# the substitution series v(z) solves v = z(1 + v + v^2); its coefficients
# are shifted Motzkin numbers
print("v(z)  :", v_of_z(8).coeffs)

# phi0_limit counts closed Deutsch paths with no height restriction
closed_gf = formula("phi0_limit")
print("closed:", expand_in_z(closed_gf, 10).coeffs)
assert expand_in_z(closed_gf, 10).coeff(6) == 15

# bounding the height truncates the series where tall paths first appear
for h in (1, 2, 3):
    series = expand_in_z(formula(f"phi0_bounded({h})"), 8)
    print(f"height<={h}:", series.coeffs)

# phi(h, i) refines the count by the end level i inside the strip of height h
series = expand_in_z(formula("phi(3,2)"), 8)
check = [count_dp(PathFamilyQuery("deutsch", n, end_level=2, max_height=3)) for n in range(9)]
print("phi(3,2):", series.coeffs)
assert list(series.coeffs) == check

# single coefficients come straight from trinomial rows, no series needed
n = 200
single = coeff_of_z(closed_gf, n)
assert single == count_dp(PathFamilyQuery("deutsch", n, end_level=0))
print(f"closed count at n={n} has {len(str(single))} digits")

# the same coefficient in closed form: T(n,n) - T(n,n-1) with T the
# trinomial coefficients [v^k](1+v+v^2)^n
assert single == trinomial(n, n) - trinomial(n, n - 1)

# the area series A(z) tracks the total area over all closed paths
print("area  :", expand_in_z(formula("area_A"), 10).coeffs)
