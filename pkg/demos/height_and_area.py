"""
Height and area statistics against their asymptotic laws
========================================================

Average height grows like 2*sqrt(pi*n/3) and average area like
sqrt(pi/3)*n^(3/2).  Everything exact is computed in integer arithmetic;
floats enter only in the final ratio against the law.
"""

from deutschpaths import LAWS, asymptotic_report, avg_area, avg_height, height_total

# exact totals for small n, straight from the trinomial tables
print("total height of closed paths:", [height_total(n, "closed") for n in range(9)])
print("total height of open paths  :", [height_total(n, "open") for n in range(9)])

# exact averages are Fractions
print("avg height n=10 :", avg_height(10, "closed"))
print("avg area   n=10 :", avg_area(10))

# the ratio exact/asymptotic drifts toward 1 as n grows
rows = asymptotic_report([100, 400, 1000], ["avg_height_closed"])
for row in rows:
    print(f"n={row.n:5d}  exact/asymptotic = {row.ratio:.4f}")

# closed Deutsch paths are about twice as high as Motzkin paths of the same
# length; the ratio against the Motzkin height law approaches 2
factor = LAWS["closed_height_vs_motzkin_height"].ratio(1000)
print(f"height vs the Motzkin law at n=1000: {factor:.3f} (limit 2)")

# counting laws: Motzkin numbers and total area against their leading terms
for name in ("motzkin_count", "area_total"):
    law = LAWS[name]
    print(f"{name:14s} at n=400: ratio {law.ratio(400):.4f}")
