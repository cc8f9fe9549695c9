"""
Counting and listing Deutsch paths
==================================

A Deutsch path takes unit up-steps and down-steps of any size, never dips
below the x-axis, and is "closed" when it ends back on the axis.  This demo
lists small cases, then counts much longer paths with the transfer-matrix
routine.
"""

from deutschpaths import PathFamilyQuery, count_dp, enumerate_paths

# list every open Deutsch path of length 4: there are 9 of them
query = PathFamilyQuery("deutsch", 4)
for path in enumerate_paths(query):
    print(f"{path.tokens():16s} end={path.end_level} height={path.height} area={path.area}")
print()

# closed paths end at level 0; the counts 1, 0, 1, 1, 3, 6, 15, ... follow
closed = [count_dp(PathFamilyQuery("deutsch", n, end_level=0)) for n in range(11)]
print("closed counts :", closed)

# open paths are counted by the Motzkin numbers
opened = [count_dp(PathFamilyQuery("deutsch", n)) for n in range(11)]
motzkin = [count_dp(PathFamilyQuery("motzkin", n)) for n in range(11)]
print("open counts   :", opened)
print("motzkin counts:", motzkin)
assert opened == motzkin

# a height bound restricts the strip the DP walks in
bounded = [
    count_dp(PathFamilyQuery("deutsch", n, end_level=0, max_height=2)) for n in range(11)
]
print("height <= 2   :", bounded)

# the DP is exact integer arithmetic, so long lengths are cheap
big = count_dp(PathFamilyQuery("deutsch", 500, end_level=0))
print(f"closed paths of length 500: {str(big)[:40]}... ({len(str(big))} digits)")

# reversed Deutsch paths swap the step sets: up-steps of any size, unit
# down-steps; ending at level 2 mirrors starting a Deutsch path there
reversed_counts = [
    count_dp(PathFamilyQuery("reversed", n, end_level=0)) for n in range(11)
]
print("closed reversed:", reversed_counts)
assert reversed_counts == closed
