"""Parabolic interval polytopes.

Projecting an interval [u, v] to weight points collapses each coset of the
parabolic subgroup W_J to a single point.  The vertices are exactly the
cosets meeting the interval, every face is again such a projection, and
two different intervals can project to the same polytope.
"""

from bruhatpoly.parabolic import (
    coset_reps_in_interval,
    parabolic_bip_vertices,
    parabolic_faces_check,
    weight_point,
)
from bruhatpoly.perms import format_perm, parse_perm

u, v, J = parse_perm("1234"), parse_perm("2413"), (2,)
pts = parabolic_bip_vertices(u, v, J)
print(f"Q^J for [{format_perm(u)}, {format_perm(v)}], J={list(J)}:")
for p in pts:
    print(f"  {p}")
cosets = coset_reps_in_interval(u, v, J)
print(f"{len(pts)} vertices = {len(cosets)} cosets meeting the interval")
print()

J = (1, 3)
a = parabolic_bip_vertices(parse_perm("1234"), parse_perm("4231"), J)
b = parabolic_bip_vertices(parse_perm("1324"), parse_perm("4231"), J)
print(f"with J={list(J)}, the intervals [1234,4231] and [1324,4231]")
print(f"project to the same point set: {a == b}")
print()

report = parabolic_faces_check(parse_perm("1243"), parse_perm("4123"), (1,))
print(f"faces check on [1243, 4123], J=[1]:")
print(f"  faces found: {report['faces_found']} "
      f"(by dimension {report['faces_by_dim']})")
print(f"  all faces are interval projections: "
      f"{report['all_faces_are_interval_sets']}")
print(f"  0-cells biject with cosets: {report['zero_cells_match_cosets']}")
print(f"  edges join cover-related cosets: {report['edges_are_cover_pairs']}")
