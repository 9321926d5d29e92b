"""Geometry of the interval polytope: dimension, faces, inequalities.

The hull of the permutation vectors of an interval [u, v] has dimension
n minus the number of blocks cut out by any maximal chain's transpositions,
every face is itself an interval polytope, and the 1-skeleton is small
enough that the diameter equals the rank of the interval.
"""

from bruhatpoly.polytopes import (
    bip_inequalities,
    block_partition,
    crown_type,
    diameter,
    dimension,
    enumerate_faces,
    f_vector,
    format_partition,
    is_toric,
    vertices,
)
from bruhatpoly.perms import format_perm, parse_perm

for a, b in (("1234", "1432"), ("1234", "3412")):
    u, v = parse_perm(a), parse_perm(b)
    B = format_partition(block_partition(u, v))
    print(f"Q_[{a},{b}]: dimension {dimension(u, v)}, blocks {B}")
print()

u, v = parse_perm("1324"), parse_perm("2431")
desc = bip_inequalities(u, v)
print(f"inequality description of Q_[{format_perm(u)},{format_perm(v)}]:")
for coeffs, rhs in desc.equalities:
    lhs = " + ".join(f"x{i+1}" for i, c in enumerate(coeffs) if c)
    print(f"  {lhs} = {rhs}")
for subset, rhs in desc.inequalities:
    print(f"  {' + '.join(f'x{i}' for i in subset)} <= {rhs}")
print()

u, v = parse_perm("1243"), parse_perm("4132")
faces = enumerate_faces(u, v)
print(f"faces of Q_[{format_perm(u)},{format_perm(v)}] (f-vector {tuple(f_vector(u, v))}):")
for x, y, d in faces:
    if d == 2:
        print(f"  2-face [{format_perm(x)}, {format_perm(y)}]")
print(f"  diameter {diameter(u, v)} = rank; "
      f"{len(vertices(u, v))} vertices")
print(f"  toric: {is_toric(u, v)}, crown type: {crown_type(u, v)}-crown")
