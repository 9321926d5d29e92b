"""R-polynomials and the generalized recurrence.

The classical recurrence peels a right descent off v.  The generalized
form works at any inversion-minimal transposition t:

    R_{u,v} = q R_{ut,vt} + (q - 1) R_{u,vt}.

Minimality matters: the four lifting relations alone do not suffice, as a
concrete S_4 counterexample shows.
"""

from bruhatpoly.perms import format_perm, parse_perm
from bruhatpoly.rpoly import (
    extend_to_special_matching,
    r_polynomial,
    recurrence_counterexample_check,
)

for a, b in (("21345", "53421"), ("31245", "43521"), ("21345", "43521")):
    print(f"R_[{a},{b}] = {r_polynomial(parse_perm(a), parse_perm(b))}")
print()

report = recurrence_counterexample_check()
ce = report["counterexample"]
print(
    f"on (u,v,t) = ({format_perm(ce['u'])}, {format_perm(ce['v'])}, {ce['t']}):"
)
print(f"  lifting relations hold: {ce['lifting_relations_hold']}")
print(f"  t inversion-minimal:    {ce['inversion_minimal']}")
print(f"  recurrence holds:       {ce['identity_holds']}")
print("so the lifting relations do not imply the recurrence;")
print(f"at every inversion-minimal t it does hold: "
      f"{report['inversion_minimal_identity_holds']}")
print()

print("special matchings: extending M(v) = vt over [u, v]")
M = extend_to_special_matching(parse_perm("143265"), parse_perm("254163"), (3, 6))
print(f"  [143265, 254163], t=(3,6): extends to a matching of {len(M)} elements")
obs = extend_to_special_matching(parse_perm("1324"), parse_perm("4312"), (2, 4))
print(f"  [1324, 4312], t=(2,4): {obs}")
