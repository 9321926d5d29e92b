"""Parabolic interval polytopes in type A.

Conventions.  J is a subset of {1..n-1} naming fundamental-weight indices;
the parabolic subgroup W_J is generated by the OTHER simple reflections
{s_i : i not in J}, so it permutes positions within the blocks of {1..n}
obtained by cutting after each j in J.  The weight point of z is

    p(z) = sum over j in J of the 0/1 indicator of the value set
           {z(1), ..., z(j)},

an integer vector constant exactly on the cosets z W_J.  The polytope is
the hull of {p(z) : u <= z <= v}, with v required to be the minimal-length
representative of its coset.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from . import exactlp
from .errors import DomainError
from .intervals import interval
from .perms import Perm, bruhat_leq, format_perm, identity, inverse


def check_subset(n: int, J) -> tuple:
    J = tuple(sorted(set(J)))
    if any(not 1 <= j <= n - 1 for j in J):
        raise DomainError(f"J must be a subset of 1..{n - 1}, got {J!r}")
    return J


def position_blocks(n: int, J) -> tuple:
    """The intervals of {1..n} obtained by cutting after each j in J; these
    are the position blocks permuted by W_J."""
    J = check_subset(n, J)
    cuts = [0, *J, n]
    return tuple(
        tuple(range(a + 1, b + 1)) for a, b in zip(cuts, cuts[1:]) if a < b
    )


def min_coset_rep(z: Perm, J) -> Perm:
    """The shortest element of z W_J: sort values within each position block."""
    out = []
    for block in position_blocks(len(z), J):
        out.extend(sorted(z[i - 1] for i in block))
    return tuple(out)


def is_min_rep(z: Perm, J) -> bool:
    return z == min_coset_rep(z, J)


def weight_point(z: Perm, J) -> tuple:
    """p(z)_i counts the j in J whose initial value set {z(1)..z(j)}
    contains i, i.e. #{j in J : z^{-1}(i) <= j}."""
    n = len(z)
    J = check_subset(n, J)
    zinv = inverse(z)
    return tuple(sum(1 for j in J if zinv[i] <= j) for i in range(n))


def parabolic_bip_vertices(u: Perm, v: Perm, J):
    """Deduplicated, sorted weight points of the interval [u, v]."""
    J = check_subset(len(u), J)
    if not is_min_rep(v, J):
        raise DomainError(
            f"{format_perm(v)} is not minimal in its coset for J={list(J)}; "
            f"use min_coset_rep, which gives {format_perm(min_coset_rep(v, J))}"
        )
    return sorted({weight_point(z, J) for z in interval(u, v).elements})


def coset_reps_in_interval(u: Perm, v: Perm, J):
    """Sorted minimal representatives of the cosets meeting [u, v]."""
    return sorted({min_coset_rep(z, J) for z in interval(u, v).elements})


@lru_cache(maxsize=None)
def _interval_point_sets(n: int, J):
    """frozenset of weight points -> witnessing (x, y), over every interval
    [x, y] in S_n whose top is a minimal coset representative."""
    out = {}
    e = identity(n)
    reps = sorted(
        {min_coset_rep(z, J) for z in interval(e, tuple(range(n, 0, -1))).elements}
    )
    for y in reps:
        for x in sorted(interval(e, y).elements):
            S = frozenset(weight_point(z, J) for z in interval(x, y).elements)
            out.setdefault(S, (x, y))
    return out


def parabolic_faces_check(u: Perm, v: Perm, J) -> dict:
    """Executable check of the faces theorem for the parabolic polytope.

    Candidate faces come from two sources: argmax sets of all integer
    functionals with entries in 0..n-1, and every subinterval point set
    {p(z) : x <= z <= y} confirmed by the LP face oracle.  Each face found
    must be such a point set for some x <= y with y minimal in its coset;
    0-faces must biject with the cosets meeting [u, v]; 1-faces must join
    cover-related cosets.
    """
    n = len(u)
    if n > 5:
        raise DomainError("parabolic_faces_check is guarded to n <= 5")
    J = check_subset(n, J)
    I = interval(u, v)
    V = parabolic_bip_vertices(u, v, J)

    # the face's defining interval need not sit inside [u, v], so the
    # candidate point sets range over every [x, y] with y minimal
    interval_sets = _interval_point_sets(n, J)
    elements = sorted(I.elements)
    pt = {z: weight_point(z, J) for z in elements}

    faces = set()
    for w in product(range(n), repeat=n):
        best = max(sum(a * b for a, b in zip(w, p)) for p in V)
        faces.add(
            frozenset(p for p in V if sum(a * b for a, b in zip(w, p)) == best)
        )
    vset = set(V)
    local_sets = set()
    for x in elements:
        for y in elements:
            if bruhat_leq(x, y):
                local_sets.add(frozenset(pt[z] for z in interval(x, y).elements))
    faces |= {
        S for S in local_sets if S <= vset and exactlp.is_face(sorted(S), V)
    }

    violations = [
        sorted(F) for F in faces if F not in interval_sets
    ]

    extremes = exactlp.extreme_points(V)
    cosets = coset_reps_in_interval(u, v, J)
    zero_cells_match_cosets = (
        list(extremes) == V and len(V) == len(cosets)
    )

    edges_ok = True
    for F in faces:
        if len(F) == 2 and exactlp.affine_rank(sorted(F)) == 1:
            p1, p2 = sorted(F)
            if not any(
                {pt[x], pt[y]} == {p1, p2}
                for x, y in I.covers
                if pt[x] != pt[y]
            ):
                edges_ok = False

    by_dim = {}
    for F in faces:
        by_dim[exactlp.affine_rank(sorted(F))] = by_dim.get(
            exactlp.affine_rank(sorted(F)), 0
        ) + 1

    return {
        "u": u,
        "v": v,
        "J": J,
        "n_points": len(V),
        "n_cosets": len(cosets),
        "faces_found": len(faces),
        "faces_by_dim": dict(sorted(by_dim.items())),
        "all_faces_are_interval_sets": not violations,
        "violations": violations,
        "zero_cells_match_cosets": zero_cells_match_cosets,
        "edges_are_cover_pairs": edges_ok,
    }
