"""Exact rational linear algebra and LP, used as ground truth in tests.

Everything here works over Fractions (or plain integers for the
fraction-free rank computation); no floating point appears in any decision
path.  The simplex uses Bland's rule, which guarantees termination, and the
strict-separation face test is normalized with box bounds on the functional
so that the margin LP is bounded.

Scale guards: these routines are meant for desk-scale instances (point sets
from S_n with n <= 5); they are not a general-purpose LP library.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

MAX_POINTS = 200
MAX_DIM = 12


def _check_points(points):
    if not points:
        raise DomainError("empty point set")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise DomainError("points of mixed dimension")
    if len(points) > MAX_POINTS or dim > MAX_DIM:
        raise DomainError(
            f"scale guard exceeded: {len(points)} points in dimension {dim}"
        )
    return dim


def affine_rank(points) -> int:
    """Rank of the difference set {p - p0} by fraction-free (Bareiss)
    elimination over the integers."""
    _check_points(points)
    p0 = points[0]
    mat = [[int(a - b) for a, b in zip(p, p0)] for p in points[1:]]
    if not mat:
        return 0
    rows, cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(cols):
        pivot_row = next(
            (r for r in range(rank, rows) if mat[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        for r in range(rows):
            if r == rank:
                continue
            for c in range(cols):
                if c == col:
                    continue
                mat[r][c] = (mat[rank][col] * mat[r][c] - mat[r][col] * mat[rank][c]) // prev
            mat[r][col] = 0
        prev = mat[rank][col]
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# Two-phase primal simplex on the standard equality form
#     max c.x   s.t.  A x = b,  x >= 0
# over exact rationals, using integer pivoting: the tableau is kept as
# det * (rational tableau) with integer entries and det equal to the last
# pivot element, so every update
#     T'[i][j] = (T[i][j]*T[r][c] - T[i][c]*T[r][j]) // det
# is an exact integer division (same identity as fraction-free Gaussian
# elimination).  This avoids Fraction arithmetic in the hot loop entirely.
# ---------------------------------------------------------------------------


def _pivot(tableau, basis, zrow, det, row, col):
    """Integer pivot on (row, col); tableau[row][col] must be positive.
    Returns the new det (= the pivot element)."""
    pivot_row = tableau[row]
    piv = pivot_row[col]
    for r, line in enumerate(tableau):
        if r != row:
            f = line[col]
            if f:
                tableau[r] = [
                    (a * piv - f * p) // det for a, p in zip(line, pivot_row)
                ]
            elif det != piv:
                tableau[r] = [a * piv // det for a in line]
    if zrow is not None:
        f = zrow[col]
        if f:
            zrow[:] = [(a * piv - f * p) // det for a, p in zip(zrow, pivot_row)]
        elif det != piv:
            zrow[:] = [a * piv // det for a in zrow]
    basis[row] = col
    return piv


def _objective_row(tableau, basis, det, cost):
    """The reduced-cost row det*(z - c); negative entries improve a
    maximization."""
    zrow = [-cj * det for cj in cost] + [0]
    for r, j in enumerate(basis):
        if cost[j] != 0:
            f = cost[j]
            zrow = [a + f * p for a, p in zip(zrow, tableau[r])]
    return zrow


def _optimize(tableau, basis, det, cost):
    """Bland-rule simplex for max cost.x; tableau rows are det*[A | b] with
    the basic columns forming det*identity.  Returns (det, bounded)."""
    ncols = len(tableau[0]) - 1
    zrow = _objective_row(tableau, basis, det, cost)
    while True:
        # Bland: smallest improving index enters
        entering = next((j for j in range(ncols) if zrow[j] < 0), None)
        if entering is None:
            return det, True
        leaving = None
        num = den = None
        for r in range(len(basis)):
            coef = tableau[r][entering]
            if coef > 0:
                rhs = tableau[r][-1]
                if (
                    leaving is None
                    or rhs * den < num * coef
                    or (rhs * den == num * coef and basis[r] < basis[leaving])
                ):
                    num, den = rhs, coef
                    leaving = r
        if leaving is None:
            return det, False
        det = _pivot(tableau, basis, zrow, det, leaving, entering)


def _integer_rows(A, b):
    rows = []
    for ar, br in zip(A, b):
        line = [Fraction(a) for a in ar] + [Fraction(br)]
        den = 1
        for x in line:
            den = den * x.denominator // math.gcd(den, x.denominator)
        row = [int(x * den) for x in line]
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row)
    return rows


def solve_eq_lp(A, b, c):
    """max c.x subject to A x = b, x >= 0, all entries rational.

    Returns (status, x, objective) with status one of "optimal",
    "infeasible", "unbounded"; x is a list of Fractions when optimal.
    """
    m = len(A)
    n = len(A[0]) if m else len(c)
    rows = _integer_rows(A, b)
    c = [Fraction(x) for x in c]
    cden = 1
    for x in c:
        cden = cden * x.denominator // math.gcd(cden, x.denominator)
    cint = [int(x * cden) for x in c]

    # phase 1: artificial variables, minimize their sum
    tableau = [
        rows[r][:n] + [int(i == r) for i in range(m)] + [rows[r][-1]]
        for r in range(m)
    ]
    basis = [n + r for r in range(m)]
    det = 1
    cost1 = [0] * n + [-1] * m
    det, bounded = _optimize(tableau, basis, det, cost1)
    assert bounded, "phase-1 objective is bounded by construction"
    if any(tableau[r][-1] for r in range(m) if basis[r] >= n):
        return "infeasible", None, None

    # drive any residual artificial variables out of the basis
    r = 0
    while r < len(basis):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is None:
                del tableau[r], basis[r]  # redundant row
                continue
            if tableau[r][col] < 0:
                tableau[r] = [-x for x in tableau[r]]
            det = _pivot(tableau, basis, None, det, r, col)
        r += 1
    tableau = [row[:n] + [row[-1]] for row in tableau]

    # phase 2
    det, bounded = _optimize(tableau, basis, det, cint)
    if not bounded:
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        x[j] = Fraction(tableau[r][-1], det)
    obj = sum(ci * xi for ci, xi in zip(c, x))
    return "optimal", x, obj


def hull_membership(q, points) -> bool:
    """True iff q lies in the convex hull of points (exact feasibility LP
    on the barycentric weights)."""
    dim = _check_points(points)
    if len(q) != dim:
        raise DomainError(f"dimension mismatch: {len(q)} vs {dim}")
    m = len(points)
    A = [[Fraction(1)] * m] + [
        [Fraction(p[i]) for p in points] for i in range(dim)
    ]
    b = [Fraction(1)] + [Fraction(qi) for qi in q]
    status, _, _ = solve_eq_lp(A, b, [Fraction(0)] * m)
    return status == "optimal"


def is_face(S, V) -> bool:
    """Strict-separation test: is conv(S) a face of conv(V)?

    Looks for a functional w with w.s constant on S and strictly larger
    than w.t for every t in V \\ S, by maximizing the margin delta subject
    to box bounds -1 <= w_i <= 1.  Face iff the optimal margin is positive.
    """
    dim = _check_points(V)
    sset = {tuple(s) for s in S}
    if not sset:
        raise DomainError("empty face candidate")
    vset = {tuple(p) for p in V}
    if not sset <= vset:
        raise DomainError("face candidate is not a subset of the point set")
    others = sorted(vset - sset)
    if not others:
        return True
    if len(sset) == 1:
        # a single point is a face iff it is extreme
        return not hull_membership(next(iter(sset)), others)
    # no strict separation can exist if some outside point is affinely
    # dependent on S; this cheap integer-rank filter also keeps the margin
    # LP off the bulk of the non-faces
    base = sorted(sset)
    r = affine_rank(base)
    if any(affine_rank(base + [t]) == r for t in others):
        return False
    s0 = base[0]

    # variables: y_1..y_dim (w_i = y_i - 1), dplus, dminus,
    # one surplus per strict constraint, one cap slack per coordinate
    nstrict = len(others)
    nvars = dim + 2 + nstrict + dim
    A, b = [], []

    def row(yc, dplus, dminus, surplus_idx, cap_idx, rhs):
        line = [Fraction(0)] * nvars
        for i, a in enumerate(yc):
            line[i] = Fraction(a)
        line[dim] = Fraction(dplus)
        line[dim + 1] = Fraction(dminus)
        if surplus_idx is not None:
            line[dim + 2 + surplus_idx] = Fraction(-1)
        if cap_idx is not None:
            line[dim + 2 + nstrict + cap_idx] = Fraction(1)
        A.append(line)
        b.append(Fraction(rhs))

    for s in sorted(sset - {s0}):
        diff = [a - b_ for a, b_ in zip(s0, s)]
        row(diff, 0, 0, None, None, sum(diff))
    for idx, t in enumerate(others):
        diff = [a - b_ for a, b_ in zip(s0, t)]
        row(diff, -1, 1, idx, None, sum(diff))
    for i in range(dim):
        unit = [0] * dim
        unit[i] = 1
        row(unit, 0, 0, None, i, 2)

    c = [Fraction(0)] * nvars
    c[dim] = Fraction(1)
    c[dim + 1] = Fraction(-1)
    status, _, obj = solve_eq_lp(A, b, c)
    assert status == "optimal", f"margin LP must be feasible and bounded, got {status}"
    return obj > 0


def face_vertices(w, V):
    """The argmax subset of V under the functional w (the face it exposes)."""
    best = max(sum(wi * pi for wi, pi in zip(w, p)) for p in V)
    return [p for p in V if sum(wi * pi for wi, pi in zip(w, p)) == best]


def extreme_points(points):
    """The extreme points: p is kept iff it is not in the hull of the rest."""
    _check_points(points)
    uniq = sorted({tuple(p) for p in points})
    out = []
    for i, p in enumerate(uniq):
        rest = uniq[:i] + uniq[i + 1 :]
        if not rest or not hull_membership(p, rest):
            out.append(p)
    return out
