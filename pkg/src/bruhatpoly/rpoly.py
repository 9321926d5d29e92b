"""R-polynomials and special matchings.

R-polynomials are computed by the classical right-descent recurrence.  The
same recurrence shape holds with a transposition t in place of the simple
reflection whenever t is inversion-minimal -- but not for an arbitrary t
satisfying the four lifting relations, and inversion-minimality also does
not guarantee that t extends to a special matching of the interval.  Both
counterexamples from the literature are reproduced here as executable
checks (recurrence_counterexample_check, extend_to_special_matching).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .intervals import (
    BruhatInterval,
    interval,
    inversion_minimal_transpositions,
    is_inversion_minimal,
)
from .perms import (
    Perm,
    Transposition,
    apply_transposition,
    bruhat_leq,
    compose,
    descents,
    format_perm,
    identity,
    is_cover,
    length,
    simple_reflection,
)


class IntPolynomial:
    """Dense integer polynomial in q; coefficient index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(
            tuple(x + y for x, y in zip(a, b)) + a[len(b):]
        )

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, n: int):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int):
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                qpart = "q" if d == 1 else f"q^{d}"
                body = qpart if abs(c) == 1 else f"{abs(c)}{qpart}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))
Q_MINUS_1 = IntPolynomial((-1, 1))


def _least_right_descent(v: Perm) -> int:
    return min(descents(v))


_R_CACHE: dict = {}


def r_polynomial(u: Perm, v: Perm, descent_choice=None) -> IntPolynomial:
    """R_{u,v}(q) by the descent recurrence.

    descent_choice(v) may override which right descent of v drives the
    recursion (the result is independent of it; tests exploit this);
    overridden runs bypass the memo table.
    """
    if len(u) != len(v):
        raise DomainError(f"size mismatch: {len(u)} vs {len(v)}")
    cache = _R_CACHE if descent_choice is None else None
    chooser = descent_choice or _least_right_descent
    return _r_rec(u, v, chooser, cache)


def _r_rec(u, v, chooser, cache):
    if u == v:
        return ONE
    if not bruhat_leq(u, v):
        return ZERO
    if cache is not None and (u, v) in cache:
        return cache[(u, v)]
    i = chooser(v)
    s = simple_reflection(len(v), i)
    vs = compose(v, s)
    us = compose(u, s)
    if i in descents(u):
        result = _r_rec(us, vs, chooser, cache)
    else:
        result = Q * _r_rec(us, vs, chooser, cache) + Q_MINUS_1 * _r_rec(u, vs, chooser, cache)
    if cache is not None:
        cache[(u, v)] = result
    return result


_RT_CACHE: dict = {}


def r_tilde(u: Perm, v: Perm) -> IntPolynomial:
    """The renormalized polynomial: same recurrence with the (q-1) branch
    replaced by R~_{us,vs} + q R~_{u,vs}."""
    if len(u) != len(v):
        raise DomainError(f"size mismatch: {len(u)} vs {len(v)}")
    if u == v:
        return ONE
    if not bruhat_leq(u, v):
        return ZERO
    if (u, v) in _RT_CACHE:
        return _RT_CACHE[(u, v)]
    i = _least_right_descent(v)
    s = simple_reflection(len(v), i)
    vs = compose(v, s)
    us = compose(u, s)
    if i in descents(u):
        result = r_tilde(us, vs)
    else:
        result = r_tilde(us, vs) + Q * r_tilde(u, vs)
    _RT_CACHE[(u, v)] = result
    return result


def r_from_tilde(u: Perm, v: Perm) -> IntPolynomial:
    """Recover R from R~ by the substitution q^(d/2) R~(q^(1/2) - q^(-1/2)),
    i.e. sum_j c_j q^((d-j)/2) (q-1)^j with d the length difference."""
    rt = r_tilde(u, v)
    if not rt:
        return ZERO
    d = length(v) - length(u)
    out = ZERO
    for j, c in enumerate(rt.coeffs):
        if c == 0:
            continue
        assert (d - j) % 2 == 0, "tilde coefficients live in one parity class"
        out = out + (Q_MINUS_1 ** j).shift((d - j) // 2) * IntPolynomial((c,))
    return out


def generalized_r_identity(u: Perm, v: Perm, t: Transposition) -> bool:
    """Check R_{u,v} = q R_{ut,vt} + (q-1) R_{u,vt} for an inversion-minimal
    t; the identity is a theorem, so False signals a bug."""
    if not bruhat_leq(u, v):
        raise DomainError(f"need {format_perm(u)} <= {format_perm(v)}")
    if not is_inversion_minimal(u, v, t):
        raise DomainError(
            f"{t} is not inversion-minimal on ({format_perm(u)}, {format_perm(v)})"
        )
    ut = apply_transposition(u, t)
    vt = apply_transposition(v, t)
    lhs = r_polynomial(u, v)
    rhs = Q * r_polynomial(ut, vt) + Q_MINUS_1 * r_polynomial(u, vt)
    return lhs == rhs


def lifting_relations_hold(u: Perm, v: Perm, t: Transposition) -> bool:
    """The four relations: vt < v and u < ut are covers, u <= vt, ut <= v."""
    ut = apply_transposition(u, t)
    vt = apply_transposition(v, t)
    return (
        length(vt) == length(v) - 1
        and length(ut) == length(u) + 1
        and bruhat_leq(u, vt)
        and bruhat_leq(ut, v)
    )


def recurrence_counterexample_check() -> dict:
    """The two cautionary examples around the generalized recurrence.

    (1324, 4231, (2,4)): the four lifting relations hold, t is not
    inversion-minimal, and the recurrence genuinely fails.
    (1243, 4312, (2,4)): the relations hold but t is again not
    inversion-minimal (minimality is sufficient, not necessary, for the
    relations).  For contrast, every inversion-minimal t on (1324, 4231)
    satisfies the identity.
    """
    u1, v1, t1 = (1, 3, 2, 4), (4, 2, 3, 1), (2, 4)
    ut1 = apply_transposition(u1, t1)
    vt1 = apply_transposition(v1, t1)
    lhs = r_polynomial(u1, v1)
    rhs = Q * r_polynomial(ut1, vt1) + Q_MINUS_1 * r_polynomial(u1, vt1)

    u2, v2, t2 = (1, 2, 4, 3), (4, 3, 1, 2), (2, 4)
    return {
        "counterexample": {
            "u": u1,
            "v": v1,
            "t": t1,
            "lifting_relations_hold": lifting_relations_hold(u1, v1, t1),
            "inversion_minimal": is_inversion_minimal(u1, v1, t1),
            "identity_holds": lhs == rhs,
        },
        "converse_failure": {
            "u": u2,
            "v": v2,
            "t": t2,
            "lifting_relations_hold": lifting_relations_hold(u2, v2, t2),
            "inversion_minimal": is_inversion_minimal(u2, v2, t2),
        },
        "inversion_minimal_identity_holds": all(
            generalized_r_identity(u1, v1, t)
            for t in inversion_minimal_transpositions(u1, v1)
        ),
    }


# ---------------------------------------------------------------------------
# special matchings
# ---------------------------------------------------------------------------


def hasse_neighbors(I: BruhatInterval) -> dict:
    adj = {z: set() for z in I.elements}
    for x, y in I.covers:
        adj[x].add(y)
        adj[y].add(x)
    return adj


def is_matching(I: BruhatInterval, M: dict) -> bool:
    adj = hasse_neighbors(I)
    return (
        set(M) == set(I.elements)
        and all(M[M[x]] == x and M[x] != x for x in M)
        and all(M[x] in adj[x] for x in M)
    )


def is_special_matching(I: BruhatInterval, M: dict) -> bool:
    """True iff M is a matching of the Hasse diagram such that every cover
    x < y satisfies M(x) = y or M(x) <= M(y)."""
    if not is_matching(I, M):
        raise DomainError("not a total Hasse-edge involution on the interval")
    return all(
        M[x] == y or bruhat_leq(M[x], M[y]) for x, y in I.covers
    )


def multiplication_matching(I: BruhatInterval, t: Transposition):
    """The matching x -> x*t, if right multiplication by t is a matching of
    the Hasse diagram of the interval; None otherwise."""
    M = {}
    for x in I.elements:
        xt = apply_transposition(x, t)
        if xt not in I.elements or abs(length(xt) - length(x)) != 1:
            return None
        M[x] = xt
    return M


def special_matching_r_identity(I: BruhatInterval, M: dict, u: Perm) -> bool:
    """For a special matching M of a lower interval [e, w] and u <= w:
    R_{u,w} = q^c R_{M(u),M(w)} + (q^c - 1) R_{u,M(w)}, c = 1 iff M(u) > u."""
    if I.u != identity(len(I.u)):
        raise DomainError("the matching identity is stated on lower intervals [e, w]")
    if not is_special_matching(I, M):
        raise DomainError("matching is not special")
    if u not in I.elements:
        raise DomainError(f"{format_perm(u)} is not below {format_perm(I.v)}")
    w = I.v
    c = 1 if length(M[u]) == length(u) + 1 else 0
    qc = Q if c == 1 else ONE
    lhs = r_polynomial(u, w)
    rhs = qc * r_polynomial(M[u], M[w]) + (qc - ONE) * r_polynomial(u, M[w])
    return lhs == rhs


def _violated_cover(I: BruhatInterval, M: dict):
    """First cover (in sorted order) violating the special condition among
    fully assigned pairs; None if none."""
    for x, y in sorted(I.covers):
        if x in M and y in M and M[x] != y and not bruhat_leq(M[x], M[y]):
            return x, y
    return None


def find_special_matchings(I: BruhatInterval):
    """All special matchings of the interval, by backtracking over the
    elements in (length, word) order with incremental cover checks."""
    adj = hasse_neighbors(I)
    order = sorted(I.elements, key=lambda z: (length(z), z))
    covers_at = {z: [] for z in I.elements}
    for x, y in I.covers:
        covers_at[x].append((x, y))
        covers_at[y].append((x, y))
    results = []
    M: dict = {}

    def consistent_after(x, z):
        for a, b in covers_at[x] + covers_at[z]:
            if a in M and b in M and M[a] != b and not bruhat_leq(M[a], M[b]):
                return False
        return True

    def search():
        x = next((z for z in order if z not in M), None)
        if x is None:
            results.append(dict(M))
            return
        for z in sorted(adj[x]):
            if z in M:
                continue
            M[x] = z
            M[z] = x
            if consistent_after(x, z):
                search()
            del M[x], M[z]

    search()
    assert all(is_special_matching(I, M_) for M_ in results)
    return results


@dataclass(frozen=True)
class MatchingObstruction:
    """Witness that no special matching with the requested seeds exists:
    the chain of forced assignments and the conflict it runs into."""

    steps: tuple  # (x, M(x)) in the order they were forced (seeds first)
    conflict: dict  # {"kind": ..., plus the offending elements}

    def __str__(self):
        chain = ", ".join(
            f"M({format_perm(x)})={format_perm(mx)}" for x, mx in self.steps
        )
        if self.conflict["kind"] == "cover-violation":
            x, y = self.conflict["cover"]
            return (
                f"forced {chain}; but cover {format_perm(x)} < {format_perm(y)} has "
                f"M({format_perm(y)})={format_perm(self.conflict['My'])} which is not >= "
                f"{format_perm(self.conflict['Mx'])}=M({format_perm(x)})"
            )
        return f"forced {chain}; then {self.conflict['kind']} at {self.conflict}"


def extend_to_special_matching(u: Perm, v: Perm, t: Transposition):
    """Search for a special matching M of [u, v] with M(v) = vt, M(u) = ut.

    Returns the matching when one exists.  Otherwise returns a
    MatchingObstruction whose forced chain follows the hand-derivation
    style: starting from the top seed, each unmatched neighbor is matched
    by completing rank-2 diamonds, and the first special-condition
    violation (scanning covers from the bottom) is reported.  A full
    backtracking search confirms the nonexistence verdict.
    """
    if not is_inversion_minimal(u, v, t):
        raise DomainError(
            f"{t} is not inversion-minimal on ({format_perm(u)}, {format_perm(v)})"
        )
    I = interval(u, v)
    vt = apply_transposition(v, t)
    ut = apply_transposition(u, t)
    adj = hasse_neighbors(I)

    M: dict = {}
    steps = []

    def assign(x, z):
        M[x] = z
        M[z] = x
        steps.append((x, z) if length(x) > length(z) else (z, x))

    def down(x):
        return sorted(z for z in adj[x] if length(z) == length(x) - 1)

    def up(x):
        return sorted(z for z in adj[x] if length(z) == length(x) + 1)

    def rule_a_dfs(d):
        # d is matched downward; force unmatched cocovers x of d by the
        # unique unmatched common cocover of x and M(d), when it exists
        for x in down(d):
            if x in M or x == M[d]:
                continue
            cands = [z for z in down(x) if z not in M and z in adj.get(M[d], ()) and length(z) == length(M[d]) - 1]
            if len(cands) == 1:
                assign(x, cands[0])
                rule_a_dfs(x)

    def rule_b_once():
        # force an unmatched element y from below: if x < y with M(x) < x,
        # the diamond [M(x), y] has exactly one middle besides x
        for y in sorted((z for z in I.elements if z not in M), key=lambda z: (length(z), z)):
            for x in sorted(down(y), reverse=True):
                if x not in M or length(M[x]) != length(x) - 1:
                    continue
                mids = [w for w in up(M[x]) if w != x and y in adj[w]]
                if len(mids) == 1 and mids[0] not in M:
                    assign(y, mids[0])
                    return y
        return None

    def propagate_from(d):
        rule_a_dfs(d)
        while True:
            y = rule_b_once()
            if y is None:
                break
            rule_a_dfs(y)

    # seed at the top, propagate, then seed at the bottom if still free;
    # a violated cover takes precedence over a bottom-seed mismatch, since
    # it already refutes every matching containing the forced chain
    assign(v, vt)
    propagate_from(v)
    conflict = None
    if not (u in M or ut in M):
        assign(u, ut)
        propagate_from(u)
    if set(M) == set(I.elements):
        bad = _violated_cover(I, M)
        if bad is not None:
            x, y = bad
            conflict = {"kind": "cover-violation", "cover": (x, y), "Mx": M[x], "My": M[y]}
        elif M.get(u) != ut:
            conflict = {"kind": "seed-conflict", "u": u, "ut": ut, "Mu": M.get(u)}
        else:
            assert is_special_matching(I, M)
            return M
    elif u in M and M.get(u) != ut:
        conflict = {"kind": "seed-conflict", "u": u, "ut": ut, "Mu": M.get(u)}
    else:
        conflict = {
            "kind": "incomplete",
            "unmatched": tuple(sorted(z for z in I.elements if z not in M)),
        }

    # the forced chain is heuristic; a full search settles existence
    completion = _seeded_search(I, adj, {v: vt, vt: v, u: ut, ut: u})
    if completion is not None:
        return completion
    return MatchingObstruction(steps=tuple(steps), conflict=conflict)


def _seeded_search(I, adj, seeds):
    """Backtracking completion of the seed assignment to a special matching;
    None if impossible."""
    if len(set(seeds)) != len(seeds) or any(
        seeds[seeds[x]] != x or seeds[x] not in adj[x] for x in seeds
    ):
        return None
    covers_at = {z: [] for z in I.elements}
    for x, y in I.covers:
        covers_at[x].append((x, y))
        covers_at[y].append((x, y))
    order = sorted(I.elements, key=lambda z: (length(z), z))
    M = dict(seeds)

    def consistent_around(x, z):
        for a, b in covers_at[x] + covers_at[z]:
            if a in M and b in M and M[a] != b and not bruhat_leq(M[a], M[b]):
                return False
        return True

    if not all(consistent_around(x, M[x]) for x in list(M)):
        return None

    def search():
        x = next((z for z in order if z not in M), None)
        if x is None:
            return True
        for z in sorted(adj[x]):
            if z in M:
                continue
            M[x] = z
            M[z] = x
            if consistent_around(x, z) and search():
                return True
            del M[x], M[z]
        return False

    if search():
        assert is_special_matching(I, M)
        return M
    return None
