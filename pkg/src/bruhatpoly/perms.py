"""Permutations of {1..n} in one-line notation.

A permutation is a plain tuple ``w`` with ``w[i-1] = w(i)``; values and
positions are 1-based throughout.  All functions are pure, so permutations
can be shared freely across threads.

The text format is contiguous digits for n <= 9 ("2431") and
comma-separated values for n >= 10 ("10,2,3,...").
"""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import DomainError

Perm = tuple  # tuple[int, ...], one-line notation
Transposition = tuple  # (i, k) with 1 <= i < k <= n, acting on positions


def check_perm(w: Perm) -> Perm:
    """Validate that w is a bijection on {1..n}; return it unchanged."""
    n = len(w)
    if n == 0 or sorted(w) != list(range(1, n + 1)):
        raise DomainError(f"not a permutation of 1..{n}: {w!r}")
    return w


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if "," in text:
        w = tuple(int(part) for part in text.split(","))
    else:
        if not text.isdigit():
            raise DomainError(f"cannot parse permutation: {text!r}")
        w = tuple(int(ch) for ch in text)
    return check_perm(w)


def format_perm(w: Perm) -> str:
    if len(w) <= 9:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, a in enumerate(w):
        inv[a - 1] = i + 1
    return tuple(inv)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i)).  Raises on size mismatch."""
    if len(p) != len(q):
        raise DomainError(f"size mismatch: {len(p)} vs {len(q)}")
    return tuple(p[q[i] - 1] for i in range(len(p)))


def apply_transposition(w: Perm, t: Transposition) -> Perm:
    """Right-multiply w by the transposition t = (i, k): swap positions i, k."""
    i, k = t
    if not (1 <= i < k <= len(w)):
        raise DomainError(f"bad transposition {t!r} for n={len(w)}")
    lst = list(w)
    lst[i - 1], lst[k - 1] = lst[k - 1], lst[i - 1]
    return tuple(lst)


def simple_reflection(n: int, i: int) -> Perm:
    """s_i as an element of S_n."""
    return apply_transposition(identity(n), (i, i + 1))


def length(w: Perm) -> int:
    """Number of inversions: pairs i < j with w(i) > w(j)."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Strong Bruhat order comparison via the rank-matrix criterion.

    u <= v iff for every i the sorted value sets {u(1..i)} and {v(1..i)}
    compare entrywise.  Agrees with the reduced-subword definition.
    """
    n = len(u)
    if n != len(v):
        raise DomainError(f"size mismatch: {len(u)} vs {len(v)}")
    if u == v:
        return True
    for i in range(1, n):
        for a, b in zip(sorted(u[:i]), sorted(v[:i])):
            if a > b:
                return False
    return True


def is_cover(u: Perm, v: Perm) -> bool:
    """True iff v = u * t for a transposition t with length(v) = length(u) + 1."""
    if len(u) != len(v):
        return False
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diff) != 2:
        return False
    i, k = diff
    if u[i] != v[k] or u[k] != v[i]:
        return False
    return length(v) == length(u) + 1


def cover_transposition(u: Perm, v: Perm) -> Transposition:
    """The (i, k) with v = u * (i k), assuming u, v differ in two positions."""
    diff = [i + 1 for i in range(len(u)) if u[i] != v[i]]
    if len(diff) != 2:
        raise DomainError(f"{format_perm(u)} and {format_perm(v)} do not differ by a transposition")
    return (diff[0], diff[1])


def covers_up(w: Perm):
    """All (w*t, t) with length going up by exactly one."""
    n = len(w)
    out = []
    for i, k in combinations(range(1, n + 1), 2):
        if w[i - 1] < w[k - 1] and all(
            not (w[i - 1] < w[j - 1] < w[k - 1]) for j in range(i + 1, k)
        ):
            out.append((apply_transposition(w, (i, k)), (i, k)))
    return out


def covers_down(w: Perm):
    """All (w*t, t) with length going down by exactly one."""
    n = len(w)
    out = []
    for i, k in combinations(range(1, n + 1), 2):
        if w[i - 1] > w[k - 1] and all(
            not (w[k - 1] < w[j - 1] < w[i - 1]) for j in range(i + 1, k)
        ):
            out.append((apply_transposition(w, (i, k)), (i, k)))
    return out


def descents(w: Perm, side: str = "right") -> frozenset:
    """Descent set as indices of simple reflections.

    right: {i : w(i) > w(i+1)}; left: right descents of the inverse.
    """
    if side == "left":
        return descents(inverse(w), "right")
    if side != "right":
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def all_perms(n: int):
    """All of S_n in lexicographic order."""
    return [tuple(p) for p in permutations(range(1, n + 1))]


def all_transpositions(n: int):
    return list(combinations(range(1, n + 1), 2))
