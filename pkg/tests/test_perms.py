import pytest

from bruhatpoly.errors import DomainError
from bruhatpoly.perms import (
    all_perms,
    all_transpositions,
    apply_transposition,
    bruhat_leq,
    compose,
    cover_transposition,
    covers_up,
    descents,
    format_perm,
    identity,
    inverse,
    is_cover,
    length,
    longest_element,
    parse_perm,
)


def test_parse_format_roundtrip():
    for text in ("1", "21", "2143", "53421"):
        assert format_perm(parse_perm(text)) == text


def test_parse_rejects_non_permutations():
    for text in ("1224", "134", "0123"):
        with pytest.raises(DomainError):
            parse_perm(text)


def test_length_counts_inversions():
    assert length((1, 2, 3, 4)) == 0
    assert length((4, 3, 2, 1)) == 6
    w = (3, 1, 4, 2)
    n = len(w)
    brute = sum(
        1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
    )
    assert length(w) == brute


def test_inverse_and_compose():
    w = (3, 1, 4, 2)
    assert compose(w, inverse(w)) == identity(4)
    assert compose(inverse(w), w) == identity(4)


def test_apply_transposition_swaps_positions():
    w = (3, 1, 4, 2)
    assert apply_transposition(w, (1, 3)) == (4, 1, 3, 2)
    assert apply_transposition(w, (2, 4)) == (3, 2, 4, 1)


def test_longest_element():
    assert longest_element(4) == (4, 3, 2, 1)
    assert length(longest_element(5)) == 10


def test_descents():
    assert set(descents((1, 2, 3))) == set()
    assert set(descents((3, 1, 2))) == {1}
    assert set(descents((3, 2, 1))) == {1, 2}


def test_covers_raise_length_by_one():
    w = (2, 1, 4, 3)
    for z, t in covers_up(w):
        assert is_cover(w, z)
        assert length(z) == length(w) + 1
        assert cover_transposition(w, z) == t
        assert apply_transposition(w, t) == z


def test_bruhat_leq_matches_hasse_reachability():
    """The sorted-prefix comparison agrees with transitive closure of the
    cover relation on all of S_4."""
    elems = list(all_perms(4))
    up = {w: {z for z, _ in covers_up(w)} for w in elems}
    reach = {w: {w} for w in elems}
    for w in sorted(elems, key=length, reverse=True):
        for z in up[w]:
            reach[w] |= reach[z]
    for u in elems:
        for v in elems:
            assert bruhat_leq(u, v) == (v in reach[u])


def test_all_transpositions_count():
    assert len(list(all_transpositions(4))) == 6
    assert len(list(all_transpositions(5))) == 10
