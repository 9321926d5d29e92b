import pytest

from bruhatpoly.errors import NotComparableError
from bruhatpoly.intervals import (
    all_maximal_chains,
    atoms,
    chain_transpositions,
    chain_via_atoms,
    chain_via_coatoms,
    coatoms,
    generalized_lift,
    interval,
    inversion_minimal_transpositions,
    is_inversion_minimal,
    minimality_violation,
)
from bruhatpoly.perms import (
    all_perms,
    apply_transposition,
    bruhat_leq,
    is_cover,
    length,
)


def test_interval_elements_are_exactly_the_sandwich():
    u, v = (1, 3, 2, 4), (2, 4, 3, 1)
    I = interval(u, v)
    expected = {
        z for z in all_perms(4) if bruhat_leq(u, z) and bruhat_leq(z, v)
    }
    assert set(I.elements) == expected
    assert len(I) == 8
    assert I.rank == length(v) - length(u)


def test_interval_requires_comparable_endpoints():
    with pytest.raises(NotComparableError):
        interval((2, 4, 3, 1), (1, 3, 2, 4))


def test_atoms_and_coatoms_are_covers():
    u, v = (1, 2, 3, 4), (3, 4, 1, 2)
    for z, t in atoms(interval(u, v)):
        assert is_cover(u, z)
        assert apply_transposition(u, t) == z
    for z, t in coatoms(interval(u, v)):
        assert is_cover(z, v)
        assert apply_transposition(z, t) == v


def test_inversion_minimal_transpositions_exist_and_lift():
    """Every proper interval in S_4 admits an inversion-minimal
    transposition, and each one satisfies both lifting relations."""
    for u in all_perms(4):
        for v in all_perms(4):
            if u == v or not bruhat_leq(u, v):
                continue
            ts = inversion_minimal_transpositions(u, v)
            assert ts, (u, v)
            for t in ts:
                assert is_inversion_minimal(u, v, t)
                ut = apply_transposition(u, t)
                vt = apply_transposition(v, t)
                assert is_cover(vt, v) and bruhat_leq(u, vt)
                assert is_cover(u, ut) and bruhat_leq(ut, v)


def test_generalized_lift_witness():
    u, v = (2, 1, 4, 3), (3, 2, 4, 1)
    t, ut, vt = generalized_lift(u, v)
    assert t == (2, 4)
    assert ut == apply_transposition(u, t)
    assert vt == apply_transposition(v, t)
    assert is_cover(u, ut) and bruhat_leq(ut, v)
    assert is_cover(vt, v) and bruhat_leq(u, vt)


def test_minimality_violation_explains_failures():
    assert minimality_violation((1, 3, 2, 4), (4, 2, 3, 1), (2, 4)) is not None
    why = minimality_violation((1, 3, 2, 4), (4, 2, 3, 1), (2, 4))
    assert why["reason"] in ("endpoints", "proper subinterval")
    u, v = (2, 1, 4, 3), (3, 2, 4, 1)
    for t in inversion_minimal_transpositions(u, v):
        assert minimality_violation(u, v, t) is None


def test_chains_are_saturated():
    u, v = (1, 2, 3, 4), (3, 4, 1, 2)
    I = interval(u, v)
    for chain in (chain_via_atoms(I), chain_via_coatoms(I)):
        assert chain[0] == u and chain[-1] == v
        assert all(is_cover(a, b) for a, b in zip(chain, chain[1:]))
        assert len(chain) == length(v) - length(u) + 1
    ts = chain_transpositions(chain_via_atoms(I))
    assert len(ts) == length(v) - length(u)


def test_all_maximal_chains_count():
    u, v = (1, 2, 3, 4), (1, 3, 4, 2)
    chains = all_maximal_chains(interval(u, v))
    assert all(c[0] == u and c[-1] == v for c in chains)
    assert all(
        is_cover(a, b) for c in chains for a, b in zip(c, c[1:])
    )
    # rank-2 intervals in Bruhat order are diamonds: exactly two chains
    assert len(chains) == 2
