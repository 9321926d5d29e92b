import pytest

from bruhatpoly.errors import DomainError
from bruhatpoly.intervals import interval, inversion_minimal_transpositions
from bruhatpoly.perms import (
    all_perms,
    bruhat_leq,
    descents,
    identity,
    length,
    parse_perm,
)
from bruhatpoly.rpoly import (
    ONE,
    Q,
    Q_MINUS_1,
    ZERO,
    IntPolynomial,
    MatchingObstruction,
    extend_to_special_matching,
    find_special_matchings,
    generalized_r_identity,
    is_special_matching,
    lifting_relations_hold,
    multiplication_matching,
    r_from_tilde,
    r_polynomial,
    r_tilde,
    recurrence_counterexample_check,
    special_matching_r_identity,
)

P = parse_perm


def test_polynomial_arithmetic():
    assert Q * Q == IntPolynomial((0, 0, 1))
    assert (Q_MINUS_1 + ONE) == Q
    assert Q_MINUS_1**2 == IntPolynomial((1, -2, 1))
    assert str(Q_MINUS_1**2) == "q^2 - 2q + 1"
    assert ZERO + ONE == ONE


def test_r_polynomial_base_cases():
    e = identity(4)
    assert r_polynomial(e, e) == ONE
    assert r_polynomial(e, P("2134")) == Q_MINUS_1
    assert r_polynomial(P("2134"), e) == ZERO
    assert r_polynomial(P("2134"), P("1342")) == ZERO


def test_r_polynomial_golden_examples():
    assert str(r_polynomial(P("21345"), P("53421"))) == (
        "q^8 - 4q^7 + 7q^6 - 8q^5 + 8q^4 - 8q^3 + 7q^2 - 4q + 1"
    )
    assert str(r_polynomial(P("31245"), P("43521"))) == (
        "q^6 - 4q^5 + 7q^4 - 8q^3 + 7q^2 - 4q + 1"
    )
    assert str(r_polynomial(P("21345"), P("43521"))) == (
        "q^7 - 4q^6 + 7q^5 - 8q^4 + 8q^3 - 7q^2 + 4q - 1"
    )


def test_degree_and_term_invariants():
    for u in all_perms(4):
        for v in all_perms(4):
            if not bruhat_leq(u, v):
                continue
            r = r_polynomial(u, v)
            d = length(v) - length(u)
            assert r.degree == d
            assert r.coeffs[-1] == 1
            assert r.coeffs[0] == (-1) ** d


def test_descent_choice_independence():
    first = lambda w: min(descents(w))
    last = lambda w: max(descents(w))
    for u, v in [(P("1234"), P("4321")), (P("2143"), P("4231"))]:
        assert r_polynomial(u, v, descent_choice=first) == r_polynomial(
            u, v, descent_choice=last
        )


def test_r_tilde_substitution():
    for u, v in [(P("1234"), P("4231")), (P("1324"), P("4231"))]:
        assert r_tilde(u, v).coeffs[-1] == 1
        assert r_from_tilde(u, v) == r_polynomial(u, v)


def test_generalized_identity_on_minimal_transpositions():
    for u in all_perms(4):
        for v in all_perms(4):
            if u == v or not bruhat_leq(u, v):
                continue
            for t in inversion_minimal_transpositions(u, v):
                assert generalized_r_identity(u, v, t)


def test_generalized_identity_rejects_non_minimal():
    with pytest.raises(DomainError):
        generalized_r_identity(P("1324"), P("4231"), (2, 4))


def test_recurrence_counterexample_report():
    report = recurrence_counterexample_check()
    ce = report["counterexample"]
    assert ce["u"] == P("1324") and ce["v"] == P("4231") and ce["t"] == (2, 4)
    assert ce["lifting_relations_hold"]
    assert not ce["inversion_minimal"]
    assert not ce["identity_holds"]
    cf = report["converse_failure"]
    assert cf["u"] == P("1243") and cf["v"] == P("4312") and cf["t"] == (2, 4)
    assert cf["lifting_relations_hold"]
    assert not cf["inversion_minimal"]
    assert report["inversion_minimal_identity_holds"]


def test_lifting_relations_hold():
    assert lifting_relations_hold(P("1324"), P("4231"), (2, 4))
    # ut = 1234 < u, so the atom relation u < ut fails
    assert not lifting_relations_hold(P("2134"), P("4321"), (1, 2))


def test_multiplication_matching_is_special_on_lower_interval():
    I = interval(identity(4), P("4231"))
    M = multiplication_matching(I, (1, 2))
    assert M is not None
    assert is_special_matching(I, M)


def test_special_matching_r_identity_lower_interval():
    for w in (P("4231"), P("3412")):
        I = interval(identity(4), w)
        for M in find_special_matchings(I):
            assert all(
                special_matching_r_identity(I, M, u) for u in I.elements
            )


def test_find_special_matchings_returns_involutions():
    I = interval(identity(4), P("3412"))
    matchings = find_special_matchings(I)
    assert matchings
    for M in matchings:
        assert is_special_matching(I, M)
        assert all(M[M[x]] == x for x in I.elements)


def test_extend_to_special_matching_positive_golden():
    u, v = P("143265"), P("254163")
    M = extend_to_special_matching(u, v, (3, 6))
    assert isinstance(M, dict)
    assert is_special_matching(interval(u, v), M)
    forced = {
        (P("143265"), P("145263")),
        (P("153264"), P("154263")),
        (P("243165"), P("245163")),
        (P("253164"), P("254163")),
    }
    assert forced <= set(M.items())


def test_extend_to_special_matching_negative_golden():
    obs = extend_to_special_matching(P("1324"), P("4312"), (2, 4))
    assert isinstance(obs, MatchingObstruction)
    assert obs.conflict["kind"] == "cover-violation"
    assert obs.conflict["cover"] == (P("1324"), P("2314"))
    assert obs.conflict["Mx"] == P("1342")
    assert obs.conflict["My"] == P("2413")
    # the forced propagation chain recorded step by step
    forced = dict(obs.steps)
    assert forced[P("4312")] == P("4213")
    assert forced[P("1342")] == P("1324")
    assert "not >=" in str(obs)
