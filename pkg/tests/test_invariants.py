import pytest

from quandles import (
    SymmetricQuandle,
    TwoVarPolynomial,
    all_permutations,
    centralizer,
    conjugacy_class_representatives,
    dihedral,
    good_involutions,
    p_polynomial_formula,
    p_quandle,
    parse_cycles,
    quandle_polynomial,
    trivial,
)

P3 = p_quandle(2, parse_cycles("(1 2)", 2))


def test_polynomial_examples():
    assert quandle_polynomial(P3) == TwoVarPolynomial({(3, 1): 1, (2, 3): 2})
    q = p_quandle(3, parse_cycles("(1 2)", 3))
    assert quandle_polynomial(q) == TwoVarPolynomial({(4, 4): 1, (3, 4): 2, (4, 2): 1})
    for m in (1, 3, 5):
        assert quandle_polynomial(trivial(m)) == TwoVarPolynomial({(m, m): m})


def test_formula_examples():
    assert p_polynomial_formula(2, parse_cycles("(1 2)", 2)) == TwoVarPolynomial(
        {(3, 1): 1, (2, 3): 2})
    assert p_polynomial_formula(4, parse_cycles("(1 2)(3 4)", 4)) == TwoVarPolynomial(
        {(4, 5): 4, (5, 1): 1})
    assert p_polynomial_formula(3, parse_cycles("(1 2 3)", 3)) == TwoVarPolynomial(
        {(3, 4): 3, (4, 1): 1})


def test_polynomial_matches_formula_up_to_n4():
    for n in (2, 3, 4):
        for sigma in all_permutations(n):
            if sigma.is_identity():
                continue
            assert quandle_polynomial(p_quandle(n, sigma)) == p_polynomial_formula(n, sigma)


def test_polynomial_distinguishes_by_fixed_points():
    for n in (2, 3, 4):
        reps = [s for s in conjugacy_class_representatives(n) if not s.is_identity()]
        for a in reps:
            for b in reps:
                same_poly = (quandle_polynomial(p_quandle(n, a))
                             == quandle_polynomial(p_quandle(n, b)))
                assert same_poly == (len(a.fixed_points()) == len(b.fixed_points()))


def test_polynomial_str_order():
    q = p_quandle(3, parse_cycles("(1 2)", 3))
    assert str(quandle_polynomial(q)) == "s^4t^4 + 2s^3t^4 + s^4t^2"
    assert str(quandle_polynomial(P3)) == "2s^2t^3 + s^3t"
    assert str(TwoVarPolynomial({})) == "0"


def test_polynomial_total_is_order():
    for q in (P3, trivial(4), dihedral(5)):
        assert quandle_polynomial(q).total() == q.m


def test_good_involutions_examples():
    assert good_involutions(p_quandle(3, parse_cycles("(1 2 3)", 3))) == []
    found = good_involutions(P3)
    assert [s.rho for s in found] == [(0, 1, 2), (0, 2, 1)]
    assert len(good_involutions(trivial(2))) == 2


def test_good_involutions_brute_force_cross_check():
    # for sigma = (1 2): exactly the involutions fixing 0 whose positive part
    # centralizes sigma
    for n in (2, 3, 4):
        sigma = parse_cycles("(1 2)", n)
        q = p_quandle(n, sigma)
        central = {g.image for g in centralizer(sigma)}
        expected = set()
        for g_img in central:
            rho = (0,) + tuple(g_img)
            if all(rho[rho[x]] == x for x in range(n + 1)):
                expected.add(rho)
        assert {s.rho for s in good_involutions(q)} == expected


def test_good_involutions_iff_sigma_involutive():
    for n in (2, 3, 4, 5):
        for sigma in conjugacy_class_representatives(n):
            if sigma.is_identity():
                continue
            found = good_involutions(p_quandle(n, sigma))
            involutive = all(sigma(sigma(x)) == x for x in range(1, n + 1))
            assert bool(found) == involutive
            if involutive:
                expected = sum(
                    1 for g in centralizer(sigma)
                    if all(g(g(x)) == x for x in range(1, n + 1)))
                assert len(found) == expected


def test_trivial_quandle_all_involutions_good():
    for m in (2, 3, 4):
        involution_count = len(good_involutions(trivial(m)))
        # telephone numbers: involutions of an m-set including the identity
        expected = {2: 2, 3: 4, 4: 10}[m]
        assert involution_count == expected


def test_symmetric_quandle_validation():
    SymmetricQuandle(P3, (0, 2, 1))
    with pytest.raises(ValueError):
        SymmetricQuandle(P3, (1, 0, 2))  # moves 0: second law fails
    with pytest.raises(ValueError):
        SymmetricQuandle(p_quandle(3, parse_cycles("(1 2 3)", 3)), (0, 1, 2, 3))
    with pytest.raises(ValueError):
        SymmetricQuandle(P3, (1, 2, 0))  # not an involution


def test_returned_symmetric_quandles_pass_both_laws():
    for q in (P3, trivial(3), p_quandle(4, parse_cycles("(1 2)(3 4)", 4))):
        for sym in good_involutions(q):
            rho = sym.rho
            for x in q.elements:
                for y in q.elements:
                    assert rho[q.op(x, y)] == q.op(rho[x], y)
                    assert q.op(x, rho[y]) == q.bar(x, y)


def test_formula_also_covers_identity():
    # with the identity permutation the closed form collapses to the trivial
    # quandle's polynomial (n+1) s^(n+1) t^(n+1)
    for n in (1, 2, 3):
        sigma = parse_cycles("()", n)
        assert p_polynomial_formula(n, sigma) == quandle_polynomial(p_quandle(n, sigma))
